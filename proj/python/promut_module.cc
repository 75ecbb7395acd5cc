// Copyright 2026 The Promut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "promut/coverage/coverage.h"
#include "promut/engine/solve.h"
#include "promut/error.h"
#include "promut/harness/harness.h"
#include "promut/mutation/operators.h"
#include "promut/report/cli.h"
#include "promut/report/report.h"
#include "promut/runner/runner.h"
#include "promut/syntax/parser.h"
#include "promut/syntax/printer.h"

namespace py = pybind11;

namespace promut {
namespace {

// Results cross the boundary as JSON text; the Python side decodes them.

std::string SolveJson(const std::string& program, const std::string& goal,
                      std::uint64_t step_budget) {
  const Program p = ParseProgram(program);
  const Term g = ParseTerm(goal);
  Budget budget;
  budget.max_steps = step_budget;
  SolveOutcome result;
  {
    py::gil_scoped_release release;
    result = Solve(p, g, budget);
  }
  nlohmann::json bindings = nlohmann::json::object();
  for (const auto& [name, value] : result.bindings) {
    bindings[name] = FormatTerm(value);
  }
  nlohmann::json j = {{"outcome", OutcomeName(result.kind)},
                      {"bindings", bindings},
                      {"steps", result.steps_used}};
  j["error"] = result.error ? nlohmann::json(result.error->ToString())
                            : nlohmann::json(nullptr);
  return j.dump();
}

std::string CampaignJsonText(const std::string& program,
                             const std::string& tests, const std::string& ops,
                             unsigned jobs, std::uint64_t step_budget,
                             bool matrix) {
  const Program p = ParseProgram(program);
  const auto cases = ParseSuite(tests);
  RunnerConfig config;
  config.ops = ParseOperatorSet(ops);
  config.jobs = jobs;
  config.step_budget = step_budget;
  config.fail_fast = !matrix;
  CampaignReport report;
  {
    py::gil_scoped_release release;
    report = RunCampaign(p, cases, config);
  }
  return CampaignJson(report, matrix).dump();
}

std::string CoverageJsonText(const std::string& program,
                             const std::string& tests,
                             std::uint64_t step_budget) {
  const Program p = ParseProgram(program);
  const auto cases = ParseSuite(tests);
  Budget budget;
  budget.max_steps = step_budget;
  CoverageReport report;
  {
    py::gil_scoped_release release;
    report = MeasureCoverage(p, cases, budget);
  }
  return CoverageJson(report).dump();
}

py::tuple Cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"promut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace promut

PYBIND11_MODULE(_promut, m) {
  using namespace promut;
  m.doc() = "Mutation testing for Prolog programs.";
  m.attr("SCHEMA_VERSION") = std::string(kSchemaVersion);

  static py::exception<Error> error(m, "PromutError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("operators", [] {
    std::vector<py::tuple> rows;
    for (const OperatorInfo& info : Operators()) {
      rows.push_back(py::make_tuple(std::string(info.name),
                                    std::string(info.label), info.sensible));
    }
    return rows;
  });
  m.def("format_program",
        [](const std::string& text) { return PrettyPrint(ParseProgram(text)); },
        py::arg("text"));
  m.def("solve_json", &SolveJson, py::arg("program"), py::arg("goal"),
        py::arg("step_budget") = 1'000'000);
  m.def("campaign_json", &CampaignJsonText, py::arg("program"),
        py::arg("tests"), py::arg("ops") = "all", py::arg("jobs") = 1,
        py::arg("step_budget") = 1'000'000, py::arg("matrix") = false);
  m.def("coverage_json", &CoverageJsonText, py::arg("program"),
        py::arg("tests"), py::arg("step_budget") = 1'000'000);
  m.def("cli", &Cli, py::arg("args"));
}
