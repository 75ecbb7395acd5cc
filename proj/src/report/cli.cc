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

#include "promut/report/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "promut/coverage/coverage.h"
#include "promut/harness/harness.h"
#include "promut/mutation/operators.h"
#include "promut/report/report.h"
#include "promut/runner/runner.h"
#include "promut/syntax/parser.h"
#include "promut/syntax/printer.h"

namespace promut {
namespace {

namespace fs = std::filesystem;

// Bad input: reported with exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename F>
auto WithFileContext(const std::string& path, F&& parse) {
  try {
    return parse(ReadText(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": " + e.what());
  } catch (const UnsupportedConstruct& e) {
    throw InputError(path + ":" + std::to_string(e.where().line) + ":" +
                     std::to_string(e.where().column) + ": " + e.what());
  } catch (const DuplicateTestName& e) {
    throw InputError(path + ": " + e.what());
  } catch (const UnsupportedOption& e) {
    throw InputError(path + ": " + e.what());
  }
}

Program LoadProgram(const std::string& path) {
  return WithFileContext(path, [](const std::string& s) {
    return ParseProgram(s);
  });
}

std::vector<TestCase> LoadTests(const std::vector<std::string>& paths) {
  std::vector<TestCase> cases;
  std::set<std::pair<std::string, std::string>> seen;
  for (const std::string& path : paths) {
    for (TestCase& tc : WithFileContext(path, [](const std::string& s) {
           return ParseSuite(s);
         })) {
      if (!seen.emplace(tc.suite, tc.name).second) {
        throw InputError(path + ": duplicate test " + tc.name + " in unit " +
                         tc.suite);
      }
      cases.push_back(std::move(tc));
    }
  }
  return cases;
}

unsigned DefaultJobs() {
  if (const char* env = std::getenv("PROMUT_JOBS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Globals {
  std::string format = "table";
  bool quiet = false;
  std::uint64_t seed = 0;

  bool json() const { return format == "json"; }
};

struct RunArgs {
  std::string program;
  std::vector<std::string> tests;
  std::string ops = "all";
  std::int64_t timeout_constant_ms = 1000;
  std::uint64_t step_budget = 1'000'000;
  unsigned jobs = 1;
  bool matrix = false;
  double min_score = 0;
  bool compare = false;
};

RunnerConfig ConfigFrom(const RunArgs& a) {
  RunnerConfig config;
  config.ops = ParseOperatorSet(a.ops);
  config.timeout_constant = std::chrono::milliseconds(a.timeout_constant_ms);
  config.step_budget = a.step_budget;
  config.jobs = a.jobs;
  config.fail_fast = !a.matrix;
  return config;
}

int DoRun(const Globals& g, const RunArgs& a, std::ostream& out) {
  const Program program = LoadProgram(a.program);
  const std::vector<TestCase> cases = LoadTests(a.tests);
  const CampaignReport report = RunCampaign(program, cases, ConfigFrom(a));
  if (g.json()) {
    out << Dump(CampaignJson(report, a.matrix));
  } else if (g.quiet) {
    out << "mutation score: " << FormatPercent(report.mutation_score) << "\n";
  } else {
    out << "baseline: " << report.baseline.outcomes.size() << " tests, "
        << report.baseline.total_steps << " steps\n";
    out << RenderOperatorMatrix(report).body;
    if (a.matrix) {
      for (const MutantResult& m : report.mutants) {
        out << m.site.id << " " << Info(m.site.op).name << " "
            << DescribeSite(m.site) << ":";
        for (Verdict v : m.verdicts) out << " " << VerdictName(v);
        out << "\n";
      }
    }
  }
  if (a.min_score > 0 &&
      (!report.mutation_score || *report.mutation_score < a.min_score)) {
    return kExitBelowMinScore;
  }
  return kExitOk;
}

int DoCoverage(const Globals& g, const RunArgs& a, std::ostream& out) {
  const Program program = LoadProgram(a.program);
  const std::vector<TestCase> cases = LoadTests(a.tests);
  Budget budget;
  budget.max_steps = a.step_budget;
  const CoverageReport coverage = MeasureCoverage(program, cases, budget);
  if (!a.compare) {
    out << (g.json() ? Dump(CoverageJson(coverage)) : CoverageTable(coverage));
    return kExitOk;
  }
  if (cases.empty()) throw EmptySuite();
  const CampaignReport campaign = RunCampaign(program, cases, ConfigFrom(a));
  const ComparisonRow row = Compare(program, coverage, campaign);
  if (g.json()) {
    out << Dump(ComparisonJson(row));
  } else {
    out << ComparisonTable(fs::path(a.program).stem().string(), row);
  }
  return kExitOk;
}

int DoMutants(const Globals& g, const std::string& path,
              const std::string& ops, const std::string& emit_dir,
              std::ostream& out) {
  const Program program = LoadProgram(path);
  const std::vector<MutationSite> sites =
      EnumerateSites(program, ParseOperatorSet(ops));
  nlohmann::json manifest = nlohmann::json::array();
  if (!emit_dir.empty()) fs::create_directories(emit_dir);
  for (const MutationSite& site : sites) {
    const Mutant m = Apply(program, site);
    nlohmann::json entry = SiteJson(site);
    entry["diff"] = m.diff;
    const std::string file =
        std::to_string(site.id) + "_" + std::string(Info(site.op).name) + ".pl";
    entry["file"] = file;
    if (!emit_dir.empty()) {
      std::ofstream f(fs::path(emit_dir) / file, std::ios::binary);
      f << PrettyPrint(m.program);
      if (!f) throw InputError("cannot write " + file);
    }
    if (!g.json() && !g.quiet) {
      out << site.id << " " << Info(site.op).name << " " << DescribeSite(site)
          << "\n";
    }
    manifest.push_back(std::move(entry));
  }
  if (!emit_dir.empty()) {
    std::ofstream f(fs::path(emit_dir) / "manifest.json", std::ios::binary);
    f << Dump(manifest);
    if (!f) throw InputError("cannot write manifest.json");
  }
  if (g.json()) out << Dump(manifest);
  return kExitOk;
}

int DoListOps(const Globals& g, std::ostream& out) {
  if (g.json()) {
    nlohmann::json list = nlohmann::json::array();
    for (const OperatorInfo& info : Operators()) {
      list.push_back({{"operator", info.name},
                      {"label", info.label},
                      {"class", info.sensible ? "sensible" : "foolish"}});
    }
    out << Dump(list);
    return kExitOk;
  }
  for (const OperatorInfo& info : Operators()) {
    out << info.name << " " << (info.sensible ? "sensible" : "foolish") << "\n";
  }
  return kExitOk;
}

int DoSolve(const Globals& g, const std::string& path, const std::string& query,
            bool trace, std::uint64_t steps, std::ostream& out) {
  const Program program = LoadProgram(path);
  Term goal;
  try {
    goal = ParseTerm(query);
  } catch (const ParseError& e) {
    throw InputError("goal:" + std::to_string(e.column()) + ": " + e.what());
  }
  if (!goal.is_callable()) throw InputError("goal is not callable");
  Budget budget;
  budget.max_steps = steps;
  TraceSink sink;
  if (trace) {
    sink = [&out](const TraceEvent& e) {
      out << TraceEventJson(e).dump() << "\n";
    };
  }
  const SolveOutcome result = Solve(program, goal, budget, sink);
  FormatOptions quoted;
  if (g.json() || trace) {
    nlohmann::json bindings = nlohmann::json::object();
    for (const auto& [name, value] : result.bindings) {
      bindings[name] = FormatTerm(value, quoted);
    }
    nlohmann::json j = {{"outcome", OutcomeName(result.kind)},
                        {"bindings", bindings},
                        {"steps", result.steps_used}};
    j["error"] = result.error ? nlohmann::json(result.error->ToString())
                              : nlohmann::json(nullptr);
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << OutcomeName(result.kind) << "\n";
  for (const auto& [name, value] : result.bindings) {
    out << name << " = " << FormatTerm(value, quoted) << "\n";
  }
  if (result.error) out << result.error->ToString() << "\n";
  return kExitOk;
}

void AddRunnerFlags(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("--ops", a.ops,
                  "Operators: all, sensible, foolish or a comma list");
  cmd->add_option("--timeout-constant-ms", a.timeout_constant_ms,
                  "Constant part of the wall-clock limit")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", a.jobs, "Mutants run in parallel")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Mutation testing for Prolog programs", "promut"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--quiet", g.quiet, "Print less");
  app.add_option("--seed", g.seed, "Reserved; campaigns are deterministic");

  RunArgs run;
  run.jobs = DefaultJobs();
  CLI::App* run_cmd = app.add_subcommand("run", "Run a mutation campaign");
  run_cmd->add_option("program", run.program)->required();
  run_cmd->add_option("--tests", run.tests, "Test file (repeatable)")
      ->required();
  AddRunnerFlags(run_cmd, run);
  run_cmd->add_option("--step-budget", run.step_budget, "Steps per test")
      ->check(CLI::PositiveNumber);
  run_cmd->add_flag("--matrix", run.matrix,
                    "Run every test on every mutant and list verdicts");
  run_cmd->add_option("--min-score", run.min_score,
                      "Fail with exit code 3 below this score (0..1)")
      ->check(CLI::Range(0.0, 1.0));

  RunArgs cov;
  cov.jobs = DefaultJobs();
  CLI::App* cov_cmd = app.add_subcommand("coverage", "Measure coverage");
  cov_cmd->add_option("program", cov.program)->required();
  cov_cmd->add_option("--tests", cov.tests, "Test file (repeatable)")
      ->required();
  cov_cmd->add_option("--step-budget", cov.step_budget, "Steps per test")
      ->check(CLI::PositiveNumber);
  cov_cmd->add_flag("--compare", cov.compare,
                    "Also run a campaign and print a comparison row");
  AddRunnerFlags(cov_cmd, cov);

  std::string mut_program;
  std::string mut_ops = "all";
  std::string emit_dir;
  CLI::App* mut_cmd = app.add_subcommand("mutants", "Write mutants");
  mut_cmd->add_option("program", mut_program)->required();
  mut_cmd->add_option("--ops", mut_ops, "Operators");
  mut_cmd->add_option("--emit-dir", emit_dir,
                      "Directory for mutant files and manifest.json");

  app.add_subcommand("list-ops", "List mutation operators");

  std::string solve_program;
  std::string solve_goal;
  bool solve_trace = false;
  std::uint64_t solve_steps = 1'000'000;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Prove one goal");
  solve_cmd->add_option("program", solve_program)->required();
  solve_cmd->add_option("goal", solve_goal)->required();
  solve_cmd->add_flag("--trace", solve_trace, "Print ports as JSON lines");
  solve_cmd->add_option("--step-budget", solve_steps, "Steps")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return DoRun(g, run, out);
    if (*cov_cmd) return DoCoverage(g, cov, out);
    if (*mut_cmd) return DoMutants(g, mut_program, mut_ops, emit_dir, out);
    if (*solve_cmd) {
      return DoSolve(g, solve_program, solve_goal, solve_trace, solve_steps,
                     out);
    }
    return DoListOps(g, out);
  } catch (const BaselineRejected& e) {
    err << "promut: " << e.what() << "\n";
    return kExitBaselineRejected;
  } catch (const EmptySuite& e) {
    err << "promut: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "promut: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "promut: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace promut
