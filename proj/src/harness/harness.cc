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

#include "promut/harness/harness.h"

#include <chrono>
#include <set>
#include <utility>

#include "promut/syntax/printer.h"

namespace promut {
namespace {

bool IsBlockDirective(const Term& t, const char* name) {
  return t.is_compound() && t.arity() == 1 && t.name() == name;
}

std::string BlockName(const SourceItem& item) {
  const Term& arg = item.term.arg(0);
  if (!arg.is_atom()) {
    throw ParseError("test unit name must be an atom", item.where, {"atom"});
  }
  return arg.name();
}

Expectation ReadOptions(const Term& options, SourceLocation where) {
  Expectation expectation = Expectation::kSucceed;
  auto one = [&](const Term& opt) {
    if (opt.is_atom() && opt.name() == "fail") {
      expectation = Expectation::kFail;
      return;
    }
    throw UnsupportedOption(FormatTerm(opt), where);
  };
  if (!options.Is(".", 2) && !options.is_nil()) {
    one(options);
    return expectation;
  }
  Term cell = options;
  while (cell.Is(".", 2)) {
    one(cell.arg(0));
    cell = cell.arg(1);
  }
  if (!cell.is_nil()) {
    throw ParseError("malformed test option list", where, {"]"});
  }
  return expectation;
}

}  // namespace

DuplicateTestName::DuplicateTestName(const std::string& suite,
                                     const std::string& name,
                                     SourceLocation where)
    : Error("duplicate test " + name + " in unit " + suite + " at line " +
            std::to_string(where.line)) {}

UnsupportedOption::UnsupportedOption(const std::string& option,
                                     SourceLocation where)
    : Error("unsupported test option " + option + " at line " +
            std::to_string(where.line)) {}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kError: return "error";
    case Verdict::kTimeout: return "timeout";
  }
  return "?";
}

std::vector<TestCase> ParseSuite(std::string_view source) {
  std::vector<TestCase> cases;
  std::optional<std::string> unit;
  std::set<std::pair<std::string, std::string>> seen;
  for (SourceItem& item : ReadItems(source)) {
    if (item.directive) {
      if (IsBlockDirective(item.term, "begin_tests")) {
        if (unit) {
          throw ParseError("nested begin_tests", item.where,
                           {"end_tests(" + *unit + ")"});
        }
        unit = BlockName(item);
        continue;
      }
      if (IsBlockDirective(item.term, "end_tests")) {
        if (!unit || BlockName(item) != *unit) {
          throw ParseError("end_tests without matching begin_tests",
                           item.where,
                           {unit ? "end_tests(" + *unit + ")" : "begin_tests"});
        }
        unit.reset();
        continue;
      }
      throw ParseError("unexpected directive in test file", item.where,
                       {"begin_tests/1", "end_tests/1"});
    }
    if (!unit) {
      throw ParseError("clause outside a test unit", item.where,
                       {"begin_tests/1"});
    }
    Term head = item.term;
    Term body = Term::Atom("true");
    if (head.is_compound() && head.arity() == 2 && head.name() == ":-") {
      body = head.arg(1);
      head = head.arg(0);
    }
    if (!head.is_compound() || head.name() != "test" || head.arity() > 2) {
      throw ParseError("expected a test/1 or test/2 clause", item.where,
                       {"test/1", "test/2"});
    }
    if (!head.arg(0).is_atom()) {
      throw ParseError("test name must be an atom", item.where, {"atom"});
    }
    TestCase tc;
    tc.suite = *unit;
    tc.name = head.arg(0).name();
    if (head.arity() == 2) tc.expectation = ReadOptions(head.arg(1), item.where);
    // Reuse the clause reader to reject non-callable goals.
    tc.goal = ClauseFromTerm(Term::Compound(":-", {Term::Atom("t"), body}),
                             item.where)
                  .body();
    tc.span = item.span;
    tc.where = item.where;
    if (!seen.emplace(tc.suite, tc.name).second) {
      throw DuplicateTestName(tc.suite, tc.name, item.where);
    }
    cases.push_back(std::move(tc));
  }
  if (unit) {
    throw ParseError("missing end_tests", LocationOf(source, source.size()),
                     {"end_tests(" + *unit + ")"});
  }
  return cases;
}

Verdict VerdictFor(Expectation expectation, OutcomeKind outcome) {
  switch (outcome) {
    case OutcomeKind::kSuccess:
      return expectation == Expectation::kSucceed ? Verdict::kPass
                                                  : Verdict::kFail;
    case OutcomeKind::kFailure:
      return expectation == Expectation::kFail ? Verdict::kPass
                                               : Verdict::kFail;
    case OutcomeKind::kError:
      return Verdict::kError;
    case OutcomeKind::kBudgetExhausted:
      return Verdict::kTimeout;
  }
  return Verdict::kError;
}

SuiteRunResult RunSuite(const Program& program,
                        const std::vector<TestCase>& cases,
                        const Budget& budget, const StopAfter& stop_after) {
  SuiteRunResult result;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const TestCase& tc = cases[i];
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome out = Solve(program, tc.goal, budget);
    const std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    TestOutcome& o = result.outcomes.emplace_back();
    o.index = i;
    o.suite = tc.suite;
    o.name = tc.name;
    o.verdict = VerdictFor(tc.expectation, out.kind);
    o.steps_used = out.steps_used;
    o.wall_millis = took.count();
    o.error = std::move(out.error);
    result.all_green = result.all_green && o.verdict == Verdict::kPass;
    result.total_steps += o.steps_used;
    result.total_wall_millis += o.wall_millis;
    if (stop_after && stop_after(o)) break;
  }
  return result;
}

}  // namespace promut
