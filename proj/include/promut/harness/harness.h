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

#ifndef PROMUT_HARNESS_HARNESS_H_
#define PROMUT_HARNESS_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "promut/engine/solve.h"
#include "promut/error.h"
#include "promut/syntax/parser.h"
#include "promut/syntax/term.h"

namespace promut {

enum class Expectation { kSucceed, kFail };

struct TestCase {
  std::string suite;
  std::string name;
  Term goal;  // variables numbered from zero
  Expectation expectation = Expectation::kSucceed;
  Span span;
  SourceLocation where;
};

enum class Verdict { kPass, kFail, kError, kTimeout };
std::string_view VerdictName(Verdict verdict);

struct TestOutcome {
  std::size_t index = 0;  // into the case list
  std::string suite;
  std::string name;
  Verdict verdict = Verdict::kPass;
  std::uint64_t steps_used = 0;
  double wall_millis = 0;
  std::optional<EngineError> error;
};

struct SuiteRunResult {
  std::vector<TestOutcome> outcomes;
  bool all_green = true;
  std::uint64_t total_steps = 0;
  double total_wall_millis = 0;
};

class DuplicateTestName : public Error {
 public:
  DuplicateTestName(const std::string& suite, const std::string& name,
                    SourceLocation where);
};

class UnsupportedOption : public Error {
 public:
  UnsupportedOption(const std::string& option, SourceLocation where);
};

// Reads `:- begin_tests(S).` ... `:- end_tests(S).` blocks holding
// `test(Name) :- Body.` and `test(Name, [fail]) :- Body.` clauses.
std::vector<TestCase> ParseSuite(std::string_view source);

Verdict VerdictFor(Expectation expectation, OutcomeKind outcome);

// Called after each case; returning true skips the remaining cases.
using StopAfter = std::function<bool(const TestOutcome&)>;

// Runs the cases in order, each with its own copy of `budget`.
SuiteRunResult RunSuite(const Program& program,
                        const std::vector<TestCase>& cases,
                        const Budget& budget,
                        const StopAfter& stop_after = nullptr);

}  // namespace promut

#endif  // PROMUT_HARNESS_HARNESS_H_
