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

#ifndef PROMUT_ENGINE_SOLVE_H_
#define PROMUT_ENGINE_SOLVE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "promut/syntax/program.h"
#include "promut/syntax/term.h"

namespace promut {

struct Budget {
  // One step is one goal dispatch or one retry of a further clause.
  std::uint64_t max_steps = 1'000'000;
  std::optional<std::chrono::milliseconds> wall_limit;
};

enum class Port { kCall, kExit, kRedo, kFail };
std::string_view PortName(Port port);

// Position of a goal in the user program.
struct Subject {
  PredKey pred;
  int clause = 0;
  TermPath path;
};
using SubjectPtr = std::shared_ptr<const Subject>;

struct TraceEvent {
  Port port = Port::kCall;
  // Null for the query itself, goals run through call/N and prelude code.
  SubjectPtr subject;
  std::uint64_t step = 0;
  // Identifies one execution of one goal across its ports.
  std::uint64_t invocation = 0;
  // The goal as instantiated when the port was reached.
  std::string goal;
};
using TraceSink = std::function<void(const TraceEvent&)>;

enum class OutcomeKind { kSuccess, kFailure, kError, kBudgetExhausted };
std::string_view OutcomeName(OutcomeKind kind);

struct EngineError {
  Term formal;  // e.g. existence_error(procedure, missing/1)
  Span span;    // of the goal that raised it

  const std::string& kind() const { return formal.name(); }
  std::string ToString() const;
};

struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::kFailure;
  // Success only: each named query variable and its value.
  std::vector<std::pair<std::string, Term>> bindings;
  std::optional<EngineError> error;
  std::uint64_t steps_used = 0;
  // BudgetExhausted because the wall-clock limit ran out.
  bool wall_clock_expired = false;
};

// Proves `goal` once against `program`, falling back to the prelude for
// predicates the program does not define. Variables in `goal` must be
// numbered from zero, as ParseTerm does. `program` is never modified.
SolveOutcome Solve(const Program& program, const Term& goal,
                   const Budget& budget = {}, const TraceSink& trace = nullptr);

// append/3, member/2, length/2 and reverse/2, written in the subset.
const Program& Prelude();

}  // namespace promut

#endif  // PROMUT_ENGINE_SOLVE_H_
