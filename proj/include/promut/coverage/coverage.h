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

#ifndef PROMUT_COVERAGE_COVERAGE_H_
#define PROMUT_COVERAGE_COVERAGE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "promut/engine/solve.h"
#include "promut/harness/harness.h"
#include "promut/runner/runner.h"
#include "promut/syntax/program.h"

namespace promut {

struct CoverageCount {
  std::uint64_t covered = 0;
  std::uint64_t total = 0;

  // covered / total; empty when total is 0.
  std::optional<double> Ratio() const;
  friend bool operator==(const CoverageCount&, const CoverageCount&) = default;
};

struct CoverageGap {
  PredKey pred;
  int clause = 0;
  TermPath path;
  friend bool operator==(const CoverageGap&, const CoverageGap&) = default;
};

struct CoverageReport {
  CoverageCount subgoal;
  CoverageCount clause;
  CoverageCount predicate;
  // Uncovered sub-goals in program order.
  std::vector<CoverageGap> uncovered;
};

// Sub-goals of a clause body: goal nodes below `,`, `;` and `->`. A `\+ G`
// is one sub-goal; G is not looked into. A fact has `true` at [1].
std::vector<TermPath> SubgoalInventory(const Clause& clause);

// Exits seen during execution, keyed by clause position and path.
using ExitSet = std::set<std::pair<std::size_t, TermPath>>;

// Records the exit ports of user-program goals into `exits`.
TraceSink ExitCollector(const Program& program, ExitSet& exits);

CoverageReport CoverageFromExits(const Program& program, const ExitSet& exits);

// Runs every case with a fresh `budget` and derives the three tiers.
CoverageReport MeasureCoverage(const Program& program,
                               const std::vector<TestCase>& cases,
                               const Budget& budget);

struct ComparisonRow {
  std::size_t lines_of_code = 0;
  std::size_t predicates = 0;
  std::size_t clauses = 0;
  std::optional<double> clause_coverage;
  std::optional<double> predicate_coverage;
  std::optional<double> subgoal_coverage;
  std::optional<double> mutation_coverage;
};

ComparisonRow Compare(const Program& program, const CoverageReport& coverage,
                      const CampaignReport& campaign);

}  // namespace promut

#endif  // PROMUT_COVERAGE_COVERAGE_H_
