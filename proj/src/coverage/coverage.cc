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

#include "promut/coverage/coverage.h"

namespace promut {
namespace {

void CollectGoals(const Term& goal, const TermPath& path,
                  std::vector<TermPath>& out) {
  if (goal.Is(",", 2) || goal.Is(";", 2) || goal.Is("->", 2)) {
    CollectGoals(goal.arg(0), path.Child(0), out);
    CollectGoals(goal.arg(1), path.Child(1), out);
    return;
  }
  out.push_back(path);
}

}  // namespace

std::optional<double> CoverageCount::Ratio() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(covered) / static_cast<double>(total);
}

std::vector<TermPath> SubgoalInventory(const Clause& clause) {
  std::vector<TermPath> out;
  CollectGoals(clause.body(), TermPath{1}, out);
  return out;
}

TraceSink ExitCollector(const Program& program, ExitSet& exits) {
  return [&program, &exits](const TraceEvent& e) {
    if (e.port != Port::kExit || !e.subject) return;
    const auto* positions =
        program.Lookup(PredKeyRef{e.subject->pred.name, e.subject->pred.arity});
    if (!positions || e.subject->clause < 1 ||
        static_cast<std::size_t>(e.subject->clause) > positions->size()) {
      return;
    }
    exits.emplace((*positions)[e.subject->clause - 1], e.subject->path);
  };
}

CoverageReport CoverageFromExits(const Program& program, const ExitSet& exits) {
  CoverageReport report;
  std::vector<bool> clause_covered(program.clauses().size(), false);
  for (std::size_t pos = 0; pos < program.clauses().size(); ++pos) {
    const Clause& c = program.clauses()[pos];
    bool all = true;
    for (const TermPath& path : SubgoalInventory(c)) {
      ++report.subgoal.total;
      if (exits.count({pos, path})) {
        ++report.subgoal.covered;
      } else {
        all = false;
        report.uncovered.push_back({c.key(), c.index(), path});
      }
    }
    clause_covered[pos] = all;
    ++report.clause.total;
    if (all) ++report.clause.covered;
  }
  for (const auto& [key, positions] : program.index()) {
    ++report.predicate.total;
    bool all = true;
    for (std::size_t pos : positions) all = all && clause_covered[pos];
    if (all) ++report.predicate.covered;
  }
  return report;
}

CoverageReport MeasureCoverage(const Program& program,
                               const std::vector<TestCase>& cases,
                               const Budget& budget) {
  ExitSet exits;
  const TraceSink sink = ExitCollector(program, exits);
  for (const TestCase& tc : cases) Solve(program, tc.goal, budget, sink);
  return CoverageFromExits(program, exits);
}

ComparisonRow Compare(const Program& program, const CoverageReport& coverage,
                      const CampaignReport& campaign) {
  ComparisonRow row;
  row.lines_of_code = program.lines_of_code();
  row.predicates = program.predicates().size();
  row.clauses = program.clauses().size();
  row.clause_coverage = coverage.clause.Ratio();
  row.predicate_coverage = coverage.predicate.Ratio();
  row.subgoal_coverage = coverage.subgoal.Ratio();
  row.mutation_coverage = campaign.mutation_score;
  return row;
}

}  // namespace promut
