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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "promut/coverage/coverage.h"
#include "promut/syntax/parser.h"
#include "test_util.h"

namespace promut {
namespace {

using ::promut::testing::CorpusPath;
using ::promut::testing::CorpusPrograms;
using ::promut::testing::ReadFile;

std::vector<TestCase> Suite(const std::string& body) {
  return ParseSuite(":- begin_tests(t).\n" + body + ":- end_tests(t).\n");
}

TEST(Inventory, ControlIsTransparentNegationIsNot) {
  const Program p =
      ParseProgram("p :- a, (b ; c -> d), \\+ (e, f), !.\nq.\nr :- true.\n");
  EXPECT_EQ(SubgoalInventory(p.clauses()[0]),
            (std::vector<TermPath>{{1, 0},
                                   {1, 1, 0, 0},
                                   {1, 1, 0, 1, 0},
                                   {1, 1, 0, 1, 1},
                                   {1, 1, 1, 0},
                                   {1, 1, 1, 1}}));
  EXPECT_EQ(SubgoalInventory(p.clauses()[1]), (std::vector<TermPath>{{1}}));
  EXPECT_EQ(SubgoalInventory(p.clauses()[2]), (std::vector<TermPath>{{1}}));
}

TEST(Measure, MinBothTests) {
  const Program min = ParseProgram(ReadFile(CorpusPath("min.pl")));
  const auto cases = ParseSuite(ReadFile(CorpusPath("min_tests.pl")));
  const CoverageReport r = MeasureCoverage(min, cases, {});
  EXPECT_EQ(r.subgoal, (CoverageCount{3, 3}));
  EXPECT_EQ(r.clause, (CoverageCount{2, 2}));
  EXPECT_EQ(r.predicate, (CoverageCount{1, 1}));
  EXPECT_TRUE(r.uncovered.empty());
}

TEST(Measure, MinLeftOnly) {
  const Program min = ParseProgram(ReadFile(CorpusPath("min.pl")));
  const CoverageReport r =
      MeasureCoverage(min, Suite("test(t) :- min(1,2,1).\n"), {});
  EXPECT_EQ(r.subgoal, (CoverageCount{2, 3}));
  EXPECT_EQ(r.clause, (CoverageCount{1, 2}));
  EXPECT_EQ(r.predicate, (CoverageCount{0, 1}));
  EXPECT_DOUBLE_EQ(*r.clause.Ratio(), 0.5);
  EXPECT_DOUBLE_EQ(*r.predicate.Ratio(), 0.0);
  ASSERT_EQ(r.uncovered.size(), 1u);
  EXPECT_EQ(r.uncovered[0], (CoverageGap{PredKey{"min", 3}, 2, TermPath{1}}));
}

TEST(Measure, EmptySuiteCoversNothing) {
  const Program min = ParseProgram(ReadFile(CorpusPath("min.pl")));
  const CoverageReport r = MeasureCoverage(min, {}, {});
  EXPECT_EQ(r.subgoal, (CoverageCount{0, 3}));
  EXPECT_EQ(r.clause, (CoverageCount{0, 2}));
  EXPECT_EQ(r.predicate, (CoverageCount{0, 1}));
  EXPECT_DOUBLE_EQ(*r.subgoal.Ratio(), 0.0);
  EXPECT_FALSE(CoverageCount{}.Ratio().has_value());
}

TEST(Measure, NegationCountsItsOwnExitOnly) {
  const Program p = ParseProgram("p :- \\+ q.\nq :- fail.\n");
  const CoverageReport r = MeasureCoverage(p, Suite("test(t) :- p.\n"), {});
  EXPECT_EQ(r.subgoal, (CoverageCount{1, 2}));
  ASSERT_EQ(r.uncovered.size(), 1u);
  EXPECT_EQ(r.uncovered[0].pred.ToString(), "q/0");
}

TEST(Measure, FailingTestsStillCount) {
  const Program p = ParseProgram("p :- a, b.\na.\nb :- fail.\n");
  const CoverageReport r = MeasureCoverage(p, Suite("test(t) :- p.\n"), {});
  // a exits inside a failing run.
  EXPECT_EQ(r.subgoal, (CoverageCount{2, 4}));
  EXPECT_EQ(r.clause, (CoverageCount{1, 3}));
}

TEST(Measure, FactCoveredIffHeadExits) {
  const Program p = ParseProgram("f(1).\nf(2).\n");
  const CoverageReport r = MeasureCoverage(p, Suite("test(t) :- f(2).\n"), {});
  EXPECT_EQ(r.clause, (CoverageCount{1, 2}));
  ASSERT_EQ(r.uncovered.size(), 1u);
  EXPECT_EQ(r.uncovered[0].clause, 1);
}

// Predicate covered => its clauses covered => their sub-goals covered, and
// adding a test never lowers a covered count.
TEST(Properties, TierImplicationAndMonotonicity) {
  for (const std::string& stem : CorpusPrograms()) {
    SCOPED_TRACE(stem);
    const Program p = ParseProgram(ReadFile(CorpusPath(stem + ".pl")));
    const auto cases = ParseSuite(ReadFile(CorpusPath(stem + "_tests.pl")));
    CoverageReport prev = MeasureCoverage(p, {}, {});
    for (std::size_t n = 1; n <= cases.size(); ++n) {
      const std::vector<TestCase> prefix(cases.begin(), cases.begin() + n);
      ExitSet exits;
      const TraceSink sink = ExitCollector(p, exits);
      for (const TestCase& tc : prefix) Solve(p, tc.goal, {}, sink);
      const CoverageReport r = CoverageFromExits(p, exits);
      EXPECT_GE(r.subgoal.covered, prev.subgoal.covered);
      EXPECT_GE(r.clause.covered, prev.clause.covered);
      EXPECT_GE(r.predicate.covered, prev.predicate.covered);
      for (const CoverageCount* c : {&r.subgoal, &r.clause, &r.predicate}) {
        EXPECT_LE(c->covered, c->total);
      }
      for (std::size_t pos = 0; pos < p.clauses().size(); ++pos) {
        const Clause& c = p.clauses()[pos];
        bool clause_ok = true;
        for (const TermPath& path : SubgoalInventory(c)) {
          clause_ok = clause_ok && exits.count({pos, path});
        }
        bool listed = false;
        for (const CoverageGap& g : r.uncovered) {
          listed = listed || (g.pred == c.key() && g.clause == c.index());
        }
        EXPECT_EQ(clause_ok, !listed);
      }
      prev = r;
    }
  }
}

TEST(Compare, MinRow) {
  const Program min = ParseProgram(ReadFile(CorpusPath("min.pl")));
  const auto cases = ParseSuite(ReadFile(CorpusPath("min_tests.pl")));
  const CampaignReport campaign = RunCampaign(min, cases, {});
  const ComparisonRow row =
      Compare(min, MeasureCoverage(min, cases, {}), campaign);
  EXPECT_EQ(row.predicates, 1u);
  EXPECT_EQ(row.clauses, 2u);
  EXPECT_EQ(row.lines_of_code, 3u);
  EXPECT_DOUBLE_EQ(*row.clause_coverage, 1.0);
  EXPECT_EQ(row.mutation_coverage, campaign.mutation_score);
}

}  // namespace
}  // namespace promut
