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

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "promut/runner/runner.h"
#include "promut/syntax/parser.h"
#include "test_util.h"

namespace promut {
namespace {

using ::promut::testing::CorpusPath;
using ::promut::testing::CorpusPrograms;
using ::promut::testing::ReadFile;

struct Fixture {
  Program program;
  std::vector<TestCase> cases;
};

Fixture Load(const std::string& stem) {
  return {ParseProgram(ReadFile(CorpusPath(stem + ".pl"))),
          ParseSuite(ReadFile(CorpusPath(stem + "_tests.pl")))};
}

RunnerConfig Only(OperatorId op) {
  RunnerConfig config;
  config.ops = {op};
  return config;
}

TEST(Baseline, GreenRejectedEmpty) {
  const Fixture min = Load("min");
  const SuiteRunResult r = Baseline(min.program, min.cases, {});
  EXPECT_TRUE(r.all_green);
  EXPECT_EQ(r.outcomes.size(), 2u);
  EXPECT_GT(r.total_steps, 0u);

  auto cases = min.cases;
  const auto wrong = ParseSuite(
      ":- begin_tests(min).\ntest(wrong) :- min(2,1,2).\n:- end_tests(min).\n");
  cases.push_back(wrong[0]);
  try {
    Baseline(min.program, cases, {});
    FAIL() << "expected BaselineRejected";
  } catch (const BaselineRejected& e) {
    EXPECT_EQ(e.failing(), std::vector<std::string>{"min:wrong"});
  }
  EXPECT_THROW(Baseline(min.program, {}, {}), EmptySuite);
  EXPECT_THROW(RunCampaign(min.program, {}, {}), EmptySuite);
}

TEST(Score, Arithmetic) {
  EXPECT_DOUBLE_EQ(*Score({.alive = 1, .dead = 9, .timeout = 2}), 0.9);
  EXPECT_FALSE(Score({.alive = 0, .dead = 0, .timeout = 5}).has_value());
  EXPECT_DOUBLE_EQ(*Score({.alive = 4, .dead = 0, .timeout = 0}), 0.0);
  EXPECT_DOUBLE_EQ(*Score({.alive = 0, .dead = 3, .timeout = 0}), 1.0);
  for (std::uint64_t a = 0; a < 6; ++a) {
    for (std::uint64_t d = 0; d < 6; ++d) {
      const Tally base{.alive = a, .dead = d, .timeout = 0};
      for (std::uint64_t t = 1; t < 4; ++t) {
        const Tally more{.alive = a, .dead = d, .timeout = t};
        EXPECT_EQ(Score(base), Score(more));
      }
    }
  }
}

TEST(Classify, Rules) {
  using V = Verdict;
  EXPECT_EQ(Classify({}), MutantStatus::kAlive);
  EXPECT_EQ(Classify({V::kPass, V::kPass}), MutantStatus::kAlive);
  EXPECT_EQ(Classify({V::kPass, V::kFail}), MutantStatus::kDead);
  EXPECT_EQ(Classify({V::kError}), MutantStatus::kDead);
  EXPECT_EQ(Classify({V::kTimeout, V::kPass}), MutantStatus::kTimeout);
  EXPECT_EQ(Classify({V::kTimeout, V::kFail}), MutantStatus::kDead);
}

TEST(RunCampaign, MinRelationalKill) {
  const Fixture min = Load("min");
  const CampaignReport r =
      RunCampaign(min.program, min.cases, Only(OperatorId::kLtToGe));
  ASSERT_EQ(r.mutants.size(), 1u);
  EXPECT_EQ(r.mutants[0].status, MutantStatus::kDead);
  EXPECT_EQ(r.mutants[0].first_killing_test, "min:min_left");
  EXPECT_EQ(r.per_operator[static_cast<int>(OperatorId::kLtToGe)].dead, 1u);
  EXPECT_DOUBLE_EQ(*r.mutation_score, 1.0);
}

// Hand trace: with L \= [], wrapped_sort([2,1],[1,2]) commits to clause 1
// and then fails on [1,2] = []; the R \= [] mutant fails the empty test.
TEST(RunCampaign, WrappedSortUnificationMutantsDie) {
  const Fixture ws = Load("wrapped_sort");
  const CampaignReport r =
      RunCampaign(ws.program, ws.cases, Only(OperatorId::kEqToNeq));
  ASSERT_EQ(r.mutants.size(), 2u);
  EXPECT_EQ(r.mutants[0].status, MutantStatus::kDead);
  EXPECT_EQ(r.mutants[0].first_killing_test, "wrapped_sort:unsorted");
  EXPECT_EQ(r.mutants[1].status, MutantStatus::kDead);
  EXPECT_EQ(r.mutants[1].first_killing_test, "wrapped_sort:empty");
}

TEST(RunCampaign, ReversedAddToListTimesOut) {
  const Fixture f = Load("add_to_list");
  RunnerConfig config = Only(OperatorId::kReversePredicate);
  config.step_budget = 1'000'000;
  const CampaignReport r = RunCampaign(f.program, f.cases, config);
  ASSERT_EQ(r.mutants.size(), 1u);
  EXPECT_EQ(r.mutants[0].status, MutantStatus::kTimeout);
  EXPECT_EQ(r.mutants[0].steps_used, r.step_limit);
  EXPECT_EQ(r.step_limit, 100'000 + 2 * r.baseline.total_steps);
  EXPECT_FALSE(r.mutation_score.has_value());
  EXPECT_EQ(r.totals, (Tally{.alive = 0, .dead = 0, .timeout = 1}));
}

TEST(RunCampaign, StepBudgetCapsTheAllowance) {
  const Fixture f = Load("add_to_list");
  RunnerConfig config = Only(OperatorId::kReversePredicate);
  config.step_budget = 5000;
  const CampaignReport r = RunCampaign(f.program, f.cases, config);
  EXPECT_EQ(r.step_limit, 5000u);
  EXPECT_EQ(r.mutants[0].steps_used, 5000u);
}

TEST(RunCampaign, EquivalentReversalSurvives) {
  const Fixture f = Load("is_list");
  const CampaignReport r =
      RunCampaign(f.program, f.cases, Only(OperatorId::kReversePredicate));
  ASSERT_EQ(r.mutants.size(), 1u);
  EXPECT_EQ(r.mutants[0].status, MutantStatus::kAlive);
  EXPECT_DOUBLE_EQ(*r.mutation_score, 0.0);
}

TEST(RunCampaign, RemovedPredicateDiesByError) {
  const Fixture min = Load("min");
  RunnerConfig config = Only(OperatorId::kRemovePredicate);
  config.fail_fast = false;
  const CampaignReport r = RunCampaign(min.program, min.cases, config);
  ASSERT_EQ(r.mutants.size(), 1u);
  EXPECT_EQ(r.mutants[0].status, MutantStatus::kDead);
  EXPECT_EQ(r.mutants[0].verdicts,
            (std::vector<Verdict>{Verdict::kError, Verdict::kError}));
}

TEST(RunCampaign, ReportAggregatesMatchResults) {
  for (const std::string& stem : CorpusPrograms()) {
    SCOPED_TRACE(stem);
    const Fixture f = Load(stem);
    const CampaignReport r = RunCampaign(f.program, f.cases, {});
    Tally totals;
    std::array<Tally, kOperatorCount> per{};
    for (std::size_t i = 0; i < r.mutants.size(); ++i) {
      EXPECT_EQ(r.mutants[i].site.id, i);
      per[static_cast<std::size_t>(r.mutants[i].site.op)].Add(
          r.mutants[i].status);
      totals.Add(r.mutants[i].status);
    }
    EXPECT_EQ(r.totals, totals);
    EXPECT_EQ(r.per_operator, per);
    if (totals.dead + totals.alive == 0) {
      EXPECT_FALSE(r.mutation_score.has_value());
    } else {
      EXPECT_EQ(*r.mutation_score, static_cast<double>(totals.dead) /
                                       (totals.dead + totals.alive));
    }
    // The original program is untouched: the baseline replays exactly.
    const SuiteRunResult again = Baseline(f.program, f.cases, r.config);
    ASSERT_EQ(again.outcomes.size(), r.baseline.outcomes.size());
    for (std::size_t i = 0; i < again.outcomes.size(); ++i) {
      EXPECT_EQ(again.outcomes[i].verdict, r.baseline.outcomes[i].verdict);
      EXPECT_EQ(again.outcomes[i].steps_used,
                r.baseline.outcomes[i].steps_used);
    }
  }
}

std::vector<MutantStatus> Statuses(const CampaignReport& r) {
  std::vector<MutantStatus> out;
  for (const auto& m : r.mutants) out.push_back(m.status);
  return out;
}

TEST(RunCampaign, FailFastAgreesWithFullRuns) {
  for (const std::string& stem : CorpusPrograms()) {
    SCOPED_TRACE(stem);
    const Fixture f = Load(stem);
    RunnerConfig fast;
    RunnerConfig full;
    full.fail_fast = false;
    const CampaignReport a = RunCampaign(f.program, f.cases, fast);
    const CampaignReport b = RunCampaign(f.program, f.cases, full);
    EXPECT_EQ(Statuses(a), Statuses(b));
    for (const auto& m : b.mutants) {
      EXPECT_EQ(m.verdicts.size(), f.cases.size());
    }
  }
}

TEST(RunCampaign, OrderAndParallelismIndependent) {
  for (const std::string& stem : CorpusPrograms()) {
    SCOPED_TRACE(stem);
    const Fixture f = Load(stem);
    RunnerConfig serial;
    RunnerConfig parallel;
    parallel.jobs = 8;
    const CampaignReport a = RunCampaign(f.program, f.cases, serial);
    const CampaignReport b = RunCampaign(f.program, f.cases, parallel);
    EXPECT_EQ(Statuses(a), Statuses(b));
    // Running the mutants one by one, last site first, changes nothing.
    Budget budget;
    budget.max_steps = a.step_limit;
    budget.wall_limit = a.wall_limit;
    const auto sites = EnumerateSites(f.program, serial.ops);
    for (std::size_t k = sites.size(); k-- > 0;) {
      const MutantResult m =
          RunMutant(Apply(f.program, sites[k]), f.cases, budget, true);
      EXPECT_EQ(m.status, a.mutants[k].status);
      EXPECT_EQ(m.steps_used, a.mutants[k].steps_used);
    }
  }
}

}  // namespace
}  // namespace promut
