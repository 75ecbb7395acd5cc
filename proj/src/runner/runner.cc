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

#include "promut/runner/runner.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

namespace promut {
namespace {

std::string TestLabel(const TestOutcome& o) { return o.suite + ":" + o.name; }

bool Kills(Verdict v) { return v == Verdict::kFail || v == Verdict::kError; }

}  // namespace

std::string_view StatusName(MutantStatus status) {
  switch (status) {
    case MutantStatus::kDead: return "dead";
    case MutantStatus::kAlive: return "alive";
    case MutantStatus::kTimeout: return "timeout";
  }
  return "?";
}

void Tally::Add(MutantStatus status) {
  switch (status) {
    case MutantStatus::kDead: ++dead; break;
    case MutantStatus::kAlive: ++alive; break;
    case MutantStatus::kTimeout: ++timeout; break;
  }
}

Tally& Tally::operator+=(const Tally& other) {
  alive += other.alive;
  dead += other.dead;
  timeout += other.timeout;
  return *this;
}

std::optional<double> Score(const Tally& tally) {
  if (tally.dead + tally.alive == 0) return std::nullopt;
  return static_cast<double>(tally.dead) /
         static_cast<double>(tally.dead + tally.alive);
}

EmptySuite::EmptySuite() : Error("test suite is empty") {}

namespace {

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

BaselineRejected::BaselineRejected(std::vector<std::string> failing)
    : Error("tests do not pass on the original program: " +
            JoinNames(failing)),
      failing_(std::move(failing)) {}

MutantStatus Classify(const std::vector<Verdict>& verdicts) {
  bool timed_out = false;
  for (Verdict v : verdicts) {
    if (Kills(v)) return MutantStatus::kDead;
    if (v == Verdict::kTimeout) timed_out = true;
  }
  return timed_out ? MutantStatus::kTimeout : MutantStatus::kAlive;
}

SuiteRunResult Baseline(const Program& program,
                        const std::vector<TestCase>& cases,
                        const RunnerConfig& config) {
  if (cases.empty()) throw EmptySuite();
  Budget budget;
  budget.max_steps = config.step_budget;
  SuiteRunResult result = RunSuite(program, cases, budget);
  if (!result.all_green) {
    std::vector<std::string> failing;
    for (const TestOutcome& o : result.outcomes) {
      if (o.verdict != Verdict::kPass) failing.push_back(TestLabel(o));
    }
    throw BaselineRejected(std::move(failing));
  }
  return result;
}

MutantResult RunMutant(const Mutant& mutant,
                       const std::vector<TestCase>& cases,
                       const Budget& budget, bool fail_fast) {
  MutantResult r;
  r.site = mutant.site;
  StopAfter stop;
  if (fail_fast) stop = [](const TestOutcome& o) { return Kills(o.verdict); };
  const SuiteRunResult run = RunSuite(mutant.program, cases, budget, stop);
  for (const TestOutcome& o : run.outcomes) {
    r.verdicts.push_back(o.verdict);
    if (!r.first_killing_test && Kills(o.verdict)) {
      r.first_killing_test = TestLabel(o);
    }
  }
  r.steps_used = run.total_steps;
  r.status = Classify(r.verdicts);
  return r;
}

CampaignReport RunCampaign(const Program& program,
                           const std::vector<TestCase>& cases,
                           const RunnerConfig& config) {
  CampaignReport report;
  report.config = config;
  report.baseline = Baseline(program, cases, config);
  report.step_limit =
      std::min(config.step_budget,
               config.step_allowance + 2 * report.baseline.total_steps);
  report.wall_limit =
      config.timeout_constant +
      std::chrono::milliseconds(static_cast<std::int64_t>(
          std::ceil(2 * report.baseline.total_wall_millis)));
  Budget budget;
  budget.max_steps = std::max<std::uint64_t>(report.step_limit, 1);
  budget.wall_limit = report.wall_limit;

  const std::vector<MutationSite> sites = EnumerateSites(program, config.ops);
  report.mutants.resize(sites.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < sites.size(); i = next++) {
      try {
        report.mutants[i] =
            RunMutant(Apply(program, sites[i]), cases, budget, config.fail_fast);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const MutantResult& m : report.mutants) {
    report.per_operator[static_cast<std::size_t>(m.site.op)].Add(m.status);
    report.totals.Add(m.status);
  }
  report.mutation_score = Score(report.totals);
  return report;
}

}  // namespace promut
