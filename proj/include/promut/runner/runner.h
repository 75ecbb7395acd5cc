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

#ifndef PROMUT_RUNNER_RUNNER_H_
#define PROMUT_RUNNER_RUNNER_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "promut/error.h"
#include "promut/harness/harness.h"
#include "promut/mutation/operators.h"
#include "promut/syntax/program.h"

namespace promut {

struct RunnerConfig {
  std::vector<OperatorId> ops = AllOperators();
  std::chrono::milliseconds timeout_constant{1000};
  std::uint64_t step_budget = 1'000'000;
  // Steps granted on top of twice the baseline's total steps.
  std::uint64_t step_allowance = 100'000;
  unsigned jobs = 1;
  // Stop running a mutant's suite at its first killing test.
  bool fail_fast = true;
};

enum class MutantStatus { kDead, kAlive, kTimeout };
std::string_view StatusName(MutantStatus status);

struct MutantResult {
  MutationSite site;
  MutantStatus status = MutantStatus::kAlive;
  std::optional<std::string> first_killing_test;
  std::uint64_t steps_used = 0;
  // One verdict per test that ran, in suite order.
  std::vector<Verdict> verdicts;
};

struct Tally {
  std::uint64_t alive = 0;
  std::uint64_t dead = 0;
  std::uint64_t timeout = 0;

  void Add(MutantStatus status);
  Tally& operator+=(const Tally& other);
  friend bool operator==(const Tally&, const Tally&) = default;
};

// dead / (dead + alive); empty when no mutant was dead or alive.
std::optional<double> Score(const Tally& tally);

struct CampaignReport {
  // Indexed by OperatorId, every operator present.
  std::array<Tally, kOperatorCount> per_operator{};
  Tally totals;
  std::optional<double> mutation_score;
  SuiteRunResult baseline;
  RunnerConfig config;
  std::uint64_t step_limit = 0;        // per test, on mutants
  std::chrono::milliseconds wall_limit{0};
  std::vector<MutantResult> mutants;   // in site id order
};

class EmptySuite : public Error {
 public:
  EmptySuite();
};

class BaselineRejected : public Error {
 public:
  explicit BaselineRejected(std::vector<std::string> failing);
  const std::vector<std::string>& failing() const { return failing_; }

 private:
  std::vector<std::string> failing_;
};

MutantStatus Classify(const std::vector<Verdict>& verdicts);

// Runs the suite on the unmodified program with `step_budget` per test.
SuiteRunResult Baseline(const Program& program,
                        const std::vector<TestCase>& cases,
                        const RunnerConfig& config);

MutantResult RunMutant(const Mutant& mutant,
                       const std::vector<TestCase>& cases,
                       const Budget& budget, bool fail_fast);

CampaignReport RunCampaign(const Program& program,
                           const std::vector<TestCase>& cases,
                           const RunnerConfig& config);

}  // namespace promut

#endif  // PROMUT_RUNNER_RUNNER_H_
