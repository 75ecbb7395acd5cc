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

#ifndef PROMUT_MUTATION_OPERATORS_H_
#define PROMUT_MUTATION_OPERATORS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "promut/error.h"
#include "promut/syntax/program.h"

namespace promut {

// Catalogue order; site ids and reports follow it.
enum class OperatorId : std::uint8_t {
  kRemovePredicate,
  kSemiToComma,
  kCommaToSemi,
  kEqToNeq,
  kNeqToEq,
  kArithEqToNeq,
  kArithNeqToEq,
  kStructEqToNeq,
  kStructNeqToEq,
  kGtToLe,
  kGeToLt,
  kLtToGe,
  kLeToGt,
  kPlusToMinus,
  kMinusToPlus,
  kTimesToPlus,
  kDivToMinus,
  kIncNumber,
  kDecNumber,
  kNegateGoal,
  kTrueToFalse,
  kFalseToTrue,
  kVarToAnon,
  kAtomToAnon,
  kNilToAnon,
  kPermuteCut,
  kReversePredicate,
};

inline constexpr std::size_t kOperatorCount = 27;

struct OperatorInfo {
  OperatorId id;
  std::string_view name;   // remove_predicate
  std::string_view label;  // remove predicate, `< to >=`
  bool sensible;
};

const std::array<OperatorInfo, kOperatorCount>& Operators();
const OperatorInfo& Info(OperatorId op);
std::optional<OperatorId> OperatorFromName(std::string_view name);

class UnknownOperator : public Error {
 public:
  explicit UnknownOperator(std::string_view name);
};

// "all", "sensible", "foolish", or a comma-separated list of names.
// The result is in catalogue order without duplicates.
std::vector<OperatorId> ParseOperatorSet(std::string_view text);
std::vector<OperatorId> AllOperators();

struct MutationSite {
  std::size_t id = 0;
  OperatorId op = OperatorId::kRemovePredicate;
  PredKey pred;
  // 1-based ordinal within `pred`; 0 for predicate-level operators.
  int clause = 0;
  // Position of that clause in Program::clauses().
  std::size_t position = 0;
  TermPath path;

  bool predicate_level() const {
    return op == OperatorId::kRemovePredicate ||
           op == OperatorId::kReversePredicate;
  }
};

struct Mutant {
  MutationSite site;
  Program program;
  std::string diff;
};

class StaleSite : public Error {
 public:
  explicit StaleSite(const MutationSite& site);
};

std::vector<MutationSite> EnumerateSites(const Program& program,
                                         const std::vector<OperatorId>& ops);

Mutant Apply(const Program& program, const MutationSite& site);

// `name/arity clause N path [..]`, or `name/arity` for predicate sites.
std::string DescribeSite(const MutationSite& site);

}  // namespace promut

#endif  // PROMUT_MUTATION_OPERATORS_H_
