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

#ifndef PROMUT_SYNTAX_OP_TABLE_H_
#define PROMUT_SYNTAX_OP_TABLE_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "promut/syntax/term.h"

namespace promut {

enum class OpType { kXfx, kXfy, kYfx, kFy, kFx };

struct OpDef {
  int priority = 0;
  OpType type = OpType::kXfx;

  // Highest priority allowed for the left and right operands.
  int LeftMax() const { return type == OpType::kYfx ? priority : priority - 1; }
  int RightMax() const {
    return type == OpType::kXfy || type == OpType::kFy ? priority
                                                       : priority - 1;
  }
};

// The table is fixed; user op/3 declarations are not supported.
std::optional<OpDef> InfixOp(std::string_view name);
std::optional<OpDef> PrefixOp(std::string_view name);
bool IsOperatorAtom(std::string_view name);

// ','/2, ';'/2, '->'/2 and '\+'/1.
bool IsControl(std::string_view name, std::size_t arity);
bool IsControl(const Term& goal);

// Predicates the engine implements natively. User programs may not define
// clauses for them.
bool IsBuiltin(std::string_view name, std::size_t arity);

}  // namespace promut

#endif  // PROMUT_SYNTAX_OP_TABLE_H_
