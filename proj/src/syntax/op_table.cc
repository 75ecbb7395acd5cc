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

#include "promut/syntax/op_table.h"

#include <array>
#include <utility>

namespace promut {
namespace {

struct NamedOp {
  std::string_view name;
  OpDef def;
};

constexpr std::array kInfix = {
    NamedOp{":-", {1200, OpType::kXfx}}, NamedOp{";", {1100, OpType::kXfy}},
    NamedOp{"->", {1050, OpType::kXfy}}, NamedOp{",", {1000, OpType::kXfy}},
    NamedOp{"=", {700, OpType::kXfx}},   NamedOp{"\\=", {700, OpType::kXfx}},
    NamedOp{"==", {700, OpType::kXfx}},  NamedOp{"\\==", {700, OpType::kXfx}},
    NamedOp{"=:=", {700, OpType::kXfx}}, NamedOp{"=\\=", {700, OpType::kXfx}},
    NamedOp{"<", {700, OpType::kXfx}},   NamedOp{">", {700, OpType::kXfx}},
    NamedOp{"=<", {700, OpType::kXfx}},  NamedOp{">=", {700, OpType::kXfx}},
    NamedOp{"is", {700, OpType::kXfx}},  NamedOp{"+", {500, OpType::kYfx}},
    NamedOp{"-", {500, OpType::kYfx}},   NamedOp{"*", {400, OpType::kYfx}},
    NamedOp{"/", {400, OpType::kYfx}},   NamedOp{"mod", {400, OpType::kYfx}},
};

constexpr std::array kPrefix = {
    NamedOp{"\\+", {900, OpType::kFy}},
    NamedOp{"-", {200, OpType::kFy}},
};

template <std::size_t N>
std::optional<OpDef> Find(const std::array<NamedOp, N>& table,
                          std::string_view name) {
  for (const NamedOp& op : table) {
    if (op.name == name) return op.def;
  }
  return std::nullopt;
}

constexpr std::array<std::pair<std::string_view, std::size_t>, 28> kBuiltins =
    {{
        {"true", 0},  {"fail", 0},   {"false", 0},  {"!", 0},
        {",", 2},     {";", 2},      {"->", 2},     {"\\+", 1},
        {"call", 1},  {"call", 2},   {"call", 3},   {"call", 4},
        {"=", 2},     {"\\=", 2},    {"==", 2},     {"\\==", 2},
        {"=:=", 2},   {"=\\=", 2},   {"<", 2},      {">", 2},
        {"=<", 2},    {">=", 2},     {"is", 2},     {"sort", 2},
        {"var", 1},   {"nonvar", 1}, {":-", 1},     {":-", 2},
    }};

}  // namespace

std::optional<OpDef> InfixOp(std::string_view name) {
  return Find(kInfix, name);
}

std::optional<OpDef> PrefixOp(std::string_view name) {
  return Find(kPrefix, name);
}

bool IsOperatorAtom(std::string_view name) {
  return InfixOp(name) || PrefixOp(name);
}

bool IsControl(std::string_view name, std::size_t arity) {
  if (arity == 2) return name == "," || name == ";" || name == "->";
  return arity == 1 && name == "\\+";
}

bool IsControl(const Term& goal) {
  return goal.is_compound() && IsControl(goal.name(), goal.arity());
}

bool IsBuiltin(std::string_view name, std::size_t arity) {
  for (const auto& [n, a] : kBuiltins) {
    if (n == name && a == arity) return true;
  }
  return false;
}

}  // namespace promut
