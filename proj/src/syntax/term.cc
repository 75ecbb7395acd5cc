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

#include "promut/syntax/term.h"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <unordered_map>
#include <utility>

namespace promut {
namespace detail {

struct TermNode {
  TermKind kind = TermKind::kAtom;
  bool anonymous = false;
  bool ground = true;
  VarId var_id = 0;
  Span span;
  std::string name;
  double float_value = 0.0;
  Integer int_value;
  std::vector<Term> args;

  ~TermNode();
};

// Long lists would otherwise be torn down recursively, one stack frame per
// cell. Children owned only by this node are unlinked on an explicit stack.
TermNode::~TermNode() {
  if (args.empty()) return;
  std::vector<std::shared_ptr<const TermNode>> work;
  auto steal = [&work](std::vector<Term>& from) {
    for (Term& t : from) {
      if (t.node_ && t.node_.use_count() == 1) work.push_back(std::move(t.node_));
    }
    from.clear();
  };
  steal(args);
  while (!work.empty()) {
    std::shared_ptr<const TermNode> node = std::move(work.back());
    work.pop_back();
    if (node.use_count() == 1) steal(const_cast<TermNode&>(*node).args);
  }
}

}  // namespace detail

using detail::TermNode;

Term Term::Var(VarId id, std::string name, bool anonymous, Span span) {
  auto node = std::make_shared<TermNode>();
  node->kind = TermKind::kVar;
  node->var_id = id;
  node->name = std::move(name);
  node->anonymous = anonymous;
  node->ground = false;
  node->span = span;
  return Term(std::move(node));
}

Term Term::Atom(std::string name, Span span) {
  auto node = std::make_shared<TermNode>();
  node->kind = TermKind::kAtom;
  node->name = std::move(name);
  node->span = span;
  return Term(std::move(node));
}

Term Term::Int(Integer value, Span span) {
  auto node = std::make_shared<TermNode>();
  node->kind = TermKind::kInt;
  node->int_value = std::move(value);
  node->span = span;
  return Term(std::move(node));
}

Term Term::Float(double value, Span span) {
  auto node = std::make_shared<TermNode>();
  node->kind = TermKind::kFloat;
  node->float_value = value;
  node->span = span;
  return Term(std::move(node));
}

Term Term::Compound(std::string functor, std::vector<Term> args, Span span) {
  assert(!args.empty());
  auto node = std::make_shared<TermNode>();
  node->kind = TermKind::kCompound;
  node->name = std::move(functor);
  node->ground = std::all_of(args.begin(), args.end(),
                             [](const Term& a) { return a.ground(); });
  node->args = std::move(args);
  node->span = span;
  return Term(std::move(node));
}

Term Term::List(std::vector<Term> items, Term tail) {
  Term list = tail ? std::move(tail) : Nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    list = Compound(".", {*it, list});
  }
  return list;
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
VarId Term::var_id() const { return node_->var_id; }
bool Term::anonymous() const { return node_->anonymous; }
const Integer& Term::int_value() const { return node_->int_value; }
double Term::float_value() const { return node_->float_value; }
std::span<const Term> Term::args() const { return node_->args; }
std::size_t Term::arity() const { return node_->args.size(); }
const Term& Term::arg(std::size_t i) const { return node_->args[i]; }
Span Term::span() const { return node_->span; }
bool Term::ground() const { return node_->ground; }

bool Term::Is(std::string_view name, std::size_t arity) const {
  if (arity == 0) return is_atom() && node_->name == name;
  return is_compound() && node_->args.size() == arity && node_->name == name;
}

Term Term::WithArg(std::size_t i, Term replacement) const {
  assert(is_compound() && i < arity());
  std::vector<Term> args = node_->args;
  args[i] = std::move(replacement);
  return Compound(node_->name, std::move(args), node_->span);
}

namespace {

bool NumbersEqual(const Term& a, const Term& b) {
  if (a.is_int()) return a.int_value() == b.int_value();
  // Bitwise comparison keeps -0.0 and NaN payloads distinct.
  const double x = a.float_value();
  const double y = b.float_value();
  return std::memcmp(&x, &y, sizeof x) == 0;
}

// Shared subtrees are skipped only when that cannot hide a variable pairing.
template <bool kExactVars, typename VarEq>
bool Equal(const Term& a, const Term& b, VarEq&& var_eq) {
  std::vector<std::pair<const Term*, const Term*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->SameNode(*y) && (kExactVars || x->ground())) continue;
    if (x->kind() != y->kind()) return false;
    switch (x->kind()) {
      case TermKind::kVar:
        if (x->anonymous() != y->anonymous() || x->name() != y->name() ||
            !var_eq(x->var_id(), y->var_id())) {
          return false;
        }
        break;
      case TermKind::kAtom:
        if (x->name() != y->name()) return false;
        break;
      case TermKind::kInt:
      case TermKind::kFloat:
        if (!NumbersEqual(*x, *y)) return false;
        break;
      case TermKind::kCompound:
        if (x->name() != y->name() || x->arity() != y->arity()) return false;
        for (std::size_t i = 0; i < x->arity(); ++i) {
          stack.emplace_back(&x->arg(i), &y->arg(i));
        }
        break;
    }
  }
  return true;
}

}  // namespace

bool StructurallyEqual(const Term& a, const Term& b) {
  return Equal<true>(a, b, [](VarId x, VarId y) { return x == y; });
}

bool IsVariant(const Term& a, const Term& b) {
  std::unordered_map<VarId, VarId> forward;
  std::unordered_map<VarId, VarId> backward;
  return Equal<false>(a, b, [&](VarId x, VarId y) {
    auto f = forward.emplace(x, y).first;
    auto g = backward.emplace(y, x).first;
    return f->second == y && g->second == x;
  });
}

std::size_t NodeCount(const Term& t) {
  std::size_t n = 1;
  if (t.is_compound()) {
    for (const Term& a : t.args()) n += NodeCount(a);
  }
  return n;
}

VarId VarBound(const Term& t) {
  if (t.ground()) return 0;
  if (t.is_var()) return t.var_id() + 1;
  VarId bound = 0;
  for (const Term& a : t.args()) bound = std::max(bound, VarBound(a));
  return bound;
}

}  // namespace promut
