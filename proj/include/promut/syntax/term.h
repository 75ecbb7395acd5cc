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

#ifndef PROMUT_SYNTAX_TERM_H_
#define PROMUT_SYNTAX_TERM_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace promut {

using Integer = boost::multiprecision::cpp_int;

// Variables are identified by number. Parsed clauses number their variables
// densely from zero, which is what lets the engine rename a clause by offset.
using VarId = std::uint32_t;

// Half-open byte range into the source text a term was read from.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class TermKind : std::uint8_t { kVar, kAtom, kInt, kFloat, kCompound };

class Term;

namespace detail {
struct TermNode;
}  // namespace detail

// Immutable Prolog term with shared structure. Copying a Term copies a
// handle, never the tree. Lists are ordinary '.'/2 compounds ending in '[]'.
class Term {
 public:
  // A null handle; only useful as a "no term" placeholder.
  Term() = default;

  static Term Var(VarId id, std::string name = {}, bool anonymous = false,
                  Span span = {});
  static Term Atom(std::string name, Span span = {});
  static Term Int(Integer value, Span span = {});
  static Term Float(double value, Span span = {});
  // `args` must be non-empty; zero-arity callables are atoms.
  static Term Compound(std::string functor, std::vector<Term> args,
                       Span span = {});
  static Term List(std::vector<Term> items, Term tail = Term());
  static Term Nil(Span span = {}) { return Atom("[]", span); }

  explicit operator bool() const { return node_ != nullptr; }

  TermKind kind() const;
  bool is_var() const { return kind() == TermKind::kVar; }
  bool is_atom() const { return kind() == TermKind::kAtom; }
  bool is_int() const { return kind() == TermKind::kInt; }
  bool is_float() const { return kind() == TermKind::kFloat; }
  bool is_number() const { return is_int() || is_float(); }
  bool is_compound() const { return kind() == TermKind::kCompound; }
  bool is_callable() const { return is_atom() || is_compound(); }
  bool is_nil() const { return is_atom() && name() == "[]"; }

  // Atom name, compound functor, or variable name (empty for renamed vars).
  const std::string& name() const;
  VarId var_id() const;
  bool anonymous() const;
  const Integer& int_value() const;
  double float_value() const;
  std::span<const Term> args() const;
  std::size_t arity() const;
  const Term& arg(std::size_t i) const;
  Span span() const;
  // True when the tree contains no variables.
  bool ground() const;

  // Callable with exactly this name and arity (arity 0 means an atom).
  bool Is(std::string_view name, std::size_t arity) const;

  // Same copy of the same node.
  bool SameNode(const Term& other) const { return node_ == other.node_; }

  // Rebuilds this compound with one argument swapped out.
  Term WithArg(std::size_t i, Term replacement) const;

 private:
  friend struct detail::TermNode;

  explicit Term(std::shared_ptr<const detail::TermNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::TermNode> node_;
};

// Exact structural identity: same shape, same variable ids, names and
// anonymity. Spans are ignored.
bool StructurallyEqual(const Term& a, const Term& b);

// Structural identity up to a consistent one-to-one renaming of variables.
// Variable names and anonymity must still agree.
bool IsVariant(const Term& a, const Term& b);

// Number of nodes in the tree.
std::size_t NodeCount(const Term& t);

// Largest variable id occurring in `t` plus one (0 when ground).
VarId VarBound(const Term& t);

}  // namespace promut

#endif  // PROMUT_SYNTAX_TERM_H_
