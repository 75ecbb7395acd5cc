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

#ifndef PROMUT_ENGINE_BINDINGS_H_
#define PROMUT_ENGINE_BINDINGS_H_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "promut/error.h"
#include "promut/syntax/term.h"

namespace promut {

// A Prolog exception term raised while solving, e.g. instantiation_error.
class PrologError : public Error {
 public:
  PrologError(Term formal, Span span);

  const Term& formal() const { return formal_; }
  Span span() const { return span_; }
  // Functor name of the formal term: "type_error", "existence_error", ...
  const std::string& kind() const { return formal_.name(); }

 private:
  Term formal_;
  Span span_;
};

Term InstantiationError();
Term TypeError(std::string expected, Term culprit);
Term EvaluationError(std::string what);
Term ExistenceError(const std::string& name, std::size_t arity);

// Substitution from variable ids to terms with an undo trail. Variable ids
// index a dense slot vector; ids at or above `size()` do not exist yet.
class Bindings {
 public:
  Bindings() = default;

  // Reserves ids [size(), size() + n) and returns the first.
  VarId Allocate(VarId n);
  VarId size() const { return static_cast<VarId>(slots_.size()); }

  bool IsBound(VarId v) const { return v < slots_.size() && slots_[v]; }
  // Follows variable bindings until an unbound variable or a non-variable.
  Term Deref(Term t) const;
  void Bind(VarId v, Term value);

  std::size_t TrailMark() const { return trail_.size(); }
  // Undoes every binding made after `mark` was taken.
  void Undo(std::size_t mark);
  // Forgets ids at or above `var_mark`; they must all be unbound.
  void Shrink(VarId var_mark);

  // Applies the substitution throughout `t`. Subterms nested deeper than
  // `max_depth` (possible with cyclic bindings) become the atom '...'.
  Term Resolve(const Term& t, std::size_t max_depth = 10000) const;

 private:
  std::vector<Term> slots_;
  std::vector<VarId> trail_;
};

// Called periodically by long-running term walks; may throw to abort them.
using Interrupt = std::function<void()>;

// Most general unifier without occurs check. On failure every binding made
// during the attempt is undone.
bool Unify(const Term& a, const Term& b, Bindings& bindings,
           const Interrupt& interrupt = nullptr);

// Standard order of terms: Var < Number < Atom < Compound. Numbers compare
// by value, a float before an int of equal value; compounds by arity, then
// name, then arguments left to right. Returns <0, 0 or >0.
int CompareTerms(const Term& a, const Term& b, const Bindings& bindings,
                 const Interrupt& interrupt = nullptr);

}  // namespace promut

#endif  // PROMUT_ENGINE_BINDINGS_H_
