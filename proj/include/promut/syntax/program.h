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

#ifndef PROMUT_SYNTAX_PROGRAM_H_
#define PROMUT_SYNTAX_PROGRAM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "promut/error.h"
#include "promut/syntax/term.h"

namespace promut {

// Predicate indicator, name/arity.
struct PredKey {
  std::string name;
  std::size_t arity = 0;

  std::string ToString() const;
  static PredKey Of(const Term& callable);

  friend auto operator<=>(const PredKey&, const PredKey&) = default;
  friend bool operator==(const PredKey&, const PredKey&) = default;
};

// Borrowed form used for allocation-free lookups.
struct PredKeyRef {
  std::string_view name;
  std::size_t arity = 0;
};

struct PredKeyLess {
  using is_transparent = void;
  template <typename A, typename B>
  bool operator()(const A& a, const B& b) const {
    const std::string_view x = Name(a);
    const std::string_view y = Name(b);
    return x != y ? x < y : a.arity < b.arity;
  }

 private:
  static std::string_view Name(const PredKey& k) { return k.name; }
  static std::string_view Name(const PredKeyRef& k) { return k.name; }
};

// Address of a node inside a clause: step 0 selects the head, step 1 the
// body, every further step an argument position.
class TermPath {
 public:
  TermPath() = default;
  TermPath(std::initializer_list<std::uint32_t> steps) : steps_(steps) {}
  explicit TermPath(std::vector<std::uint32_t> steps)
      : steps_(std::move(steps)) {}

  const std::vector<std::uint32_t>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return steps_[i]; }

  TermPath Child(std::uint32_t step) const;
  TermPath Parent() const;
  bool StartsWith(const TermPath& prefix) const;

  // "[1,0,0]"
  std::string ToString() const;

  friend auto operator<=>(const TermPath&, const TermPath&) = default;
  friend bool operator==(const TermPath&, const TermPath&) = default;

 private:
  std::vector<std::uint32_t> steps_;
};

class InvalidPath : public Error {
 public:
  explicit InvalidPath(const TermPath& path);
};

class Clause {
 public:
  // `head` must be an atom or compound. A fact is a clause whose body was
  // not written in the source; its body is the atom `true`.
  Clause(Term head, Term body, bool fact = false);
  static Clause Fact(Term head);

  const Term& head() const { return head_; }
  const Term& body() const { return body_; }
  bool is_fact() const { return fact_; }
  PredKey key() const { return PredKey::Of(head_); }
  // 1-based position among the clauses of its predicate; 0 until the clause
  // is placed in a Program.
  int index() const { return index_; }
  // Every variable id in the clause is below this bound.
  VarId var_bound() const { return var_bound_; }

  // Head for facts, ':-'(Head, Body) otherwise.
  Term AsTerm() const;

  friend class Program;
  friend Clause ReplaceAt(const Clause&, const TermPath&, Term);

 private:
  Term head_;
  Term body_;
  bool fact_ = false;
  int index_ = 0;
  VarId var_bound_ = 0;
};

bool StructurallyEqual(const Clause& a, const Clause& b);
bool IsVariant(const Clause& a, const Clause& b);

Term ResolvePath(const Clause& clause, const TermPath& path);
Clause ReplaceAt(const Clause& clause, const TermPath& path, Term replacement);
// Every node address of the clause in pre-order (head first).
std::vector<TermPath> AllPaths(const Clause& clause);

// A `:- Goal.` item. `position` is the number of clauses read before it.
struct Directive {
  Term goal;
  std::size_t position = 0;
};

class Program {
 public:
  using Index = std::map<PredKey, std::vector<std::size_t>, PredKeyLess>;

  Program() = default;
  explicit Program(std::vector<Clause> clauses,
                   std::vector<Directive> directives = {},
                   std::size_t lines_of_code = 0);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<Directive>& directives() const { return directives_; }
  // Clause positions (into clauses()) per predicate, in source order.
  const Index& index() const { return index_; }
  // Predicates in order of their first clause.
  const std::vector<PredKey>& predicates() const { return predicates_; }
  // Non-blank source lines; 0 for programs not read from text.
  std::size_t lines_of_code() const { return lines_of_code_; }

  // nullptr when the predicate has no clauses.
  const std::vector<std::size_t>* Lookup(PredKeyRef key) const;
  bool Defines(const PredKey& key) const;

  // Same directives, different clause list.
  Program WithClauses(std::vector<Clause> clauses) const;

  // Rebuilds the index from the clause list and compares it with the stored
  // one.
  bool IndexConsistent() const;

 private:
  void BuildIndex();

  std::vector<Clause> clauses_;
  std::vector<Directive> directives_;
  Index index_;
  std::vector<PredKey> predicates_;
  std::size_t lines_of_code_ = 0;
};

bool StructurallyEqual(const Program& a, const Program& b);
bool IsVariant(const Program& a, const Program& b);

}  // namespace promut

#endif  // PROMUT_SYNTAX_PROGRAM_H_
