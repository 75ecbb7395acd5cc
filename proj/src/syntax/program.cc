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

#include "promut/syntax/program.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace promut {

std::string PredKey::ToString() const {
  return name + "/" + std::to_string(arity);
}

PredKey PredKey::Of(const Term& callable) {
  return PredKey{callable.name(), callable.is_compound() ? callable.arity() : 0};
}

TermPath TermPath::Child(std::uint32_t step) const {
  std::vector<std::uint32_t> steps = steps_;
  steps.push_back(step);
  return TermPath(std::move(steps));
}

TermPath TermPath::Parent() const {
  std::vector<std::uint32_t> steps = steps_;
  if (!steps.empty()) steps.pop_back();
  return TermPath(std::move(steps));
}

bool TermPath::StartsWith(const TermPath& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.steps_.begin(), prefix.steps_.end(), steps_.begin());
}

std::string TermPath::ToString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out << ',';
    out << steps_[i];
  }
  out << ']';
  return out.str();
}

InvalidPath::InvalidPath(const TermPath& path)
    : Error("invalid term path " + path.ToString()) {}

Clause::Clause(Term head, Term body, bool fact)
    : head_(std::move(head)), body_(std::move(body)), fact_(fact) {
  if (!head_ || !head_.is_callable()) {
    throw Error("clause head must be an atom or compound term");
  }
  if (!body_) body_ = Term::Atom("true");
  if (fact_ && !body_.Is("true", 0)) fact_ = false;
  var_bound_ = std::max(VarBound(head_), VarBound(body_));
}

Clause Clause::Fact(Term head) {
  return Clause(std::move(head), Term::Atom("true"), /*fact=*/true);
}

Term Clause::AsTerm() const {
  if (fact_) return head_;
  return Term::Compound(":-", {head_, body_});
}

bool StructurallyEqual(const Clause& a, const Clause& b) {
  return a.is_fact() == b.is_fact() && StructurallyEqual(a.head(), b.head()) &&
         StructurallyEqual(a.body(), b.body());
}

bool IsVariant(const Clause& a, const Clause& b) {
  // Head and body share one variable scope, so compare them as one term.
  return a.is_fact() == b.is_fact() &&
         IsVariant(Term::Compound(":-", {a.head(), a.body()}),
                   Term::Compound(":-", {b.head(), b.body()}));
}

Term ResolvePath(const Clause& clause, const TermPath& path) {
  if (path.empty() || path[0] > 1) throw InvalidPath(path);
  Term node = path[0] == 0 ? clause.head() : clause.body();
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!node.is_compound() || path[i] >= node.arity()) throw InvalidPath(path);
    node = node.arg(path[i]);
  }
  return node;
}

namespace {

Term ReplaceIn(const Term& node, const TermPath& path, std::size_t depth,
               Term replacement) {
  if (depth == path.size()) return replacement;
  if (!node.is_compound() || path[depth] >= node.arity()) {
    throw InvalidPath(path);
  }
  const std::uint32_t step = path[depth];
  return node.WithArg(step, ReplaceIn(node.arg(step), path, depth + 1,
                                      std::move(replacement)));
}

void CollectPaths(const Term& node, TermPath& prefix,
                  std::vector<TermPath>& out) {
  out.push_back(prefix);
  if (!node.is_compound()) return;
  for (std::uint32_t i = 0; i < node.arity(); ++i) {
    TermPath child = prefix.Child(i);
    CollectPaths(node.arg(i), child, out);
  }
}

}  // namespace

Clause ReplaceAt(const Clause& clause, const TermPath& path,
                 Term replacement) {
  if (path.empty() || path[0] > 1) throw InvalidPath(path);
  const bool in_head = path[0] == 0;
  Term root = in_head ? clause.head() : clause.body();
  Term updated = ReplaceIn(root, path, 1, std::move(replacement));
  if (in_head) {
    if (!updated.is_callable()) throw InvalidPath(path);
    Clause out(updated, clause.body(), clause.is_fact());
    out.index_ = clause.index_;
    return out;
  }
  Clause out(clause.head(), updated, clause.is_fact());
  out.index_ = clause.index_;
  return out;
}

std::vector<TermPath> AllPaths(const Clause& clause) {
  std::vector<TermPath> out;
  TermPath head{0};
  CollectPaths(clause.head(), head, out);
  TermPath body{1};
  CollectPaths(clause.body(), body, out);
  return out;
}

Program::Program(std::vector<Clause> clauses,
                 std::vector<Directive> directives, std::size_t lines_of_code)
    : clauses_(std::move(clauses)),
      directives_(std::move(directives)),
      lines_of_code_(lines_of_code) {
  BuildIndex();
}

void Program::BuildIndex() {
  index_.clear();
  predicates_.clear();
  for (std::size_t pos = 0; pos < clauses_.size(); ++pos) {
    PredKey key = clauses_[pos].key();
    auto [it, inserted] = index_.try_emplace(key);
    if (inserted) predicates_.push_back(key);
    it->second.push_back(pos);
    clauses_[pos].index_ = static_cast<int>(it->second.size());
  }
}

const std::vector<std::size_t>* Program::Lookup(PredKeyRef key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &it->second;
}

bool Program::Defines(const PredKey& key) const {
  return index_.find(key) != index_.end();
}

Program Program::WithClauses(std::vector<Clause> clauses) const {
  return Program(std::move(clauses), directives_, lines_of_code_);
}

bool Program::IndexConsistent() const {
  Program rebuilt(clauses_);
  if (rebuilt.index_ != index_ || rebuilt.predicates_ != predicates_) {
    return false;
  }
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (rebuilt.clauses_[i].index() != clauses_[i].index()) return false;
  }
  return true;
}

namespace {

template <typename ClauseEq>
bool ProgramsEqual(const Program& a, const Program& b, ClauseEq&& eq) {
  if (a.clauses().size() != b.clauses().size() ||
      a.directives().size() != b.directives().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.clauses().size(); ++i) {
    if (!eq(a.clauses()[i], b.clauses()[i])) return false;
  }
  for (std::size_t i = 0; i < a.directives().size(); ++i) {
    const Directive& x = a.directives()[i];
    const Directive& y = b.directives()[i];
    if (x.position != y.position || !IsVariant(x.goal, y.goal)) return false;
  }
  return true;
}

}  // namespace

bool StructurallyEqual(const Program& a, const Program& b) {
  return ProgramsEqual(a, b, [](const Clause& x, const Clause& y) {
    return StructurallyEqual(x, y);
  });
}

bool IsVariant(const Program& a, const Program& b) {
  return ProgramsEqual(a, b, [](const Clause& x, const Clause& y) {
    return IsVariant(x, y);
  });
}

}  // namespace promut
