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

#include "promut/engine/bindings.h"

#include <cstring>
#include <utility>

#include "promut/engine/arith.h"
#include "promut/syntax/printer.h"

namespace promut {

PrologError::PrologError(Term formal, Span span)
    : Error(FormatTerm(formal, FormatOptions{.quoted = true,
                                             .ignore_ops = true,
                                             .max_depth = 8})),
      formal_(std::move(formal)),
      span_(span) {}

Term InstantiationError() { return Term::Atom("instantiation_error"); }

Term TypeError(std::string expected, Term culprit) {
  return Term::Compound("type_error",
                        {Term::Atom(std::move(expected)), std::move(culprit)});
}

Term EvaluationError(std::string what) {
  return Term::Compound("evaluation_error", {Term::Atom(std::move(what))});
}

Term ExistenceError(const std::string& name, std::size_t arity) {
  return Term::Compound(
      "existence_error",
      {Term::Atom("procedure"),
       Term::Compound("/", {Term::Atom(name), Term::Int(arity)})});
}

VarId Bindings::Allocate(VarId n) {
  const VarId first = size();
  slots_.resize(slots_.size() + n);
  return first;
}

Term Bindings::Deref(Term t) const {
  while (t.is_var() && t.var_id() < slots_.size() && slots_[t.var_id()]) {
    t = slots_[t.var_id()];
  }
  return t;
}

void Bindings::Bind(VarId v, Term value) {
  if (v >= slots_.size()) slots_.resize(v + 1);
  slots_[v] = std::move(value);
  trail_.push_back(v);
}

void Bindings::Undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const VarId v = trail_.back();
    trail_.pop_back();
    if (v < slots_.size()) slots_[v] = Term();
  }
}

void Bindings::Shrink(VarId var_mark) {
  if (var_mark < slots_.size()) slots_.resize(var_mark);
}

namespace {

constexpr std::size_t kMaxListCells = 1000000;

Term ResolveRec(const Bindings& b, const Term& in, std::size_t depth,
                std::size_t max_depth) {
  Term t = b.Deref(in);
  if (t.ground() || !t.is_compound()) return t;
  if (depth >= max_depth) return Term::Atom("...");
  if (t.Is(".", 2)) {
    std::vector<Term> items;
    Term cell = t;
    while (cell.Is(".", 2) && items.size() < kMaxListCells) {
      items.push_back(ResolveRec(b, cell.arg(0), depth + 1, max_depth));
      cell = b.Deref(cell.arg(1));
    }
    Term tail = cell.Is(".", 2) ? Term::Atom("...")
                                : ResolveRec(b, cell, depth + 1, max_depth);
    return Term::List(std::move(items), std::move(tail));
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) {
    args.push_back(ResolveRec(b, a, depth + 1, max_depth));
  }
  return Term::Compound(t.name(), std::move(args), t.span());
}

int Rank(const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar: return 0;
    case TermKind::kInt:
    case TermKind::kFloat: return 1;
    case TermKind::kAtom: return 3;
    case TermKind::kCompound: return 4;
  }
  return 5;
}

bool SameNumber(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_int()) return a.int_value() == b.int_value();
  const double x = a.float_value();
  const double y = b.float_value();
  return x == y || std::memcmp(&x, &y, sizeof x) == 0;
}

class Poller {
 public:
  explicit Poller(const Interrupt& interrupt) : interrupt_(interrupt) {}
  void Tick() {
    if (interrupt_ && (++count_ & 0xFFF) == 0) interrupt_();
  }

 private:
  const Interrupt& interrupt_;
  std::size_t count_ = 0;
};

}  // namespace

Term Bindings::Resolve(const Term& t, std::size_t max_depth) const {
  return ResolveRec(*this, t, 0, max_depth);
}

bool Unify(const Term& a, const Term& b, Bindings& bindings,
           const Interrupt& interrupt) {
  const std::size_t mark = bindings.TrailMark();
  Poller poll(interrupt);
  std::vector<std::pair<Term, Term>> stack;
  stack.emplace_back(a, b);
  while (!stack.empty()) {
    poll.Tick();
    Term x = bindings.Deref(stack.back().first);
    Term y = bindings.Deref(stack.back().second);
    stack.pop_back();
    if (x.SameNode(y)) continue;
    if (x.is_var() && y.is_var()) {
      if (x.var_id() == y.var_id()) continue;
      // Younger variables point at older ones.
      if (x.var_id() < y.var_id()) std::swap(x, y);
      bindings.Bind(x.var_id(), y);
      continue;
    }
    if (x.is_var()) {
      bindings.Bind(x.var_id(), y);
      continue;
    }
    if (y.is_var()) {
      bindings.Bind(y.var_id(), x);
      continue;
    }
    bool ok = false;
    switch (x.kind()) {
      case TermKind::kAtom:
        ok = y.is_atom() && x.name() == y.name();
        break;
      case TermKind::kInt:
      case TermKind::kFloat:
        ok = SameNumber(x, y);
        break;
      case TermKind::kCompound:
        ok = y.is_compound() && x.arity() == y.arity() && x.name() == y.name();
        if (ok) {
          for (std::size_t i = x.arity(); i-- > 0;) {
            stack.emplace_back(x.arg(i), y.arg(i));
          }
        }
        break;
      case TermKind::kVar:
        break;
    }
    if (!ok) {
      bindings.Undo(mark);
      return false;
    }
  }
  return true;
}

int CompareTerms(const Term& a, const Term& b, const Bindings& bindings,
                 const Interrupt& interrupt) {
  Poller poll(interrupt);
  std::vector<std::pair<Term, Term>> stack;
  stack.emplace_back(a, b);
  while (!stack.empty()) {
    poll.Tick();
    const Term x = bindings.Deref(stack.back().first);
    const Term y = bindings.Deref(stack.back().second);
    stack.pop_back();
    if (x.SameNode(y)) continue;
    const int rx = Rank(x);
    const int ry = Rank(y);
    if (rx != ry) return rx < ry ? -1 : 1;
    switch (x.kind()) {
      case TermKind::kVar:
        if (x.var_id() != y.var_id()) return x.var_id() < y.var_id() ? -1 : 1;
        break;
      case TermKind::kInt:
      case TermKind::kFloat: {
        const int c = CompareNumbers(ToNumber(x), ToNumber(y));
        if (c != 0) return c;
        if (x.kind() != y.kind()) return x.is_float() ? -1 : 1;
        break;
      }
      case TermKind::kAtom: {
        const int c = x.name().compare(y.name());
        if (c != 0) return c < 0 ? -1 : 1;
        break;
      }
      case TermKind::kCompound: {
        if (x.arity() != y.arity()) return x.arity() < y.arity() ? -1 : 1;
        const int c = x.name().compare(y.name());
        if (c != 0) return c < 0 ? -1 : 1;
        for (std::size_t i = x.arity(); i-- > 0;) {
          stack.emplace_back(x.arg(i), y.arg(i));
        }
        break;
      }
    }
  }
  return 0;
}

}  // namespace promut
