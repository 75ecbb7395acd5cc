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

#include "promut/engine/solve.h"

#include <algorithm>
#include <set>

#include "promut/engine/arith.h"
#include "promut/engine/bindings.h"
#include "promut/syntax/parser.h"
#include "promut/syntax/printer.h"

namespace promut {

std::string_view PortName(Port port) {
  switch (port) {
    case Port::kCall: return "call";
    case Port::kExit: return "exit";
    case Port::kRedo: return "redo";
    case Port::kFail: return "fail";
  }
  return "?";
}

std::string_view OutcomeName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kSuccess: return "success";
    case OutcomeKind::kFailure: return "failure";
    case OutcomeKind::kError: return "error";
    case OutcomeKind::kBudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

std::string EngineError::ToString() const {
  FormatOptions options;
  options.ignore_ops = true;
  return FormatTerm(formal, options);
}

const Program& Prelude() {
  static const Program prelude = ParseProgram(R"(
append([], L, L).
append([H|T], L, [H|R]) :- append(T, L, R).
member(X, [X|_]).
member(X, [_|T]) :- member(X, T).
length(L, N) :- '$length'(L, 0, N).
'$length'([], N, N).
'$length'([_|T], N0, N) :- N1 is N0 + 1, '$length'(T, N1, N).
reverse(L, R) :- '$reverse'(L, [], R).
'$reverse'([], A, A).
'$reverse'([H|T], A, R) :- '$reverse'(T, [H|A], R).
)");
  return prelude;
}

namespace {

struct Frame;
using Cont = std::shared_ptr<Frame>;

// One pending item of the goal list. Lists are persistent so choice points
// can hold on to the continuation they resume.
struct Frame {
  enum class Kind : std::uint8_t { kCall, kExit, kCommit, kFail };

  Kind kind = Kind::kCall;
  // kCall: height the goal's cuts prune to. kCommit: height to prune to.
  std::size_t barrier = 0;
  std::uint64_t invocation = 0;
  Term goal;
  SubjectPtr subject;
  Cont next;

  ~Frame() {
    // Unlink long chains iteratively.
    Cont n = std::move(next);
    while (n && n.use_count() == 1) n = std::move(n->next);
  }
};

Cont MakeFrame(Frame::Kind kind, Term goal, std::size_t barrier,
               SubjectPtr subject, Cont next) {
  auto f = std::make_shared<Frame>();
  f->kind = kind;
  f->goal = std::move(goal);
  f->barrier = barrier;
  f->subject = std::move(subject);
  f->next = std::move(next);
  return f;
}

struct ChoicePoint {
  enum class Kind : std::uint8_t { kClauses, kAlternative, kSentinel };

  Kind kind = Kind::kAlternative;
  std::size_t trail_mark = 0;
  VarId var_mark = 0;
  std::size_t exit_mark = 0;
  std::uint64_t invocation_mark = 0;

  Cont cont;
  // kClauses: the call and the clauses still to try.
  Term goal;
  const Program* db = nullptr;
  const std::vector<std::size_t>* positions = nullptr;
  std::size_t next = 0;
  // kSentinel: the invocation whose fail port this records.
  std::uint64_t invocation = 0;
  SubjectPtr subject;
};

struct ExitRecord {
  std::uint64_t invocation = 0;
  SubjectPtr subject;
  Term goal;
};

struct Exhausted {
  bool wall_clock = false;
};

Term Rename(const Term& t, VarId base, std::vector<Term>& fresh) {
  if (t.ground()) return t;
  if (t.is_var()) {
    Term& slot = fresh[t.var_id()];
    if (!slot) slot = Term::Var(base + t.var_id(), {}, false, t.span());
    return slot;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(Rename(a, base, fresh));
  return Term::Compound(t.name(), std::move(args), t.span());
}

void CollectQueryVars(const Term& t, std::set<VarId>& seen,
                      std::vector<Term>& out) {
  if (t.ground()) return;
  if (t.is_var()) {
    if (!t.anonymous() && !t.name().empty() && seen.insert(t.var_id()).second) {
      out.push_back(t);
    }
    return;
  }
  for (const Term& a : t.args()) CollectQueryVars(a, seen, out);
}

class Machine {
 public:
  Machine(const Program& program, const Budget& budget, const TraceSink& trace)
      : program_(program),
        prelude_(Prelude()),
        budget_(budget),
        trace_(trace),
        tracing_(static_cast<bool>(trace)) {
    if (budget_.wall_limit) {
      deadline_ = std::chrono::steady_clock::now() + *budget_.wall_limit;
    }
    interrupt_ = [this] { CheckDeadline(); };
  }

  SolveOutcome Run(const Term& goal) {
    SolveOutcome out;
    bindings_.Allocate(VarBound(goal));
    try {
      const bool ok = Execute(goal);
      out.kind = ok ? OutcomeKind::kSuccess : OutcomeKind::kFailure;
      if (ok) {
        std::set<VarId> seen;
        std::vector<Term> vars;
        CollectQueryVars(goal, seen, vars);
        for (const Term& v : vars) {
          out.bindings.emplace_back(v.name(), bindings_.Resolve(v));
        }
      }
    } catch (const PrologError& e) {
      out.kind = OutcomeKind::kError;
      out.error = EngineError{e.formal(), e.span()};
    } catch (const Exhausted& e) {
      out.kind = OutcomeKind::kBudgetExhausted;
      out.wall_clock_expired = e.wall_clock;
    }
    out.steps_used = steps_;
    return out;
  }

 private:
  bool Execute(const Term& goal) {
    Cont goals = MakeFrame(Frame::Kind::kCall, goal, 0, nullptr, nullptr);
    for (;;) {
      if (!goals) return true;
      const Cont frame = goals;
      goals = frame->next;
      bool ok = true;
      switch (frame->kind) {
        case Frame::Kind::kExit:
          Emit(Port::kExit, frame->invocation, frame->subject, frame->goal);
          if (!choices_.empty()) {
            exits_.push_back({frame->invocation, frame->subject, frame->goal});
          }
          break;
        case Frame::Kind::kCommit:
          CutTo(frame->barrier);
          break;
        case Frame::Kind::kFail:
          ok = false;
          break;
        case Frame::Kind::kCall:
          ok = Call(*frame, goals);
          break;
      }
      if (!ok && !Backtrack(goals)) return false;
    }
  }

  void CheckDeadline() {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
      throw Exhausted{true};
    }
  }

  void Step() {
    if (steps_ >= budget_.max_steps) throw Exhausted{false};
    ++steps_;
    if ((steps_ & 1023) == 0) CheckDeadline();
  }

  SubjectPtr Child(const SubjectPtr& parent, std::uint32_t i) const {
    if (!parent) return nullptr;
    return std::make_shared<Subject>(
        Subject{parent->pred, parent->clause, parent->path.Child(i)});
  }

  void Emit(Port port, std::uint64_t invocation, const SubjectPtr& subject,
            const Term& goal) {
    if (!tracing_) return;
    TraceEvent ev;
    ev.port = port;
    ev.subject = subject;
    ev.step = steps_;
    ev.invocation = invocation;
    FormatOptions options;
    options.max_depth = 12;
    ev.goal = FormatTerm(bindings_.Resolve(goal, 64), options);
    trace_(ev);
  }

  ChoicePoint& Push(ChoicePoint::Kind kind, Cont cont) {
    ChoicePoint& cp = choices_.emplace_back();
    cp.kind = kind;
    cp.trail_mark = bindings_.TrailMark();
    cp.var_mark = bindings_.size();
    cp.exit_mark = exits_.size();
    cp.invocation_mark = invocations_ + 1;
    cp.cont = std::move(cont);
    return cp;
  }

  void CutTo(std::size_t height) {
    while (choices_.size() > height) choices_.pop_back();
  }

  // Undoes the work done since `cp` was pushed. Goals that started before
  // it and exited after it are being re-entered, so they see a redo.
  void Restore(const ChoicePoint& cp) {
    bindings_.Undo(cp.trail_mark);
    bindings_.Shrink(cp.var_mark);
    std::vector<ExitRecord> redone;
    while (exits_.size() > cp.exit_mark) {
      if (exits_.back().invocation < cp.invocation_mark) {
        redone.push_back(std::move(exits_.back()));
      }
      exits_.pop_back();
    }
    std::sort(redone.begin(), redone.end(),
              [](const ExitRecord& a, const ExitRecord& b) {
                return a.invocation < b.invocation;
              });
    for (const ExitRecord& r : redone) {
      Emit(Port::kRedo, r.invocation, r.subject, r.goal);
    }
  }

  bool Backtrack(Cont& goals) {
    while (!choices_.empty()) {
      ChoicePoint& cp = choices_.back();
      Restore(cp);
      switch (cp.kind) {
        case ChoicePoint::Kind::kSentinel: {
          const ChoicePoint dead = std::move(cp);
          choices_.pop_back();
          Emit(Port::kFail, dead.invocation, dead.subject, dead.goal);
          break;
        }
        case ChoicePoint::Kind::kAlternative:
          goals = std::move(cp.cont);
          choices_.pop_back();
          return true;
        case ChoicePoint::Kind::kClauses: {
          Step();
          const std::size_t height = choices_.size() - 1;
          const Term goal = cp.goal;
          const Program* db = cp.db;
          const std::size_t pos = (*cp.positions)[cp.next];
          Cont cont = cp.cont;
          if (++cp.next >= cp.positions->size()) choices_.pop_back();
          if (TryClause(goal, *db, pos, height, std::move(cont), goals)) {
            return true;
          }
          break;
        }
      }
    }
    return false;
  }

  bool TryClause(const Term& goal, const Program& db, std::size_t pos,
                 std::size_t barrier, Cont cont, Cont& goals) {
    const Clause& clause = db.clauses()[pos];
    const VarId base = bindings_.Allocate(clause.var_bound());
    std::vector<Term> fresh(clause.var_bound());
    if (!Unify(goal, Rename(clause.head(), base, fresh), bindings_,
               interrupt_)) {
      bindings_.Shrink(base);
      return false;
    }
    SubjectPtr subject;
    if (tracing_ && &db == &program_) {
      subject = std::make_shared<Subject>(
          Subject{clause.key(), clause.index(), TermPath{1}});
    }
    goals = MakeFrame(Frame::Kind::kCall, Rename(clause.body(), base, fresh),
                      barrier, std::move(subject), std::move(cont));
    return true;
  }

  bool Call(const Frame& frame, Cont& goals) {
    Step();
    Term goal = bindings_.Deref(frame.goal);
    const Span span = frame.goal.span();
    if (goal.is_var()) throw PrologError(InstantiationError(), span);
    if (goal.is_number()) {
      throw PrologError(TypeError("callable", goal), span);
    }
    if (!frame.goal.is_var()) {
      if (goal.Is(",", 2)) {
        goals = MakeFrame(Frame::Kind::kCall, goal.arg(1), frame.barrier,
                          Child(frame.subject, 1), goals);
        goals = MakeFrame(Frame::Kind::kCall, goal.arg(0), frame.barrier,
                          Child(frame.subject, 0), goals);
        return true;
      }
      if (goal.Is(";", 2)) {
        const Term& left = goal.arg(0);
        Cont rest = goals;
        const std::size_t height = choices_.size();
        Push(ChoicePoint::Kind::kAlternative,
             MakeFrame(Frame::Kind::kCall, goal.arg(1), frame.barrier,
                       Child(frame.subject, 1), rest));
        if (left.Is("->", 2)) {
          SubjectPtr ite = Child(frame.subject, 0);
          goals = MakeFrame(Frame::Kind::kCall, left.arg(1), frame.barrier,
                            Child(ite, 1), rest);
          goals = MakeFrame(Frame::Kind::kCommit, {}, height, nullptr, goals);
          goals = MakeFrame(Frame::Kind::kCall, left.arg(0), height + 1,
                            Child(ite, 0), goals);
          return true;
        }
        goals = MakeFrame(Frame::Kind::kCall, left, frame.barrier,
                          Child(frame.subject, 0), rest);
        return true;
      }
      if (goal.Is("->", 2)) {
        const std::size_t height = choices_.size();
        goals = MakeFrame(Frame::Kind::kCall, goal.arg(1), frame.barrier,
                          Child(frame.subject, 1), goals);
        goals = MakeFrame(Frame::Kind::kCommit, {}, height, nullptr, goals);
        goals = MakeFrame(Frame::Kind::kCall, goal.arg(0), height,
                          Child(frame.subject, 0), goals);
        return true;
      }
    } else {
      // A variable goal behaves as call/1.
      goal = Term::Compound("call", {goal}, span);
    }

    const std::uint64_t invocation = ++invocations_;
    if (tracing_) {
      Emit(Port::kCall, invocation, frame.subject, goal);
      ChoicePoint& s = Push(ChoicePoint::Kind::kSentinel, nullptr);
      s.invocation = invocation;
      s.subject = frame.subject;
      s.goal = goal;
      goals = MakeFrame(Frame::Kind::kExit, goal, 0, frame.subject, goals);
      goals->invocation = invocation;
    }
    try {
      return Builtin(goal, frame, goals);
    } catch (const PrologError& e) {
      if (e.span() == Span{}) throw PrologError(e.formal(), span);
      throw;
    }
  }

  Term AddArgs(const Term& callee, std::span<const Term> extra,
               Span span) const {
    const Term g = bindings_.Deref(callee);
    if (g.is_var()) throw PrologError(InstantiationError(), span);
    if (!g.is_callable()) throw PrologError(TypeError("callable", g), span);
    if (extra.empty()) return g;
    std::vector<Term> args(g.args().begin(), g.args().end());
    args.insert(args.end(), extra.begin(), extra.end());
    return Term::Compound(g.name(), std::move(args), span);
  }

  bool Compare(const Term& goal, bool (*accept)(int)) {
    const int c = CompareNumbers(Evaluate(goal.arg(0), bindings_),
                                 Evaluate(goal.arg(1), bindings_));
    return accept(c);
  }

  bool Sort(const Term& goal) {
    std::vector<Term> items;
    Term list = bindings_.Deref(goal.arg(0));
    while (list.Is(".", 2)) {
      items.push_back(bindings_.Deref(list.arg(0)));
      list = bindings_.Deref(list.arg(1));
    }
    if (list.is_var()) throw PrologError(InstantiationError(), goal.span());
    if (!list.is_nil()) {
      throw PrologError(TypeError("list", bindings_.Resolve(goal.arg(0))),
                        goal.span());
    }
    auto less = [this](const Term& a, const Term& b) {
      return CompareTerms(a, b, bindings_, interrupt_) < 0;
    };
    std::stable_sort(items.begin(), items.end(), less);
    auto same = [this](const Term& a, const Term& b) {
      return CompareTerms(a, b, bindings_, interrupt_) == 0;
    };
    items.erase(std::unique(items.begin(), items.end(), same), items.end());
    return Unify(goal.arg(1), Term::List(std::move(items)), bindings_,
                 interrupt_);
  }

  bool Builtin(const Term& goal, const Frame& frame, Cont& goals) {
    const std::string& name = goal.name();
    const std::size_t arity = goal.is_compound() ? goal.arity() : 0;
    switch (arity) {
      case 0:
        if (name == "true") return true;
        if (name == "fail" || name == "false") return false;
        if (name == "!") {
          CutTo(frame.barrier);
          return true;
        }
        break;
      case 1:
        if (name == "\\+") {
          const std::size_t height = choices_.size();
          Push(ChoicePoint::Kind::kAlternative, goals);
          Cont g = MakeFrame(Frame::Kind::kFail, {}, 0, nullptr, nullptr);
          g = MakeFrame(Frame::Kind::kCommit, {}, height, nullptr, g);
          goals = MakeFrame(Frame::Kind::kCall, goal.arg(0), height + 1,
                            Child(frame.subject, 0), g);
          return true;
        }
        if (name == "var") return bindings_.Deref(goal.arg(0)).is_var();
        if (name == "nonvar") return !bindings_.Deref(goal.arg(0)).is_var();
        break;
      case 2:
        if (name == "=") return Unify(goal.arg(0), goal.arg(1), bindings_, interrupt_);
        if (name == "\\=") {
          const std::size_t mark = bindings_.TrailMark();
          const bool unifiable =
              Unify(goal.arg(0), goal.arg(1), bindings_, interrupt_);
          bindings_.Undo(mark);
          return !unifiable;
        }
        if (name == "==") {
          return CompareTerms(goal.arg(0), goal.arg(1), bindings_, interrupt_) == 0;
        }
        if (name == "\\==") {
          return CompareTerms(goal.arg(0), goal.arg(1), bindings_, interrupt_) != 0;
        }
        if (name == "=:=") return Compare(goal, [](int c) { return c == 0; });
        if (name == "=\\=") return Compare(goal, [](int c) { return c != 0; });
        if (name == "<") return Compare(goal, [](int c) { return c < 0; });
        if (name == ">") return Compare(goal, [](int c) { return c > 0; });
        if (name == "=<") return Compare(goal, [](int c) { return c <= 0; });
        if (name == ">=") return Compare(goal, [](int c) { return c >= 0; });
        if (name == "is") {
          return Unify(goal.arg(0), ToTerm(Evaluate(goal.arg(1), bindings_)),
                       bindings_, interrupt_);
        }
        if (name == "sort") return Sort(goal);
        break;
    }
    if (name == "call" && arity >= 1 && arity <= 4) {
      const Term target =
          AddArgs(goal.arg(0), goal.args().subspan(1), goal.span());
      goals = MakeFrame(Frame::Kind::kCall, target, choices_.size(), nullptr,
                        goals);
      return true;
    }
    return UserCall(goal, goals);
  }

  bool UserCall(const Term& goal, Cont& goals) {
    const PredKeyRef key{goal.name(), goal.is_compound() ? goal.arity() : 0};
    const Program* db = &program_;
    const std::vector<std::size_t>* positions = program_.Lookup(key);
    if (positions == nullptr) {
      db = &prelude_;
      positions = prelude_.Lookup(key);
    }
    if (positions == nullptr) {
      throw PrologError(ExistenceError(goal.name(), key.arity), goal.span());
    }
    const std::size_t height = choices_.size();
    if (positions->size() > 1) {
      ChoicePoint& cp = Push(ChoicePoint::Kind::kClauses, goals);
      cp.goal = goal;
      cp.db = db;
      cp.positions = positions;
      cp.next = 1;
    }
    Cont cont = goals;
    return TryClause(goal, *db, positions->front(), height, std::move(cont),
                     goals);
  }

  const Program& program_;
  const Program& prelude_;
  const Budget& budget_;
  const TraceSink& trace_;
  const bool tracing_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  Interrupt interrupt_;

  Bindings bindings_;
  std::vector<ChoicePoint> choices_;
  std::vector<ExitRecord> exits_;
  std::uint64_t steps_ = 0;
  std::uint64_t invocations_ = 0;
};

}  // namespace

SolveOutcome Solve(const Program& program, const Term& goal,
                   const Budget& budget, const TraceSink& trace) {
  Machine machine(program, budget, trace);
  return machine.Run(goal);
}

}  // namespace promut
