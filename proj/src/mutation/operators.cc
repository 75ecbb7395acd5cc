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

#include "promut/mutation/operators.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "promut/syntax/printer.h"

namespace promut {
namespace {

using Op = OperatorId;

constexpr std::array<OperatorInfo, kOperatorCount> kCatalogue = {{
    {Op::kRemovePredicate, "remove_predicate", "remove predicate", true},
    {Op::kSemiToComma, "semi_to_comma", "; to ,", true},
    {Op::kCommaToSemi, "comma_to_semi", ", to ;", true},
    {Op::kEqToNeq, "eq_to_neq", "= to \\=", true},
    {Op::kNeqToEq, "neq_to_eq", "\\= to =", true},
    {Op::kArithEqToNeq, "arith_eq_to_neq", "=:= to =\\=", true},
    {Op::kArithNeqToEq, "arith_neq_to_eq", "=\\= to =:=", true},
    {Op::kStructEqToNeq, "struct_eq_to_neq", "== to \\==", true},
    {Op::kStructNeqToEq, "struct_neq_to_eq", "\\== to ==", true},
    {Op::kGtToLe, "gt_to_le", "> to =<", true},
    {Op::kGeToLt, "ge_to_lt", ">= to <", true},
    {Op::kLtToGe, "lt_to_ge", "< to >=", true},
    {Op::kLeToGt, "le_to_gt", "=< to >", true},
    {Op::kPlusToMinus, "plus_to_minus", "+ to -", true},
    {Op::kMinusToPlus, "minus_to_plus", "- to +", true},
    {Op::kTimesToPlus, "times_to_plus", "* to +", true},
    {Op::kDivToMinus, "div_to_minus", "/ to -", true},
    {Op::kIncNumber, "inc_number", "increase number", true},
    {Op::kDecNumber, "dec_number", "decrease number", true},
    {Op::kNegateGoal, "negate_goal", "negate expression", true},
    {Op::kTrueToFalse, "true_to_false", "true to false", true},
    {Op::kFalseToTrue, "false_to_true", "false to true", true},
    {Op::kVarToAnon, "var_to_anon", "var to _", true},
    {Op::kAtomToAnon, "atom_to_anon", "atom to _", true},
    {Op::kNilToAnon, "nil_to_anon", "[] to _", true},
    {Op::kPermuteCut, "permute_cut", "permute cut", false},
    {Op::kReversePredicate, "reverse_predicate", "reverse predicate", false},
}};

// Functor swaps: goal-position comparisons and body arithmetic.
struct Swap {
  Op op;
  std::string_view from;
  std::string_view to;
};

constexpr std::array<Swap, 10> kRelational = {{
    {Op::kEqToNeq, "=", "\\="},
    {Op::kNeqToEq, "\\=", "="},
    {Op::kArithEqToNeq, "=:=", "=\\="},
    {Op::kArithNeqToEq, "=\\=", "=:="},
    {Op::kStructEqToNeq, "==", "\\=="},
    {Op::kStructNeqToEq, "\\==", "=="},
    {Op::kGtToLe, ">", "=<"},
    {Op::kGeToLt, ">=", "<"},
    {Op::kLtToGe, "<", ">="},
    {Op::kLeToGt, "=<", ">"},
}};

constexpr std::array<Swap, 4> kArithmetic = {{
    {Op::kPlusToMinus, "+", "-"},
    {Op::kMinusToPlus, "-", "+"},
    {Op::kTimesToPlus, "*", "+"},
    {Op::kDivToMinus, "/", "-"},
}};

const Swap* FindSwap(Op op) {
  for (const Swap& s : kRelational) {
    if (s.op == op) return &s;
  }
  for (const Swap& s : kArithmetic) {
    if (s.op == op) return &s;
  }
  return nullptr;
}

bool IsConj(const Term& t) { return t.Is(",", 2); }

// Path of the conjunct running just before the cut at `cut`, if any.
// Conjunctions nest either way, so climb while the cut leads its subtree.
std::optional<TermPath> PrecedingConjunct(const Clause& clause,
                                          const TermPath& cut) {
  if (cut.empty() || cut[0] != 1) return std::nullopt;
  TermPath cur = cut;
  while (cur.size() >= 2 && IsConj(ResolvePath(clause, cur.Parent()))) {
    if (cur.steps().back() == 1) {
      TermPath prev = cur.Parent().Child(0);
      while (IsConj(ResolvePath(clause, prev))) prev = prev.Child(1);
      if (ResolvePath(clause, prev).Is("!", 0)) return std::nullopt;
      return prev;
    }
    cur = cur.Parent();
  }
  return std::nullopt;
}

enum class Role { kGoal, kArg };

class Scanner {
 public:
  Scanner(const Clause& clause, std::vector<std::pair<Op, TermPath>>& out)
      : clause_(clause), out_(out) {}

  void Run() {
    const Term& head = clause_.head();
    Visit(head, TermPath{0}, Role::kArg, /*in_body=*/false, /*is_head=*/true);
    if (!clause_.is_fact()) {
      Visit(clause_.body(), TermPath{1}, Role::kGoal, true, false);
    }
  }

 private:
  void Add(Op op, const TermPath& path) { out_.emplace_back(op, path); }

  void Visit(const Term& t, const TermPath& path, Role role, bool in_body,
             bool is_head) {
    switch (t.kind()) {
      case TermKind::kVar:
        if (!t.anonymous()) Add(Op::kVarToAnon, path);
        return;
      case TermKind::kInt:
      case TermKind::kFloat:
        Add(Op::kIncNumber, path);
        Add(Op::kDecNumber, path);
        return;
      case TermKind::kAtom:
        if (role == Role::kGoal) {
          VisitAtomGoal(t, path);
        } else if (!is_head) {
          Add(t.is_nil() ? Op::kNilToAnon : Op::kAtomToAnon, path);
        }
        return;
      case TermKind::kCompound:
        break;
    }
    if (in_body && t.arity() == 2) {
      for (const Swap& s : kArithmetic) {
        if (t.name() == s.from) Add(s.op, path);
      }
    }
    Role child_role = Role::kArg;
    if (role == Role::kGoal) {
      const std::string& f = t.name();
      if (t.arity() == 2 && (f == "," || f == ";" || f == "->")) {
        if (f == ",") Add(Op::kCommaToSemi, path);
        if (f == ";" && !t.arg(0).Is("->", 2)) Add(Op::kSemiToComma, path);
        child_role = Role::kGoal;
      } else if (t.arity() == 1 && f == "\\+") {
        child_role = Role::kGoal;
      } else {
        if (t.arity() == 2) {
          for (const Swap& s : kRelational) {
            if (f == s.from) Add(s.op, path);
          }
        }
        Add(Op::kNegateGoal, path);
      }
    }
    for (std::uint32_t i = 0; i < t.arity(); ++i) {
      Visit(t.arg(i), path.Child(i), child_role, in_body, false);
    }
  }

  void VisitAtomGoal(const Term& t, const TermPath& path) {
    if (t.name() == "!") {
      if (PrecedingConjunct(clause_, path)) Add(Op::kPermuteCut, path);
      return;
    }
    if (t.name() == "true") Add(Op::kTrueToFalse, path);
    if (t.name() == "fail" || t.name() == "false") {
      Add(Op::kFalseToTrue, path);
    }
    Add(Op::kNegateGoal, path);
  }

  const Clause& clause_;
  std::vector<std::pair<Op, TermPath>>& out_;
};

std::vector<std::size_t> ClausePositions(const Program& p, const PredKey& k) {
  const auto* positions = p.Lookup(PredKeyRef{k.name, k.arity});
  return positions ? *positions : std::vector<std::size_t>{};
}

// Reversing a predicate whose clause list reads the same both ways would
// give the original program back.
bool ReversalChanges(const Program& p, const PredKey& key) {
  const std::vector<std::size_t> pos = ClausePositions(p, key);
  for (std::size_t i = 0, j = pos.size() - 1; i < j; ++i, --j) {
    if (!StructurallyEqual(p.clauses()[pos[i]], p.clauses()[pos[j]])) {
      return true;
    }
  }
  return false;
}

bool SameTarget(const MutationSite& a, const MutationSite& b) {
  return a.op == b.op && a.pred == b.pred && a.clause == b.clause &&
         a.position == b.position && a.path == b.path;
}

std::string Lines(const std::vector<Clause>& clauses, char mark) {
  std::string out;
  for (const Clause& c : clauses) {
    out += mark;
    out += ' ';
    out += FormatClause(c);
    out += '\n';
  }
  return out;
}

Term NodeReplacement(const Clause& clause, const MutationSite& site,
                     const Term& node) {
  switch (site.op) {
    case Op::kSemiToComma:
      return Term::Compound(",", {node.arg(0), node.arg(1)}, node.span());
    case Op::kCommaToSemi:
      return Term::Compound(";", {node.arg(0), node.arg(1)}, node.span());
    case Op::kIncNumber:
    case Op::kDecNumber: {
      const int delta = site.op == Op::kIncNumber ? 1 : -1;
      if (node.is_int()) {
        return Term::Int(node.int_value() + delta, node.span());
      }
      return Term::Float(node.float_value() + delta, node.span());
    }
    case Op::kNegateGoal:
      return Term::Compound("\\+", {node}, node.span());
    case Op::kTrueToFalse:
      return Term::Atom("fail", node.span());
    case Op::kFalseToTrue:
      return Term::Atom("true", node.span());
    case Op::kVarToAnon:
    case Op::kAtomToAnon:
    case Op::kNilToAnon:
      return Term::Var(clause.var_bound(), "_", true, node.span());
    default:
      break;
  }
  const Swap* swap = FindSwap(site.op);
  return Term::Compound(std::string(swap->to), {node.arg(0), node.arg(1)},
                        node.span());
}

}  // namespace

const std::array<OperatorInfo, kOperatorCount>& Operators() {
  return kCatalogue;
}

const OperatorInfo& Info(OperatorId op) {
  return kCatalogue[static_cast<std::size_t>(op)];
}

std::optional<OperatorId> OperatorFromName(std::string_view name) {
  for (const OperatorInfo& info : kCatalogue) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

UnknownOperator::UnknownOperator(std::string_view name)
    : Error("unknown mutation operator: " + std::string(name)) {}

std::vector<OperatorId> AllOperators() {
  std::vector<OperatorId> ops;
  for (const OperatorInfo& info : kCatalogue) ops.push_back(info.id);
  return ops;
}

std::vector<OperatorId> ParseOperatorSet(std::string_view text) {
  std::set<OperatorId> chosen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "all" || item == "sensible" || item == "foolish") {
      for (const OperatorInfo& info : kCatalogue) {
        if (item == "all" || info.sensible == (item == "sensible")) {
          chosen.insert(info.id);
        }
      }
    } else if (auto op = OperatorFromName(item)) {
      chosen.insert(*op);
    } else {
      throw UnknownOperator(item);
    }
    start = comma + 1;
  }
  return {chosen.begin(), chosen.end()};
}

StaleSite::StaleSite(const MutationSite& site)
    : Error("site " + std::to_string(site.id) + " (" +
            std::string(Info(site.op).name) + " at " + DescribeSite(site) +
            ") does not apply to this program") {}

std::string DescribeSite(const MutationSite& site) {
  std::string out = site.pred.ToString();
  if (!site.predicate_level()) {
    out += " clause " + std::to_string(site.clause) + " path " +
           site.path.ToString();
  }
  return out;
}

std::vector<MutationSite> EnumerateSites(const Program& program,
                                         const std::vector<OperatorId>& ops) {
  const std::set<OperatorId> wanted(ops.begin(), ops.end());
  // Node-level sites for every clause, grouped by operator.
  std::map<Op, std::vector<std::pair<std::size_t, TermPath>>> nodes;
  for (std::size_t pos = 0; pos < program.clauses().size(); ++pos) {
    std::vector<std::pair<Op, TermPath>> found;
    Scanner(program.clauses()[pos], found).Run();
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto& [op, path] : found) {
      if (wanted.count(op)) nodes[op].emplace_back(pos, std::move(path));
    }
  }
  std::vector<MutationSite> sites;
  for (OperatorId op : wanted) {
    MutationSite site;
    site.op = op;
    if (op == Op::kRemovePredicate || op == Op::kReversePredicate) {
      for (const PredKey& key : program.predicates()) {
        if (op == Op::kReversePredicate &&
            (ClausePositions(program, key).size() < 2 ||
             !ReversalChanges(program, key))) {
          continue;
        }
        site.pred = key;
        site.position = ClausePositions(program, key).front();
        site.id = sites.size();
        sites.push_back(site);
      }
      continue;
    }
    for (const auto& [pos, path] : nodes[op]) {
      const Clause& c = program.clauses()[pos];
      site.pred = c.key();
      site.clause = c.index();
      site.position = pos;
      site.path = path;
      site.id = sites.size();
      sites.push_back(site);
    }
  }
  return sites;
}

Mutant Apply(const Program& program, const MutationSite& site) {
  bool known = false;
  for (const MutationSite& s : EnumerateSites(program, {site.op})) {
    if (SameTarget(s, site)) {
      known = true;
      break;
    }
  }
  if (!known) throw StaleSite(site);

  Mutant m;
  m.site = site;
  const std::vector<Clause>& clauses = program.clauses();
  std::vector<Clause> out;
  std::vector<Clause> before;
  std::vector<Clause> after;
  if (site.op == Op::kRemovePredicate) {
    for (const Clause& c : clauses) {
      if (c.key() == site.pred) {
        before.push_back(c);
      } else {
        out.push_back(c);
      }
    }
  } else if (site.op == Op::kReversePredicate) {
    out = clauses;
    const std::vector<std::size_t> pos = ClausePositions(program, site.pred);
    for (std::size_t k = 0; k < pos.size(); ++k) {
      out[pos[k]] = clauses[pos[pos.size() - 1 - k]];
      before.push_back(clauses[pos[k]]);
      after.push_back(out[pos[k]]);
    }
  } else {
    out = clauses;
    const Clause& c = clauses[site.position];
    Clause changed = c;
    if (site.op == Op::kPermuteCut) {
      const TermPath prev = *PrecedingConjunct(c, site.path);
      const Term cut = ResolvePath(c, site.path);
      const Term goal = ResolvePath(c, prev);
      changed = ReplaceAt(ReplaceAt(c, site.path, goal), prev, cut);
    } else {
      changed = ReplaceAt(c, site.path,
                          NodeReplacement(c, site, ResolvePath(c, site.path)));
    }
    before.push_back(c);
    after.push_back(changed);
    out[site.position] = std::move(changed);
  }
  m.program = program.WithClauses(std::move(out));
  m.diff = "@@ " + DescribeSite(site) + "\n" + Lines(before, '-') +
           Lines(after, '+');
  return m;
}

}  // namespace promut
