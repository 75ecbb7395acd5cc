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

#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "promut/syntax/parser.h"
#include "promut/syntax/printer.h"
#include "promut/syntax/program.h"
#include "test_util.h"

namespace promut {
namespace {

using ::promut::testing::CorpusPath;
using ::promut::testing::CorpusPrograms;
using ::promut::testing::DataPath;
using ::promut::testing::ReadFile;

std::string Canonical(const Term& t) {
  FormatOptions options;
  options.ignore_ops = true;
  return FormatTerm(t, options);
}

constexpr const char* kMin = "min(A,B,A) :- A < B, !.\nmin(A,B,B).";

TEST(ParseProgram, MinHasTwoClauses) {
  Program p = ParseProgram(kMin);
  ASSERT_EQ(p.predicates().size(), 1u);
  EXPECT_EQ(p.predicates()[0].ToString(), "min/3");
  ASSERT_EQ(p.clauses().size(), 2u);
  EXPECT_EQ(Canonical(p.clauses()[0].body()), "','(<(A,B),!)");
  EXPECT_EQ(p.clauses()[0].index(), 1);
  EXPECT_EQ(p.clauses()[1].index(), 2);
  EXPECT_TRUE(p.clauses()[1].is_fact());
  EXPECT_TRUE(p.clauses()[1].body().Is("true", 0));
}

TEST(ParseProgram, EmptySource) {
  Program p = ParseProgram("");
  EXPECT_TRUE(p.clauses().empty());
  EXPECT_EQ(PrettyPrint(p), "");
}

TEST(ParseProgram, DisjunctionBindsLooserThanConjunction) {
  Program p = ParseProgram("is_empty(L) :- L = [], ! ; fail.");
  EXPECT_EQ(Canonical(p.clauses()[0].body()), ";(','(=(L,[]),!),fail)");
}

TEST(ParseProgram, AnonymousVariablesAreDistinct) {
  Program p = ParseProgram("p(_, _, X, X).");
  const Term& h = p.clauses()[0].head();
  EXPECT_TRUE(h.arg(0).anonymous());
  EXPECT_NE(h.arg(0).var_id(), h.arg(1).var_id());
  EXPECT_EQ(h.arg(2).var_id(), h.arg(3).var_id());
  EXPECT_FALSE(h.arg(2).anonymous());
  EXPECT_EQ(p.clauses()[0].var_bound(), 3u);
}

TEST(ParseProgram, DirectivesAreCollectedSeparately) {
  Program p = ParseProgram(":- begin_tests(x).\na.\n:- end_tests(x).\n");
  ASSERT_EQ(p.directives().size(), 2u);
  EXPECT_EQ(p.directives()[0].position, 0u);
  EXPECT_EQ(p.directives()[1].position, 1u);
  EXPECT_EQ(p.clauses().size(), 1u);
  EXPECT_EQ(PrettyPrint(p), ":- begin_tests(x).\na.\n:- end_tests(x).\n");
}

TEST(ParseProgram, CommentsAndLinesOfCode) {
  Program p = ParseProgram("% c\n\np. /* x\ny */ q.\n\n");
  EXPECT_EQ(p.clauses().size(), 2u);
  EXPECT_EQ(p.lines_of_code(), 3u);
}

TEST(ParseProgram, NegativeLiteralsAndPrefixMinus) {
  EXPECT_EQ(Canonical(ParseTerm("f(-1)")), "f(-1)");
  EXPECT_EQ(Canonical(ParseTerm("- 1")), "-(1)");
  EXPECT_EQ(Canonical(ParseTerm("-(1)")), "-(1)");
  EXPECT_EQ(Canonical(ParseTerm("a - 1")), "-(a,1)");
  EXPECT_EQ(Canonical(ParseTerm("a-1")), "-(a,1)");
  EXPECT_EQ(Canonical(ParseTerm("- a")), "-(a)");
  EXPECT_EQ(Canonical(ParseTerm("[-]")), "[-]");
  EXPECT_EQ(Canonical(ParseTerm("- = a")), "=(-,a)");
}

TEST(ParseProgram, ArithmeticPrecedence) {
  EXPECT_EQ(Canonical(ParseTerm("X is 2 + 3 * 4 - 1")),
            "is(X,-(+(2,*(3,4)),1))");
  EXPECT_EQ(Canonical(ParseTerm("X is 7 mod 3")), "is(X,mod(7,3))");
  EXPECT_EQ(Canonical(ParseTerm("(a :- b, c ; d -> e)")),
            ":-(a,;(','(b,c),->(d,e)))");
}

TEST(ParseError, ReportsLineColumnAndExpected) {
  try {
    ParseProgram("p.\nq(a,.\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ParseError, MalformedInputs) {
  for (const char* src :
       {"p(", "p :- .", "p(a", "[a", "p :- q", "'abc", "p) .", "a = b = c.",
        "X :- true.", "1 :- true.", "p :- 1.", "p :- (q, 2).", "x = \\+ y.",
        "/* open", "p :- a :- b.", "(a,b) :- c.", "true.", "call(x) :- a."}) {
    EXPECT_THROW(ParseProgram(src), ParseError) << src;
  }
}

TEST(UnsupportedConstruct, RejectedDistinctly) {
  for (const char* src :
       {":- op(700, xfx, ===).", "greeting --> [hello].", "p(0'a).",
        "p(\"str\").", "p(`abc`).", "p(0x1F).", "p({a}).", "p(16'FF)."}) {
    EXPECT_THROW(ParseProgram(src), UnsupportedConstruct) << src;
  }
}

TEST(PrettyPrint, OperatorNotationAndLists) {
  Program p = ParseProgram(kMin);
  const std::string text = PrettyPrint(p);
  EXPECT_NE(text.find("A < B"), std::string::npos);
  EXPECT_EQ(text, "min(A,B,A) :- A < B, !.\nmin(A,B,B).\n");
  EXPECT_EQ(PrettyPrint(ParseProgram("f([1,2]).")), "f([1,2]).\n");
  EXPECT_EQ(PrettyPrint(ParseProgram("f([H|T], _, 'A b', [])."))
                .substr(0, 22),
            "f([H|T],_,'A b',[]).\n");
}

TEST(PrettyPrint, ParenthesizesWhenNeeded) {
  EXPECT_EQ(FormatTerm(ParseTerm("(a , b) = c")), "(a, b) = c");
  EXPECT_EQ(FormatTerm(ParseTerm("f((a , b))")), "f((a, b))");
  EXPECT_EQ(FormatTerm(ParseTerm("(- a) = b")), "- a = b");
  EXPECT_EQ(FormatTerm(ParseTerm("(\\+ a) = b")), "(\\+ a) = b");
  EXPECT_EQ(FormatTerm(ParseTerm("- (1)")), "-(1)");
  EXPECT_EQ(FormatTerm(ParseTerm("a - (b - c)")), "a - (b - c)");
  EXPECT_EQ(FormatTerm(ParseTerm("(a - b) - c")), "a - b - c");
  EXPECT_EQ(FormatTerm(ParseTerm("X = (-)")), "X = (-)");
  EXPECT_EQ(FormatTerm(ParseTerm("','(a)")), "','(a)");
  EXPECT_EQ(FormatTerm(Term::Float(1e20)), "1.0e20");
  EXPECT_EQ(FormatTerm(Term::Float(3.5)), "3.5");
  EXPECT_EQ(FormatTerm(Term::Float(2.0)), "2.0");
}

// Differential check against the reference reader, recorded offline.
TEST(Precedence, MatchesReferenceReader) {
  const auto golden = nlohmann::json::parse(
      ReadFile(DataPath("precedence_golden.json")));
  ASSERT_EQ(golden.size(), 100u);
  for (const auto& row : golden) {
    const std::string text = row["text"];
    if (row.contains("syntax_error")) {
      EXPECT_THROW(ParseTerm(text), ParseError) << text;
      continue;
    }
    Term t = ParseTerm(text);
    EXPECT_EQ(Canonical(t), row["canonical"].get<std::string>()) << text;
    // Operator-notation output must read back to the same term.
    Term again = ParseTerm(FormatTerm(t));
    EXPECT_TRUE(IsVariant(t, again)) << text << " -> " << FormatTerm(t);
  }
}

TEST(RoundTrip, CorpusProgramsAndSuites) {
  std::vector<std::string> files;
  for (const std::string& name : CorpusPrograms()) {
    files.push_back(name + ".pl");
    files.push_back(name + "_tests.pl");
  }
  ASSERT_GE(files.size(), 18u);
  for (const std::string& file : files) {
    const Program p = ParseProgram(ReadFile(CorpusPath(file)));
    const Program q = ParseProgram(PrettyPrint(p));
    EXPECT_TRUE(IsVariant(p, q)) << file;
    EXPECT_EQ(PrettyPrint(q), PrettyPrint(p)) << file;
  }
}

std::size_t CountNodes(const Term& t) {
  if (!t.is_compound()) return 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < t.arity(); ++i) n += CountNodes(t.arg(i));
  return n;
}

TEST(TermPath, ResolveExamples) {
  Program p = ParseProgram(kMin);
  const Clause& c = p.clauses()[0];
  EXPECT_EQ(Canonical(ResolvePath(c, TermPath{1, 0})), "<(A,B)");
  EXPECT_EQ(Canonical(ResolvePath(c, TermPath{1, 0, 0})), "A");
  EXPECT_TRUE(ResolvePath(c, TermPath{0}).SameNode(c.head()));
  Program fact = ParseProgram("p.");
  EXPECT_TRUE(ResolvePath(fact.clauses()[0], TermPath{1}).Is("true", 0));
  EXPECT_THROW(ResolvePath(c, TermPath{}), InvalidPath);
  EXPECT_THROW(ResolvePath(c, TermPath{2}), InvalidPath);
  EXPECT_THROW(ResolvePath(c, TermPath{1, 2}), InvalidPath);
  EXPECT_THROW(ResolvePath(c, TermPath{1, 1, 0}), InvalidPath);
}

TEST(TermPath, CanonicalOverCorpus) {
  for (const std::string& name : CorpusPrograms()) {
    const Program p = ParseProgram(ReadFile(CorpusPath(name + ".pl")));
    for (const Clause& c : p.clauses()) {
      const std::vector<TermPath> paths = AllPaths(c);
      EXPECT_EQ(paths.size(), CountNodes(c.head()) + CountNodes(c.body()));
      std::set<TermPath> unique(paths.begin(), paths.end());
      EXPECT_EQ(unique.size(), paths.size());
      for (const TermPath& path : paths) {
        EXPECT_NO_THROW(ResolvePath(c, path)) << path.ToString();
        // Every node rewritten at its own address is found there again.
        Term marker = Term::Atom("$marker");
        Clause changed = ReplaceAt(c, path, marker);
        EXPECT_TRUE(ResolvePath(changed, path).SameNode(marker));
      }
    }
  }
}

TEST(ReplaceAt, ProducesNewClause) {
  Program p = ParseProgram(kMin);
  const Clause& c = p.clauses()[0];
  const Term lt = ResolvePath(c, TermPath{1, 0});
  Clause m = ReplaceAt(c, TermPath{1, 0},
                       Term::Compound(">=", {lt.arg(0), lt.arg(1)}));
  EXPECT_EQ(FormatClause(m), "min(A,B,A) :- A >= B, !.");
  EXPECT_EQ(FormatClause(c), "min(A,B,A) :- A < B, !.");
  EXPECT_EQ(m.index(), c.index());
}

TEST(ReplaceAt, TrueIntoFactBodyIsIdentity) {
  Program p = ParseProgram("p(a).");
  const Clause& c = p.clauses()[0];
  Clause same = ReplaceAt(c, TermPath{1}, Term::Atom("true"));
  EXPECT_TRUE(StructurallyEqual(same, c));
  EXPECT_EQ(FormatClause(same), "p(a).");
}

TEST(ReplaceAt, WrappedSortUnification) {
  const Program p = ParseProgram(ReadFile(CorpusPath("wrapped_sort.pl")));
  const Clause& c = p.clauses()[0];
  // Find the L = [] goal by walking the body.
  for (const TermPath& path : AllPaths(c)) {
    const Term node = ResolvePath(c, path);
    if (!node.Is("=", 2) || !node.arg(1).is_nil()) continue;
    Clause m = ReplaceAt(
        c, path, Term::Compound("\\=", {node.arg(0), node.arg(1)}));
    EXPECT_NE(FormatClause(m).find("L \\= [], !"), std::string::npos)
        << FormatClause(m);
    return;
  }
  FAIL() << "no L = [] goal in wrapped_sort/2 clause 1";
}

TEST(Program, IndexIsDerivable) {
  const Program p =
      ParseProgram("a(1). b. a(2). c :- a(X), b. a(3). b :- c.");
  EXPECT_TRUE(p.IndexConsistent());
  const auto* a = p.Lookup(PredKeyRef{"a", 1});
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(*a, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(p.clauses()[4].index(), 3);
  EXPECT_EQ(p.clauses()[5].index(), 2);
  EXPECT_EQ(p.Lookup(PredKeyRef{"a", 2}), nullptr);
  ASSERT_EQ(p.predicates().size(), 3u);
  EXPECT_EQ(p.predicates()[2].ToString(), "c/0");
}

// Random token soup must either parse or raise one of the syntax errors.
TEST(Fuzz, TokenSequencesNeverCrash) {
  const std::vector<std::string> tokens = {
      "a", "X", "_", "1", "-1", "2.5", "'q w'", "(", ")", "[", "]", "|", ",",
      ";", "->", ":-", "\\+", "-", "+", "*", "/", "mod", "is", "=", "\\=",
      "==", "<", ">=", "!", "f(", "g(", ".", " ", "[]", "% c\n", "."};
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  std::uniform_int_distribution<int> length(1, 14);
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string src;
    const int n = length(rng);
    for (int k = 0; k < n; ++k) src += tokens[pick(rng)] + " ";
    src += ".";
    try {
      Program p = ParseProgram(src);
      ++parsed;
      Program q = ParseProgram(PrettyPrint(p));
      EXPECT_TRUE(IsVariant(p, q)) << src;
    } catch (const ParseError&) {
    } catch (const UnsupportedConstruct&) {
    }
  }
  EXPECT_GT(parsed, 0);
}

}  // namespace
}  // namespace promut
