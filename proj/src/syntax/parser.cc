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

#include "promut/syntax/parser.h"

#include <charconv>
#include <cstring>
#include <utility>

#include "promut/syntax/op_table.h"

namespace promut {

SourceLocation LocationOf(std::string_view source, std::uint32_t offset) {
  SourceLocation loc;
  const std::size_t end = std::min<std::size_t>(offset, source.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (source[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

namespace {

std::string Describe(const std::string& message, SourceLocation where,
                     const std::vector<std::string>& expected) {
  std::string out = std::to_string(where.line) + ":" +
                    std::to_string(where.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string message, SourceLocation where,
                       std::vector<std::string> expected)
    : Error(Describe(message, where, expected)),
      where_(where),
      expected_(std::move(expected)) {}

UnsupportedConstruct::UnsupportedConstruct(std::string construct,
                                           SourceLocation where)
    : Error(Describe("unsupported construct: " + construct, where, {})),
      construct_(std::move(construct)),
      where_(where) {}

namespace {

enum class Tok { kName, kVar, kInt, kFloat, kPunct, kEnd, kEof };

struct Token {
  Tok kind = Tok::kEof;
  std::string text;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  bool quoted = false;
  bool layout_before = false;
  // A name immediately followed by '(' (functional notation).
  bool functional = false;
  Integer int_value;
  double float_value = 0.0;
};

bool IsSymbolChar(char c) {
  return c != '\0' && std::strchr("+-*/\\^<>=~:.?@#&$", c) != nullptr;
}
bool IsAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsUpperOrUnderscore(char c) {
  return (c >= 'A' && c <= 'Z') || c == '_';
}
bool IsLayout(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      const bool layout = SkipLayout();
      Token t = Next();
      t.layout_before = layout;
      const bool done = t.kind == Tok::kEof;
      out.push_back(std::move(t));
      if (done) return out;
    }
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  SourceLocation Where(std::size_t offset) const {
    return LocationOf(src_, static_cast<std::uint32_t>(offset));
  }

  [[noreturn]] void Fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, Where(at));
  }

  [[noreturn]] void Unsupported(const std::string& what,
                                std::size_t at) const {
    throw UnsupportedConstruct(what, Where(at));
  }

  bool SkipLayout() {
    const std::size_t start = pos_;
    for (;;) {
      if (IsLayout(Peek())) {
        ++pos_;
      } else if (Peek() == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (Peek() == '/' && Peek(1) == '*') {
        const std::size_t close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) {
          Fail("unterminated block comment", pos_);
        }
        pos_ = close + 2;
      } else {
        return pos_ != start;
      }
    }
  }

  Token Make(Tok kind, std::size_t begin, std::string text) {
    Token t;
    t.kind = kind;
    t.begin = static_cast<std::uint32_t>(begin);
    t.end = static_cast<std::uint32_t>(pos_);
    t.text = std::move(text);
    if (kind == Tok::kName) t.functional = Peek() == '(';
    return t;
  }

  Token Next() {
    const std::size_t begin = pos_;
    const char c = Peek();
    if (pos_ >= src_.size()) return Make(Tok::kEof, begin, "");
    if (IsDigit(c)) return Number();
    if (IsLower(c)) {
      while (IsAlnum(Peek())) ++pos_;
      return Make(Tok::kName, begin, std::string(src_.substr(begin, pos_ - begin)));
    }
    if (IsUpperOrUnderscore(c)) {
      while (IsAlnum(Peek())) ++pos_;
      return Make(Tok::kVar, begin, std::string(src_.substr(begin, pos_ - begin)));
    }
    if (c == '\'') return Quoted();
    if (c == '"') Unsupported("double-quoted string", begin);
    if (c == '`') Unsupported("back-quoted string", begin);
    if (c == '{' || c == '}') Unsupported("curly-bracket term", begin);
    if (c == '!' || c == ';') {
      ++pos_;
      return Make(Tok::kName, begin, std::string(1, c));
    }
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '|') {
      ++pos_;
      return Make(Tok::kPunct, begin, std::string(1, c));
    }
    if (IsSymbolChar(c)) {
      while (IsSymbolChar(Peek())) ++pos_;
      std::string text(src_.substr(begin, pos_ - begin));
      if (text == "." && (pos_ >= src_.size() || IsLayout(Peek()) ||
                          Peek() == '%')) {
        return Make(Tok::kEnd, begin, text);
      }
      if (text == "-->") Unsupported("grammar rule (-->)", begin);
      return Make(Tok::kName, begin, std::move(text));
    }
    Fail(std::string("unexpected character '") + c + "'", begin);
  }

  Token Number() {
    const std::size_t begin = pos_;
    if (Peek() == '0' && Peek(1) == '\'') {
      Unsupported("character code literal (0'c)", begin);
    }
    if (Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'o' || Peek(1) == 'b') &&
        IsAlnum(Peek(2))) {
      Unsupported("radix integer literal", begin);
    }
    while (IsDigit(Peek())) ++pos_;
    if (Peek() == '\'') Unsupported("radix integer literal", begin);
    bool is_float = false;
    if (Peek() == '.' && IsDigit(Peek(1))) {
      is_float = true;
      pos_ += 1;
      while (IsDigit(Peek())) ++pos_;
      if ((Peek() == 'e' || Peek() == 'E') &&
          (IsDigit(Peek(1)) ||
           ((Peek(1) == '+' || Peek(1) == '-') && IsDigit(Peek(2))))) {
        pos_ += 2;
        while (IsDigit(Peek())) ++pos_;
      }
    }
    const std::string_view text = src_.substr(begin, pos_ - begin);
    Token t = Make(is_float ? Tok::kFloat : Tok::kInt, begin, std::string(text));
    if (is_float) {
      auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), t.float_value);
      if (ec != std::errc()) Fail("float literal out of range", begin);
    } else {
      t.int_value = Integer(t.text);
    }
    return t;
  }

  Token Quoted() {
    const std::size_t begin = pos_;
    ++pos_;
    std::string text;
    for (;;) {
      if (pos_ >= src_.size()) Fail("unterminated quoted atom", begin);
      const char c = src_[pos_++];
      if (c == '\'') {
        if (Peek() == '\'') {
          text += '\'';
          ++pos_;
          continue;
        }
        break;
      }
      if (c == '\n') Fail("newline in quoted atom", begin);
      if (c != '\\') {
        text += c;
        continue;
      }
      const char e = Peek();
      ++pos_;
      switch (e) {
        case '\\': text += '\\'; break;
        case '\'': text += '\''; break;
        case '"': text += '"'; break;
        case '`': text += '`'; break;
        case 'n': text += '\n'; break;
        case 't': text += '\t'; break;
        case 'r': text += '\r'; break;
        case 'a': text += '\a'; break;
        case 'b': text += '\b'; break;
        case 'f': text += '\f'; break;
        case 'v': text += '\v'; break;
        case '0': text += '\0'; break;
        case '\n': break;  // line continuation
        default:
          Fail(std::string("unknown escape sequence '\\") + e + "'", pos_ - 2);
      }
    }
    Token t = Make(Tok::kName, begin, std::move(text));
    t.quoted = true;
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

bool IsDelimiter(const Token& t) {
  if (t.kind == Tok::kEnd || t.kind == Tok::kEof) return true;
  return t.kind == Tok::kPunct && t.text != "(" && t.text != "[";
}

// Term reader over a token stream. Items end at a kEnd token.
class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> tokens)
      : src_(src), tokens_(std::move(tokens)) {}

  bool AtEof() const { return Peek().kind == Tok::kEof; }

  SourceItem ReadItem() {
    SourceItem item;
    scope_ = &item.vars;
    const Token& first = Peek();
    item.where = Where(first.begin);
    Term t;
    if (first.kind == Tok::kName && first.text == ":-" && !first.quoted &&
        !first.functional) {
      ++pos_;
      item.directive = true;
      t = Parse(1199).term;
    } else {
      t = Parse(1200).term;
    }
    ExpectEnd(/*optional=*/false);
    item.term = t;
    item.span = Span{first.begin, tokens_[pos_ - 1].end};
    scope_ = nullptr;
    return item;
  }

  Term ReadSingle(VarScope* scope) {
    scope_ = scope;
    Term t = Parse(1200).term;
    ExpectEnd(/*optional=*/true);
    if (!AtEof()) Error("unexpected text after term", Peek(), {"end of input"});
    scope_ = nullptr;
    return t;
  }

 private:
  struct Parsed {
    Term term;
    int priority = 0;
  };

  const Token& Peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  SourceLocation Where(std::uint32_t offset) const {
    return LocationOf(src_, offset);
  }

  [[noreturn]] void Error(const std::string& msg, const Token& at,
                          std::vector<std::string> expected = {}) const {
    throw ParseError(msg, Where(at.begin), std::move(expected));
  }

  bool IsPunct(const Token& t, std::string_view p) const {
    return t.kind == Tok::kPunct && t.text == p;
  }

  void Expect(std::string_view p, std::vector<std::string> expected) {
    if (!IsPunct(Peek(), p)) {
      Error(Peek().kind == Tok::kEof ? "unexpected end of input"
                                     : "unexpected '" + Peek().text + "'",
            Peek(), std::move(expected));
    }
    ++pos_;
  }

  void ExpectEnd(bool optional) {
    const Token& t = Peek();
    if (t.kind == Tok::kEnd) {
      ++pos_;
      return;
    }
    if (optional && t.kind == Tok::kEof) return;
    if (t.kind == Tok::kName && InfixOp(t.text) && !t.quoted) {
      Error("operator priority clash", t);
    }
    if (t.kind == Tok::kEof) {
      Error("unexpected end of input", t, {"operator", "'.'"});
    }
    Error("unexpected '" + t.text + "'", t, {"operator", "'.'"});
  }

  Term MakeVar(const Token& t) {
    const Span span{t.begin, t.end};
    if (t.text == "_") return Term::Var(scope_->next++, "_", true, span);
    auto it = scope_->ids.find(t.text);
    if (it == scope_->ids.end()) {
      it = scope_->ids.emplace(t.text, scope_->next++).first;
      scope_->names_in_order.push_back(t.text);
    }
    return Term::Var(it->second, t.text, false, span);
  }

  // Infix operator the token can act as, if any.
  std::optional<OpDef> AsInfix(const Token& t) const {
    if (t.kind == Tok::kPunct) {
      if (t.text == ",") return InfixOp(",");
      return std::nullopt;
    }
    if (t.kind != Tok::kName || (t.quoted && t.text == ",")) {
      return std::nullopt;
    }
    return InfixOp(t.text);
  }

  Parsed Parse(int max_priority) {
    Parsed left = Primary(max_priority);
    for (;;) {
      const Token& t = Peek();
      std::optional<OpDef> op = AsInfix(t);
      if (!op || op->priority > max_priority ||
          left.priority > op->LeftMax()) {
        return left;
      }
      const std::string name = t.text;
      ++pos_;
      Parsed right = Parse(op->RightMax());
      const Span span{left.term.span().begin, right.term.span().end};
      left.term = Term::Compound(name, {left.term, right.term}, span);
      left.priority = op->priority;
    }
  }

  Parsed Primary(int max_priority) {
    const Token t = Peek();
    switch (t.kind) {
      case Tok::kInt:
        ++pos_;
        return {Term::Int(t.int_value, {t.begin, t.end}), 0};
      case Tok::kFloat:
        ++pos_;
        return {Term::Float(t.float_value, {t.begin, t.end}), 0};
      case Tok::kVar:
        ++pos_;
        return {MakeVar(t), 0};
      case Tok::kPunct:
        if (t.text == "(") {
          ++pos_;
          Parsed inner = Parse(1200);
          Expect(")", {"operator", "')'"});
          return {inner.term, 0};
        }
        if (t.text == "[") return {List(), 0};
        break;
      case Tok::kName:
        return Name(max_priority);
      case Tok::kEnd:
      case Tok::kEof:
        break;
    }
    Error(t.kind == Tok::kEof   ? "unexpected end of input"
          : t.kind == Tok::kEnd ? "unexpected end of clause"
                                : "unexpected '" + t.text + "'",
          t, {"term"});
  }

  Parsed Name(int max_priority) {
    const Token t = Peek();
    ++pos_;
    if (t.functional) {
      ++pos_;  // '('
      std::vector<Term> args;
      for (;;) {
        args.push_back(Parse(999).term);
        if (IsPunct(Peek(), ",")) {
          ++pos_;
          continue;
        }
        Expect(")", {"','", "')'"});
        break;
      }
      return {Term::Compound(t.text, std::move(args),
                             {t.begin, tokens_[pos_ - 1].end}),
              0};
    }
    const Token& next = Peek();
    if (!t.quoted && t.text == "-" && !next.layout_before &&
        (next.kind == Tok::kInt || next.kind == Tok::kFloat)) {
      ++pos_;
      const Span span{t.begin, next.end};
      if (next.kind == Tok::kInt) return {Term::Int(-next.int_value, span), 0};
      return {Term::Float(-next.float_value, span), 0};
    }
    const Term atom = Term::Atom(t.text, {t.begin, t.end});
    std::optional<OpDef> prefix = t.quoted ? std::nullopt : PrefixOp(t.text);
    if (!prefix) return {atom, 0};
    // A prefix operator with nothing to apply to is an ordinary atom.
    if (IsDelimiter(next) ||
        (next.kind == Tok::kName && InfixOp(next.text) &&
         !PrefixOp(next.text) && !next.functional)) {
      return {atom, 0};
    }
    if (prefix->priority > max_priority) {
      Error("operator priority clash", t);
    }
    Parsed operand = Parse(prefix->RightMax());
    const Span span{t.begin, operand.term.span().end};
    return {Term::Compound(t.text, {operand.term}, span), prefix->priority};
  }

  Term List() {
    const Token open = Peek();
    ++pos_;
    if (IsPunct(Peek(), "]")) {
      ++pos_;
      return Term::Nil({open.begin, tokens_[pos_ - 1].end});
    }
    std::vector<Term> items;
    Term tail;
    for (;;) {
      items.push_back(Parse(999).term);
      if (IsPunct(Peek(), ",")) {
        ++pos_;
        continue;
      }
      if (IsPunct(Peek(), "|")) {
        ++pos_;
        tail = Parse(999).term;
      }
      Expect("]", tail ? std::vector<std::string>{"']'"}
                       : std::vector<std::string>{"','", "'|'", "']'"});
      break;
    }
    const std::uint32_t end = tokens_[pos_ - 1].end;
    Term list = tail ? tail : Term::Nil({end - 1, end});
    for (std::size_t i = items.size(); i-- > 0;) {
      const std::uint32_t begin = i == 0 ? open.begin : items[i].span().begin;
      list = Term::Compound(".", {items[i], list}, {begin, end});
    }
    return list;
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  VarScope* scope_ = nullptr;
};

void CheckBody(const Term& goal, SourceLocation where) {
  if (goal.is_var()) return;
  if (goal.is_number()) {
    throw ParseError("number in goal position", where);
  }
  if (IsControl(goal)) {
    for (const Term& a : goal.args()) CheckBody(a, where);
  }
}

}  // namespace

std::vector<SourceItem> ReadItems(std::string_view source) {
  Parser parser(source, Lexer(source).Run());
  std::vector<SourceItem> items;
  while (!parser.AtEof()) items.push_back(parser.ReadItem());
  return items;
}

Clause ClauseFromTerm(const Term& term, SourceLocation where) {
  Term head = term;
  Term body;
  const bool fact = !term.Is(":-", 2);
  if (!fact) {
    head = term.arg(0);
    body = term.arg(1);
  }
  if (head.is_var()) throw ParseError("clause head is a variable", where);
  if (head.is_number()) throw ParseError("clause head is a number", where);
  const PredKey key = PredKey::Of(head);
  if (IsBuiltin(key.name, key.arity)) {
    throw ParseError("cannot define clauses for built-in " + key.ToString(),
                     where);
  }
  if (fact) return Clause::Fact(head);
  CheckBody(body, where);
  return Clause(head, body);
}

Program ParseProgram(std::string_view source) {
  std::vector<Clause> clauses;
  std::vector<Directive> directives;
  for (SourceItem& item : ReadItems(source)) {
    if (item.directive) {
      if (item.term.Is("op", 3)) {
        throw UnsupportedConstruct("op/3 declaration", item.where);
      }
      directives.push_back(Directive{item.term, clauses.size()});
      continue;
    }
    clauses.push_back(ClauseFromTerm(item.term, item.where));
  }
  return Program(std::move(clauses), std::move(directives),
                 CountLinesOfCode(source));
}

Term ParseTerm(std::string_view text, VarScope* scope) {
  VarScope local;
  Parser parser(text, Lexer(text).Run());
  return parser.ReadSingle(scope ? scope : &local);
}

std::size_t CountLinesOfCode(std::string_view source) {
  std::size_t count = 0;
  bool content = false;
  for (char c : source) {
    if (c == '\n') {
      count += content;
      content = false;
    } else if (!IsLayout(c)) {
      content = true;
    }
  }
  return count + content;
}

}  // namespace promut
