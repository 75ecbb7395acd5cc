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

#include "promut/syntax/printer.h"

#include <charconv>
#include <cmath>
#include <cstring>

#include "promut/syntax/op_table.h"

namespace promut {
namespace {

bool IsSymbolChar(char c) {
  return c != '\0' && std::strchr("+-*/\\^<>=~:.?@#&$", c) != nullptr;
}

bool IsAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool NeedsQuotes(std::string_view name) {
  if (name.empty()) return true;
  if (name == "!" || name == ";" || name == "[]" || name == "{}") return false;
  if (name[0] >= 'a' && name[0] <= 'z') {
    for (char c : name) {
      if (!IsAlnum(c)) return true;
    }
    return false;
  }
  for (char c : name) {
    if (!IsSymbolChar(c)) return true;
  }
  // "." ends a clause and "/*" opens a comment.
  return name.back() == '.' || name.rfind("/*", 0) == 0;
}

class Writer {
 public:
  explicit Writer(const FormatOptions& options) : options_(options) {}

  void Write(const Term& t, int max_priority, std::size_t depth) {
    if (options_.max_depth != 0 && depth > options_.max_depth) {
      out_ += "...";
      return;
    }
    switch (t.kind()) {
      case TermKind::kVar:
        if (t.anonymous()) {
          out_ += '_';
        } else if (!t.name().empty()) {
          out_ += t.name();
        } else {
          out_ += "_G" + std::to_string(t.var_id());
        }
        return;
      case TermKind::kInt:
        out_ += t.int_value().str();
        return;
      case TermKind::kFloat:
        out_ += FormatFloat(t.float_value());
        return;
      case TermKind::kAtom:
        out_ += FormatAtom(t.name(), options_.quoted);
        return;
      case TermKind::kCompound:
        break;
    }
    if (t.Is(".", 2)) {
      WriteList(t, depth);
      return;
    }
    if (!options_.ignore_ops) {
      if (t.arity() == 2) {
        if (auto op = InfixOp(t.name())) {
          WriteInfix(t, *op, max_priority, depth);
          return;
        }
      }
      if (t.arity() == 1 && !t.arg(0).is_number()) {
        if (auto op = PrefixOp(t.name())) {
          WritePrefix(t, *op, max_priority, depth);
          return;
        }
      }
    }
    out_ += FormatAtom(t.name(), options_.quoted);
    out_ += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i > 0) out_ += ',';
      Write(t.arg(i), 999, depth + 1);
    }
    out_ += ')';
  }

  std::string Take() { return std::move(out_); }

 private:
  void WriteOperand(const Term& t, int max_priority, std::size_t depth) {
    if (t.is_atom() && IsOperatorAtom(t.name())) {
      out_ += '(';
      out_ += FormatAtom(t.name(), options_.quoted);
      out_ += ')';
      return;
    }
    Write(t, max_priority, depth);
  }

  void WriteInfix(const Term& t, const OpDef& op, int max_priority,
                  std::size_t depth) {
    const bool parens = op.priority > max_priority;
    if (parens) out_ += '(';
    WriteOperand(t.arg(0), op.LeftMax(), depth + 1);
    if (t.name() == ",") {
      out_ += ", ";
    } else {
      out_ += ' ';
      out_ += FormatAtom(t.name(), options_.quoted);
      out_ += ' ';
    }
    WriteOperand(t.arg(1), op.RightMax(), depth + 1);
    if (parens) out_ += ')';
  }

  void WritePrefix(const Term& t, const OpDef& op, int max_priority,
                   std::size_t depth) {
    const bool parens = op.priority > max_priority;
    if (parens) out_ += '(';
    out_ += FormatAtom(t.name(), options_.quoted);
    out_ += ' ';
    WriteOperand(t.arg(0), op.RightMax(), depth + 1);
    if (parens) out_ += ')';
  }

  void WriteList(const Term& t, std::size_t depth) {
    out_ += '[';
    Term cell = t;
    bool first = true;
    std::size_t d = depth;
    while (cell.Is(".", 2)) {
      if (options_.max_depth != 0 && d > options_.max_depth) {
        out_ += "|...]";
        return;
      }
      if (!first) out_ += ',';
      first = false;
      Write(cell.arg(0), 999, d + 1);
      cell = cell.arg(1);
      ++d;
    }
    if (!cell.is_nil()) {
      out_ += '|';
      Write(cell, 999, d + 1);
    }
    out_ += ']';
  }

  const FormatOptions& options_;
  std::string out_;
};

std::string WithStop(std::string text) {
  // Keep a trailing symbol atom from swallowing the end token.
  if (!text.empty() && IsSymbolChar(text.back())) text += ' ';
  text += '.';
  return text;
}

}  // namespace

std::string FormatAtom(std::string_view name, bool quoted) {
  if (!quoted || !NeedsQuotes(name)) return std::string(name);
  std::string out = "'";
  for (char c : name) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '\'';
  return out;
}

std::string FormatFloat(double value) {
  if (std::isnan(value)) return "1.5NaN";
  if (std::isinf(value)) return value > 0 ? "1.0Inf" : "-1.0Inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string text(buf, end);
  const std::size_t e = text.find('e');
  std::string mantissa = text.substr(0, e);
  if (mantissa.find('.') == std::string::npos) mantissa += ".0";
  if (e == std::string::npos) return mantissa;
  std::string exponent = text.substr(e + 1);
  bool negative = false;
  if (!exponent.empty() && (exponent[0] == '+' || exponent[0] == '-')) {
    negative = exponent[0] == '-';
    exponent.erase(0, 1);
  }
  exponent.erase(0, std::min(exponent.find_first_not_of('0'),
                             exponent.size() - 1));
  return mantissa + "e" + (negative ? "-" : "") + exponent;
}

std::string FormatTerm(const Term& term, const FormatOptions& options) {
  Writer w(options);
  w.Write(term, 1200, 0);
  return w.Take();
}

namespace {

std::string FormatOperand(const Term& term, int max_priority) {
  FormatOptions options;
  Writer w(options);
  w.Write(term, max_priority, 0);
  return w.Take();
}

}  // namespace

std::string FormatClause(const Clause& clause) {
  if (clause.is_fact()) return WithStop(FormatOperand(clause.head(), 1199));
  return WithStop(FormatOperand(
      Term::Compound(":-", {clause.head(), clause.body()}), 1200));
}

std::string PrettyPrint(const Program& program) {
  std::string out;
  const auto& directives = program.directives();
  std::size_t next = 0;
  auto flush = [&](std::size_t position) {
    while (next < directives.size() && directives[next].position <= position) {
      out += WithStop(":- " + FormatOperand(directives[next].goal, 1199));
      out += '\n';
      ++next;
    }
  };
  for (std::size_t i = 0; i < program.clauses().size(); ++i) {
    flush(i);
    out += FormatClause(program.clauses()[i]);
    out += '\n';
  }
  flush(program.clauses().size());
  return out;
}

}  // namespace promut
