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

#ifndef PROMUT_SYNTAX_PARSER_H_
#define PROMUT_SYNTAX_PARSER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "promut/error.h"
#include "promut/syntax/program.h"
#include "promut/syntax/term.h"

namespace promut {

// 1-based line and column of a byte offset.
struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

SourceLocation LocationOf(std::string_view source, std::uint32_t offset);

class ParseError : public Error {
 public:
  ParseError(std::string message, SourceLocation where,
             std::vector<std::string> expected = {});

  const SourceLocation& where() const { return where_; }
  std::size_t line() const { return where_.line; }
  std::size_t column() const { return where_.column; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceLocation where_;
  std::vector<std::string> expected_;
};

// Valid Prolog that this reader deliberately does not accept.
class UnsupportedConstruct : public Error {
 public:
  UnsupportedConstruct(std::string construct, SourceLocation where);

  const std::string& construct() const { return construct_; }
  const SourceLocation& where() const { return where_; }

 private:
  std::string construct_;
  SourceLocation where_;
};

// Variable names seen while reading one clause or query. `_` never enters
// the map; every occurrence gets its own id.
struct VarScope {
  std::map<std::string, VarId, std::less<>> ids;
  std::vector<std::string> names_in_order;
  VarId next = 0;
};

// One `Term.` item as read, before it is classified.
struct SourceItem {
  Term term;
  Span span;
  SourceLocation where;
  VarScope vars;
  bool directive = false;  // written as `:- Goal.`; `term` is Goal
};

std::vector<SourceItem> ReadItems(std::string_view source);

// Turns a read term into a clause, rejecting heads that are variables,
// numbers, control constructs or built-ins, and bodies with non-callable
// goals.
Clause ClauseFromTerm(const Term& term, SourceLocation where = {});

// Whole-file reader. Directives are kept apart from clauses.
Program ParseProgram(std::string_view source);

// Reads a single term, optionally terminated by `.`. Variables are numbered
// through `scope` when given, so several calls can share names.
Term ParseTerm(std::string_view text, VarScope* scope = nullptr);

// Number of lines containing something other than layout.
std::size_t CountLinesOfCode(std::string_view source);

}  // namespace promut

#endif  // PROMUT_SYNTAX_PARSER_H_
