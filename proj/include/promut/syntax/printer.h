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

#ifndef PROMUT_SYNTAX_PRINTER_H_
#define PROMUT_SYNTAX_PRINTER_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "promut/syntax/program.h"
#include "promut/syntax/term.h"

namespace promut {

struct FormatOptions {
  // Quote atoms that would not read back as themselves.
  bool quoted = true;
  // Functional notation for every compound except lists, with no spaces.
  // Matches the usual write_canonical layout.
  bool ignore_ops = false;
  // Subterms nested deeper than this print as `...`. 0 disables the cap.
  std::size_t max_depth = 0;
};

std::string FormatTerm(const Term& term, const FormatOptions& options = {});

// `min(A,B,A) :- A < B, !.` without a trailing newline.
std::string FormatClause(const Clause& clause);

// One clause or directive per line, in source order.
std::string PrettyPrint(const Program& program);

std::string FormatAtom(std::string_view name, bool quoted = true);
std::string FormatFloat(double value);

}  // namespace promut

#endif  // PROMUT_SYNTAX_PRINTER_H_
