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

#ifndef PROMUT_ENGINE_ARITH_H_
#define PROMUT_ENGINE_ARITH_H_

#include <variant>

#include "promut/engine/bindings.h"
#include "promut/syntax/term.h"

namespace promut {

using Number = std::variant<Integer, double>;

// `t` must be an Int or Float term.
Number ToNumber(const Term& t);
Term ToTerm(const Number& n);

// Exact comparison by value; 1 and 1.0 compare equal.
int CompareNumbers(const Number& a, const Number& b);

// Evaluates +, -, *, / and mod (binary), unary -, and number literals.
// Integer division is exact when the divisor divides the dividend and
// produces a float otherwise. Throws PrologError.
Number Evaluate(const Term& expr, const Bindings& bindings);

}  // namespace promut

#endif  // PROMUT_ENGINE_ARITH_H_
