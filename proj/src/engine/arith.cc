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

#include "promut/engine/arith.h"

#include <cmath>

namespace promut {
namespace {

[[noreturn]] void Throw(Term formal) { throw PrologError(std::move(formal), {}); }

Term Indicator(const std::string& name, std::size_t arity) {
  return Term::Compound("/", {Term::Atom(name), Term::Int(arity)});
}

double ToDouble(const Number& n) {
  if (const double* d = std::get_if<double>(&n)) return *d;
  const double d = std::get<Integer>(n).convert_to<double>();
  if (std::isinf(d)) Throw(EvaluationError("float_overflow"));
  return d;
}

Number CheckFloat(double d) {
  if (std::isnan(d)) Throw(EvaluationError("undefined"));
  if (std::isinf(d)) Throw(EvaluationError("float_overflow"));
  return d;
}

bool IsZero(const Number& n) {
  if (const double* d = std::get_if<double>(&n)) return *d == 0.0;
  return std::get<Integer>(n).is_zero();
}

Number Add(const Number& a, const Number& b) {
  if (a.index() == 0 && b.index() == 0) {
    return Integer(std::get<Integer>(a) + std::get<Integer>(b));
  }
  return CheckFloat(ToDouble(a) + ToDouble(b));
}

Number Sub(const Number& a, const Number& b) {
  if (a.index() == 0 && b.index() == 0) {
    return Integer(std::get<Integer>(a) - std::get<Integer>(b));
  }
  return CheckFloat(ToDouble(a) - ToDouble(b));
}

Number Mul(const Number& a, const Number& b) {
  if (a.index() == 0 && b.index() == 0) {
    return Integer(std::get<Integer>(a) * std::get<Integer>(b));
  }
  return CheckFloat(ToDouble(a) * ToDouble(b));
}

Number Div(const Number& a, const Number& b) {
  if (IsZero(b)) Throw(EvaluationError("zero_divisor"));
  if (a.index() == 0 && b.index() == 0) {
    const Integer& x = std::get<Integer>(a);
    const Integer& y = std::get<Integer>(b);
    if (Integer(x % y).is_zero()) return Integer(x / y);
  }
  return CheckFloat(ToDouble(a) / ToDouble(b));
}

Number Mod(const Number& a, const Number& b) {
  if (a.index() != 0) Throw(TypeError("integer", ToTerm(a)));
  if (b.index() != 0) Throw(TypeError("integer", ToTerm(b)));
  const Integer& x = std::get<Integer>(a);
  const Integer& y = std::get<Integer>(b);
  if (y.is_zero()) Throw(EvaluationError("zero_divisor"));
  Integer r = x % y;
  // The result takes the sign of the divisor.
  if (!r.is_zero() && (r < 0) != (y < 0)) r += y;
  return r;
}

Number Negate(const Number& a) {
  if (const double* d = std::get_if<double>(&a)) return -*d;
  return Integer(-std::get<Integer>(a));
}

Number Eval(const Term& in, const Bindings& b) {
  const Term t = b.Deref(in);
  switch (t.kind()) {
    case TermKind::kVar:
      Throw(InstantiationError());
    case TermKind::kInt:
    case TermKind::kFloat:
      return ToNumber(t);
    case TermKind::kAtom:
      Throw(TypeError("evaluable", Indicator(t.name(), 0)));
    case TermKind::kCompound:
      break;
  }
  const std::string& f = t.name();
  if (t.arity() == 1 && f == "-") return Negate(Eval(t.arg(0), b));
  if (t.arity() == 2) {
    if (f == "+") return Add(Eval(t.arg(0), b), Eval(t.arg(1), b));
    if (f == "-") return Sub(Eval(t.arg(0), b), Eval(t.arg(1), b));
    if (f == "*") return Mul(Eval(t.arg(0), b), Eval(t.arg(1), b));
    if (f == "/") return Div(Eval(t.arg(0), b), Eval(t.arg(1), b));
    if (f == "mod") return Mod(Eval(t.arg(0), b), Eval(t.arg(1), b));
  }
  Throw(TypeError("evaluable", Indicator(f, t.arity())));
}

}  // namespace

Number ToNumber(const Term& t) {
  if (t.is_int()) return t.int_value();
  return t.float_value();
}

Term ToTerm(const Number& n) {
  if (const double* d = std::get_if<double>(&n)) return Term::Float(*d);
  return Term::Int(std::get<Integer>(n));
}

int CompareNumbers(const Number& a, const Number& b) {
  auto sign = [](auto x, auto y) { return x < y ? -1 : (y < x ? 1 : 0); };
  if (a.index() == 0 && b.index() == 0) {
    return sign(std::get<Integer>(a), std::get<Integer>(b));
  }
  if (a.index() == 1 && b.index() == 1) {
    return sign(std::get<double>(a), std::get<double>(b));
  }
  if (a.index() == 1) return -CompareNumbers(b, a);
  // Integer against float, compared exactly.
  const Integer& i = std::get<Integer>(a);
  const double f = std::get<double>(b);
  if (std::isnan(f)) return -1;
  if (std::isinf(f)) return f > 0 ? -1 : 1;
  const double fl = std::floor(f);
  const Integer whole(fl);
  if (i < whole) return -1;
  if (i > whole) return 1;
  return fl == f ? 0 : -1;
}

Number Evaluate(const Term& expr, const Bindings& bindings) {
  return Eval(expr, bindings);
}

}  // namespace promut
