// Copyright 2026 The skewlab authors
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

#include "skewlab/eval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "skewlab/commutators.hpp"

namespace skewlab {

namespace {

// A finite twisted-Laurent polynomial, plus the precision of an O(t^P)
// marker if one was added. This is the exact-evaluation domain: no
// coefficient is ever truncated here, so sums of monomials keep their exact
// values until materialization.
struct ExactSeries {
  std::map<long, FieldValue> terms;  // zero coefficients never stored
  std::optional<long> marker;
};

using Value = std::variant<ExactSeries, SkewSeries>;

bool is_pure(const ExactSeries& e) { return !e.marker.has_value(); }

void add_term(ExactSeries& s, long e, const FieldValue& c) {
  if (c.is_zero()) return;
  auto it = s.terms.find(e);
  if (it == s.terms.end()) {
    s.terms.emplace(e, c);
    return;
  }
  it->second = field_add(it->second, c);
  if (it->second.is_zero()) s.terms.erase(it);
}

ExactSeries ex_add(const ExactSeries& a, const ExactSeries& b, bool subtract) {
  ExactSeries out = a;
  for (const auto& [e, c] : b.terms) add_term(out, e, subtract ? field_neg(c) : c);
  if (b.marker && (!out.marker || *b.marker < *out.marker)) out.marker = b.marker;
  return out;
}

ExactSeries ex_neg(const ExactSeries& a) {
  ExactSeries out;
  out.marker = a.marker;
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, field_neg(c));
  return out;
}

// Twisted product sum_{i,j} a_i sigma^i(b_j) t^{i+j}; marker-free operands.
ExactSeries ex_mul(const ExactSeries& a, const ExactSeries& b, const ContextPtr& ctx) {
  ExactSeries out;
  const Automorphism& sigma = ctx->sigma();
  for (const auto& [i, ai] : a.terms) {
    for (const auto& [j, bj] : b.terms) {
      add_term(out, i + j, field_mul(ai, sigma.apply_power(i, bj)));
    }
  }
  return out;
}

// Two-sided inverse of the monomial c*t^n: sigma^{-n}(c^{-1}) * t^{-n}.
ExactSeries ex_inv_monomial(const ExactSeries& a, const ContextPtr& ctx) {
  const auto& [n, c] = *a.terms.begin();
  ExactSeries out;
  out.terms.emplace(-n, ctx->sigma().apply_power(-n, field_inv(c)));
  return out;
}

ExactSeries ex_pow(ExactSeries base, long k, const ContextPtr& ctx) {
  ExactSeries acc;
  acc.terms.emplace(0, ctx->one());
  while (k > 0) {
    if (k & 1) acc = ex_mul(acc, base, ctx);
    k >>= 1;
    if (k > 0) base = ex_mul(base, base, ctx);
  }
  return acc;
}

// Exact value -> series. An O(t^P) marker fixes the precision; otherwise
// the working precision, widened just enough to keep every exact term.
SkewSeries materialize(Value v, const ContextPtr& ctx, long precision) {
  if (std::holds_alternative<SkewSeries>(v)) return std::get<SkewSeries>(std::move(v));
  const ExactSeries& e = std::get<ExactSeries>(v);
  long prec = precision;
  if (e.marker) {
    prec = *e.marker;
  } else {
    for (const auto& [exp, c] : e.terms) prec = std::max(prec, exp + 1);
  }
  std::vector<std::pair<long, FieldValue>> terms;
  terms.reserve(e.terms.size());
  for (const auto& [exp, c] : e.terms) {
    if (exp < prec) terms.emplace_back(exp, c);
  }
  return SkewSeries::from_terms(ctx, std::move(terms), prec);
}

Value ev(const Expr& e, const ContextPtr& ctx, long precision);

// Evaluates both children and combines as series when either side already
// is one (or carries a marker, which pins a precision).
SkewSeries ev_series(const Expr& e, const ContextPtr& ctx, long precision) {
  return materialize(ev(e, ctx, precision), ctx, precision);
}

Value ev(const Expr& e, const ContextPtr& ctx, long precision) {
  switch (e.kind) {
    case Expr::Kind::Literal: {
      ExactSeries s;
      add_term(s, 0, ctx->from_rational(BigRational(e.literal)));
      return s;
    }
    case Expr::Kind::SymbolU: {
      if (ctx->field_kind() != FieldKind::RationalFunctions) {
        throw std::invalid_argument("the symbol u needs coefficient field Q(u); context is " +
                                    ctx->description());
      }
      ExactSeries s;
      s.terms.emplace(0, ctx->generator());
      return s;
    }
    case Expr::Kind::SymbolW: {
      if (ctx->field_kind() != FieldKind::Galois) {
        throw std::invalid_argument("the symbol w needs a Galois coefficient field; context is " +
                                    ctx->description());
      }
      ExactSeries s;
      s.terms.emplace(0, ctx->generator());
      return s;
    }
    case Expr::Kind::SymbolT: {
      ExactSeries s;
      s.terms.emplace(1, ctx->one());
      return s;
    }
    case Expr::Kind::PrecisionMark: {
      ExactSeries s;
      s.marker = e.exponent;
      return s;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Value l = ev(*e.lhs, ctx, precision);
      Value r = ev(*e.rhs, ctx, precision);
      const bool subtract = e.kind == Expr::Kind::Sub;
      if (std::holds_alternative<ExactSeries>(l) && std::holds_alternative<ExactSeries>(r)) {
        return ex_add(std::get<ExactSeries>(l), std::get<ExactSeries>(r), subtract);
      }
      SkewSeries sl = materialize(std::move(l), ctx, precision);
      SkewSeries sr = materialize(std::move(r), ctx, precision);
      return subtract ? sl.sub(sr) : sl.add(sr);
    }
    case Expr::Kind::Neg: {
      Value l = ev(*e.lhs, ctx, precision);
      if (std::holds_alternative<ExactSeries>(l)) return ex_neg(std::get<ExactSeries>(l));
      return std::get<SkewSeries>(l).negate();
    }
    case Expr::Kind::Mul: {
      Value l = ev(*e.lhs, ctx, precision);
      Value r = ev(*e.rhs, ctx, precision);
      if (std::holds_alternative<ExactSeries>(l) && std::holds_alternative<ExactSeries>(r) &&
          is_pure(std::get<ExactSeries>(l)) && is_pure(std::get<ExactSeries>(r))) {
        return ex_mul(std::get<ExactSeries>(l), std::get<ExactSeries>(r), ctx);
      }
      SkewSeries sl = materialize(std::move(l), ctx, precision);
      SkewSeries sr = materialize(std::move(r), ctx, precision);
      return sl.mul(sr);
    }
    case Expr::Kind::Div: {
      Value l = ev(*e.lhs, ctx, precision);
      Value r = ev(*e.rhs, ctx, precision);
      if (std::holds_alternative<ExactSeries>(l) && std::holds_alternative<ExactSeries>(r) &&
          is_pure(std::get<ExactSeries>(l)) && is_pure(std::get<ExactSeries>(r))) {
        const ExactSeries& den = std::get<ExactSeries>(r);
        if (den.terms.empty()) throw std::domain_error("division by ZERO");
        if (den.terms.size() == 1) {
          return ex_mul(std::get<ExactSeries>(l), ex_inv_monomial(den, ctx), ctx);
        }
      }
      SkewSeries sl = materialize(std::move(l), ctx, precision);
      SkewSeries sr = materialize(std::move(r), ctx, precision);
      return sl.mul(sr.inverse());
    }
    case Expr::Kind::Pow: {
      Value b = ev(*e.lhs, ctx, precision);
      const long k = e.exponent;
      if (std::holds_alternative<ExactSeries>(b) && is_pure(std::get<ExactSeries>(b))) {
        const ExactSeries& base = std::get<ExactSeries>(b);
        if (k >= 0) return ex_pow(base, k, ctx);
        if (base.terms.empty()) throw std::domain_error("inverse of ZERO");
        if (base.terms.size() == 1) return ex_pow(ex_inv_monomial(base, ctx), -k, ctx);
      }
      return materialize(std::move(b), ctx, precision).pow(k);
    }
    case Expr::Kind::Inv:
      return ev_series(*e.lhs, ctx, precision).inverse();
    case Expr::Kind::Comm: {
      SkewSeries x = ev_series(*e.lhs, ctx, precision);
      SkewSeries y = ev_series(*e.rhs, ctx, precision);
      return commutator(x, y).value;
    }
  }
  throw std::invalid_argument("unknown expression node");
}

}  // namespace

SkewSeries eval_expr(const Expr& e, const ContextPtr& ctx, long precision) {
  return materialize(ev(e, ctx, precision), ctx, precision);
}

SkewSeries eval_text(const std::string& text, const ContextPtr& ctx, long precision) {
  return eval_expr(*parse_expr(text), ctx, precision);
}

}  // namespace skewlab
