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

#include "skewlab/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace skewlab {

namespace {

// Rescales an already-coprime pair to a monic denominator.
void monicize(Polynomial& num, Polynomial& den) {
  if (den.leading() != 1) {
    const BigRational inv = BigRational(1) / den.leading();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
}

// Divides out gcd(num, den) and rescales to a monic denominator.
void reduce(Polynomial& num, Polynomial& den) {
  if (num.is_zero()) {
    den = Polynomial::one();
    return;
  }
  if (!den.is_constant()) {
    Polynomial g = poly_gcd(num, den);
    if (!g.is_one()) {
      num = num.divrem(g).first;
      den = den.divrem(g).first;
    }
  }
  monicize(num, den);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce(num_, den_);
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Polynomial::monomial(BigRational(1), 1));
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::domain_error("rational function is not a constant");
  return num_.is_zero() ? BigRational(0) : num_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RationalFunction r;
  if (den_.is_one() && o.den_.is_one()) {
    r.num_ = num_ + o.num_;
    r.den_ = Polynomial::one();
    return r;
  }
  // With both fractions reduced, the only common factor of the raw sum's
  // numerator and b*d sits inside g = gcd(b, d).
  Polynomial g = poly_gcd(den_, o.den_);
  if (g.is_one()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    if (r.num_.is_zero()) {
      r.den_ = Polynomial::one();
      return r;
    }
    r.den_ = den_ * o.den_;
    return r;
  }
  Polynomial b1 = den_.divrem(g).first;
  Polynomial d1 = o.den_.divrem(g).first;
  Polynomial t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return RationalFunction();
  Polynomial h = poly_gcd(t, g);
  if (!h.is_one()) {
    t = t.divrem(h).first;
    g = g.divrem(h).first;
  }
  r.num_ = std::move(t);
  r.den_ = b1 * d1 * g;
  monicize(r.num_, r.den_);
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  // Cross-cancel (Henrici): gcd(a, d) and gcd(c, b) carry all common factors
  // between reduced fractions a/b and c/d.
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  Polynomial g1 = poly_gcd(a, d);
  if (!g1.is_one()) {
    a = a.divrem(g1).first;
    d = d.divrem(g1).first;
  }
  Polynomial g2 = poly_gcd(c, b);
  if (!g2.is_one()) {
    c = c.divrem(g2).first;
    b = b.divrem(g2).first;
  }
  RationalFunction r;
  r.num_ = a * c;
  r.den_ = b * d;
  monicize(r.num_, r.den_);
  return r;
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  const BigRational scale = BigRational(1) / r.den_.leading();
  r.num_ = r.num_.scaled(scale);
  r.den_ = r.den_.scaled(scale);
  return r;
}

RationalFunction RationalFunction::compose_linear(const BigRational& a,
                                                  const BigRational& b) const {
  return RationalFunction(num_.compose_linear(a, b), den_.compose_linear(a, b));
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  std::string num = num_.to_string(var);
  std::string den = den_.to_string(var);
  // Parenthesize multi-term operands so the printed form re-parses with
  // ordinary precedence.
  int num_terms = 0;
  for (const auto& c : num_.coeffs())
    if (c != 0) ++num_terms;
  const bool num_parens = num_terms > 1;
  bool den_single_monomial = true;
  for (long d = 0; d < den_.degree(); ++d)
    if (den_.coeff(static_cast<std::size_t>(d)) != 0) den_single_monomial = false;
  std::string out;
  out += num_parens ? "(" + num + ")" : num;
  out += "/";
  out += den_single_monomial ? den : "(" + den + ")";
  return out;
}

}  // namespace skewlab
