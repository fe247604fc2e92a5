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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewlab/rational.hpp"

namespace skewlab {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first. Invariant: the highest stored coefficient is nonzero, or the
/// vector is empty (the zero polynomial).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(BigRational constant);
  explicit Polynomial(std::vector<BigRational> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(BigRational(1)); }
  /// The monomial c * u^d.
  static Polynomial monomial(BigRational c, std::size_t d);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigRational& leading() const;
  /// Coefficient of u^d (zero beyond the stored range).
  const BigRational& coeff(std::size_t d) const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const BigRational& c) const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Euclidean division by a nonzero divisor: returns (quotient, remainder)
  /// with deg(remainder) < deg(divisor). Throws std::domain_error on zero
  /// divisor.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

  /// Leading coefficient scaled to 1; zero stays zero.
  Polynomial monic() const;

  /// p(a*u + b), exact composition with a linear polynomial.
  Polynomial compose_linear(const BigRational& a, const BigRational& b) const;

  BigRational eval(const BigRational& x) const;

  std::string to_string(const std::string& var) const;

 private:
  void normalize();

  std::vector<BigRational> coeffs_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0. Constant nonzero
/// arguments short-circuit to 1.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace skewlab
