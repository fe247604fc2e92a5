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

#include "skewlab/polynomial.hpp"

namespace skewlab {

/// An element of Q(u) in canonical form: denominator monic and nonzero,
/// gcd(num, den) = 1, zero represented as 0/1. Canonical form makes
/// operator== a structural comparison.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::one()) {}
  explicit RationalFunction(BigRational constant)
      : num_(Polynomial(std::move(constant))), den_(Polynomial::one()) {}
  explicit RationalFunction(Polynomial num)
      : num_(std::move(num)), den_(Polynomial::one()) {}
  /// Reduces num/den to canonical form. Throws std::domain_error on zero
  /// denominator.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(BigRational(1)); }
  /// The generator u itself.
  static RationalFunction variable();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Value as a rational; precondition: is_constant().
  BigRational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  /// Division; throws std::domain_error when o is zero.
  RationalFunction operator/(const RationalFunction& o) const { return *this * o.inv(); }
  /// Multiplicative inverse; throws std::domain_error at zero.
  RationalFunction inv() const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// Substitutes u -> a*u + b (the closed form for shift/scale powers).
  RationalFunction compose_linear(const BigRational& a, const BigRational& b) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace skewlab
