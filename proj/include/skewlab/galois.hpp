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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewlab/rational.hpp"

namespace skewlab {

class GaloisElement;

/// Descriptor of F_{p^k}: characteristic p, extension degree k, and a fixed
/// monic irreducible modulus of degree k over F_p (coefficients low to high,
/// length k+1). Elements are polynomial representatives reduced modulo it.
class GaloisField : public std::enable_shared_from_this<GaloisField> {
 public:
  /// Validates p prime, k >= 1, modulus monic irreducible of degree k.
  /// Throws std::invalid_argument on any violation.
  static std::shared_ptr<const GaloisField> make(std::uint64_t p, std::uint32_t k,
                                                 std::vector<std::uint64_t> modulus);
  /// Uses the lexicographically smallest monic irreducible of degree k.
  static std::shared_ptr<const GaloisField> make(std::uint64_t p, std::uint32_t k);

  std::uint64_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  bool operator==(const GaloisField& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  GaloisElement zero() const;
  GaloisElement one() const;
  /// The residue class of the generator w (degree-one representative).
  GaloisElement generator() const;
  /// Embedding of an integer via reduction mod p.
  GaloisElement from_integer(const BigInt& n) const;
  /// Embedding of a rational a/b with b invertible mod p; throws
  /// std::domain_error when p divides b.
  GaloisElement from_rational(const BigRational& q) const;
  GaloisElement from_coeffs(std::vector<std::uint64_t> rep) const;

  std::string to_string() const;

 private:
  GaloisField(std::uint64_t p, std::uint32_t k, std::vector<std::uint64_t> modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {}

  std::uint64_t p_;
  std::uint32_t k_;
  std::vector<std::uint64_t> modulus_;
};

/// An element of F_{p^k}: representative of degree < k over F_p, trailing
/// zero coefficients trimmed. The zero element stores no coefficients.
class GaloisElement {
 public:
  GaloisElement() = default;

  const std::shared_ptr<const GaloisField>& field() const { return field_; }
  const std::vector<std::uint64_t>& rep() const { return rep_; }

  bool is_zero() const { return rep_.empty(); }
  bool is_one() const { return rep_.size() == 1 && rep_[0] == 1; }

  GaloisElement operator-() const;
  GaloisElement operator+(const GaloisElement& o) const;
  GaloisElement operator-(const GaloisElement& o) const;
  GaloisElement operator*(const GaloisElement& o) const;
  /// Inverse via the extended Euclidean algorithm in F_p[w] mod the modulus;
  /// throws std::domain_error at zero.
  GaloisElement inv() const;

  /// x^e for a nonnegative big integer exponent.
  GaloisElement pow(const BigInt& e) const;
  /// Frobenius x -> x^p.
  GaloisElement frobenius() const;
  /// x^(p^m) for 0 <= m < k.
  GaloisElement frobenius_power(std::uint32_t m) const;

  bool operator==(const GaloisElement& o) const;
  bool operator!=(const GaloisElement& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "w") const;

 private:
  friend class GaloisField;
  GaloisElement(std::shared_ptr<const GaloisField> field, std::vector<std::uint64_t> rep);

  void check_same_field(const GaloisElement& o) const;

  std::shared_ptr<const GaloisField> field_;
  std::vector<std::uint64_t> rep_;
};

}  // namespace skewlab
