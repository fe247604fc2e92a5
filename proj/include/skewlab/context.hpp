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

#include <memory>
#include <optional>
#include <string>

#include "skewlab/automorphism.hpp"
#include "skewlab/field_value.hpp"

namespace skewlab {

/// The pair (L, sigma) defining the twisted Laurent series division ring
/// D = L((t, sigma)). Immutable; shared read-only by all series built on it.
class SkewContext : public std::enable_shared_from_this<SkewContext> {
 public:
  /// L = Q. Only the identity automorphism acts here.
  static std::shared_ptr<const SkewContext> rationals(Automorphism sigma = Automorphism::identity());
  /// L = Q(u), sigma one of Identity, Shift(c), Scale(c).
  static std::shared_ptr<const SkewContext> rational_functions(Automorphism sigma);
  /// L = F_{p^k}, sigma Identity or Frobenius.
  static std::shared_ptr<const SkewContext> galois(std::shared_ptr<const GaloisField> field,
                                                   Automorphism sigma);

  FieldKind field_kind() const { return kind_; }
  const Automorphism& sigma() const { return sigma_; }
  const std::shared_ptr<const GaloisField>& galois_field() const { return galois_; }

  FieldValue zero() const;
  FieldValue one() const;
  /// Embeds a rational constant into L. Throws std::domain_error when the
  /// denominator vanishes mod p in a Galois context.
  FieldValue from_rational(const BigRational& q) const;
  FieldValue from_integer(long n) const { return from_rational(BigRational(n)); }
  /// The distinguished field generator: u for Q(u), w for F_{p^k} with
  /// k > 1. Throws std::domain_error when L has none.
  FieldValue generator() const;

  /// Membership test for the fixed field F of sigma.
  bool is_fixed(const FieldValue& a) const { return sigma_.fixes(a); }
  /// Order of sigma; std::nullopt means infinite.
  std::optional<long> sigma_order() const;

  /// Contexts are interchangeable iff the field descriptor and sigma agree.
  bool operator==(const SkewContext& o) const;
  bool operator!=(const SkewContext& o) const { return !(*this == o); }

  std::string description() const;

 private:
  SkewContext(FieldKind kind, std::shared_ptr<const GaloisField> galois, Automorphism sigma)
      : kind_(kind), galois_(std::move(galois)), sigma_(std::move(sigma)) {}

  FieldKind kind_;
  std::shared_ptr<const GaloisField> galois_;
  Automorphism sigma_;
};

using ContextPtr = std::shared_ptr<const SkewContext>;

}  // namespace skewlab
