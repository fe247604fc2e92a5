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

#include <optional>
#include <string>

#include "skewlab/field_value.hpp"

namespace skewlab {

/// A field automorphism sigma of the coefficient field L, one of:
///   Identity                  (any L)
///   Shift(c), c != 0          u -> u + c       on L = Q(u)
///   Scale(c), c != 0          u -> c*u         on L = Q(u)
///   Frobenius                 x -> x^p         on L = F_{p^k}
///
/// Powers sigma^i are evaluated in closed form for any integer i, never by
/// iterated composition: Shift(c)^i is u -> u + i*c, Scale(c)^i is
/// u -> c^i * u, Frobenius^i is x -> x^(p^(i mod k)).
class Automorphism {
 public:
  enum class Kind { Identity, Shift, Scale, Frobenius };

  static Automorphism identity() { return Automorphism(Kind::Identity, BigRational(0)); }
  /// Throws std::invalid_argument for c = 0.
  static Automorphism shift(BigRational c);
  /// Throws std::invalid_argument for c = 0.
  static Automorphism scale(BigRational c);
  static Automorphism frobenius() { return Automorphism(Kind::Frobenius, BigRational(0)); }

  Kind kind() const { return kind_; }
  const BigRational& parameter() const { return c_; }

  /// sigma(a). Throws std::invalid_argument when the variant does not act on
  /// a's field (Shift/Scale need Q(u), Frobenius needs a Galois field).
  FieldValue apply(const FieldValue& a) const;

  /// sigma^i(a) for any integer i, via the closed forms above.
  FieldValue apply_power(long i, const FieldValue& a) const;

  /// Exact group-theoretic order; std::nullopt means infinite. The Frobenius
  /// order depends on the field it acts on (k on F_{p^k}), so that variant
  /// requires `galois`.
  std::optional<long> order(const GaloisField* galois = nullptr) const;

  /// True iff sigma(a) = a exactly; decides membership in the fixed field F.
  bool fixes(const FieldValue& a) const { return apply(a) == a; }

  bool operator==(const Automorphism& o) const { return kind_ == o.kind_ && c_ == o.c_; }
  bool operator!=(const Automorphism& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Automorphism(Kind kind, BigRational c) : kind_(kind), c_(std::move(c)) {}

  Kind kind_;
  BigRational c_;
};

}  // namespace skewlab
