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
#include <variant>

#include "skewlab/galois.hpp"
#include "skewlab/rational.hpp"
#include "skewlab/rational_function.hpp"

namespace skewlab {

/// Which coefficient field L is active.
enum class FieldKind { Rationals, RationalFunctions, Galois };

/// An exact element of the active coefficient field: a rational, a rational
/// function in u, or a Galois field element. The variant tag is the field
/// tag; arithmetic between mismatched tags (or mismatched Galois fields)
/// throws std::invalid_argument.
class FieldValue {
 public:
  FieldValue() : v_(BigRational(0)) {}
  explicit FieldValue(BigRational q) : v_(std::move(q)) {}
  explicit FieldValue(RationalFunction f) : v_(std::move(f)) {}
  explicit FieldValue(GaloisElement g) : v_(std::move(g)) {}

  FieldKind kind() const { return static_cast<FieldKind>(v_.index()); }

  bool is_zero() const;
  bool is_one() const;

  const BigRational& rational() const { return std::get<BigRational>(v_); }
  const RationalFunction& rational_function() const { return std::get<RationalFunction>(v_); }
  const GaloisElement& galois() const { return std::get<GaloisElement>(v_); }

  bool operator==(const FieldValue& o) const { return v_ == o.v_; }
  bool operator!=(const FieldValue& o) const { return v_ != o.v_; }

  std::string to_string() const;

 private:
  std::variant<BigRational, RationalFunction, GaloisElement> v_;
};

FieldValue field_add(const FieldValue& a, const FieldValue& b);
FieldValue field_sub(const FieldValue& a, const FieldValue& b);
FieldValue field_mul(const FieldValue& a, const FieldValue& b);
FieldValue field_neg(const FieldValue& a);
/// Throws std::domain_error at zero.
FieldValue field_inv(const FieldValue& a);

}  // namespace skewlab
