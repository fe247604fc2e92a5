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

#include "skewlab/field_value.hpp"

#include <stdexcept>

namespace skewlab {

namespace {
void check_kinds(const FieldValue& a, const FieldValue& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("field values from different coefficient fields");
}
}  // namespace

bool FieldValue::is_zero() const {
  switch (kind()) {
    case FieldKind::Rationals: return rational() == 0;
    case FieldKind::RationalFunctions: return rational_function().is_zero();
    case FieldKind::Galois: return galois().is_zero();
  }
  return false;
}

bool FieldValue::is_one() const {
  switch (kind()) {
    case FieldKind::Rationals: return rational() == 1;
    case FieldKind::RationalFunctions: return rational_function().is_one();
    case FieldKind::Galois: return galois().is_one();
  }
  return false;
}

std::string FieldValue::to_string() const {
  switch (kind()) {
    case FieldKind::Rationals: return rational().get_str();
    case FieldKind::RationalFunctions: return rational_function().to_string("u");
    case FieldKind::Galois: return galois().to_string("w");
  }
  return "";
}

FieldValue field_add(const FieldValue& a, const FieldValue& b) {
  check_kinds(a, b);
  switch (a.kind()) {
    case FieldKind::Rationals: return FieldValue(BigRational(a.rational() + b.rational()));
    case FieldKind::RationalFunctions:
      return FieldValue(a.rational_function() + b.rational_function());
    case FieldKind::Galois: return FieldValue(a.galois() + b.galois());
  }
  throw std::logic_error("unreachable");
}

FieldValue field_sub(const FieldValue& a, const FieldValue& b) {
  check_kinds(a, b);
  switch (a.kind()) {
    case FieldKind::Rationals: return FieldValue(BigRational(a.rational() - b.rational()));
    case FieldKind::RationalFunctions:
      return FieldValue(a.rational_function() - b.rational_function());
    case FieldKind::Galois: return FieldValue(a.galois() - b.galois());
  }
  throw std::logic_error("unreachable");
}

FieldValue field_mul(const FieldValue& a, const FieldValue& b) {
  check_kinds(a, b);
  switch (a.kind()) {
    case FieldKind::Rationals: return FieldValue(BigRational(a.rational() * b.rational()));
    case FieldKind::RationalFunctions:
      return FieldValue(a.rational_function() * b.rational_function());
    case FieldKind::Galois: return FieldValue(a.galois() * b.galois());
  }
  throw std::logic_error("unreachable");
}

FieldValue field_neg(const FieldValue& a) {
  switch (a.kind()) {
    case FieldKind::Rationals: return FieldValue(BigRational(-a.rational()));
    case FieldKind::RationalFunctions: return FieldValue(-a.rational_function());
    case FieldKind::Galois: return FieldValue(-a.galois());
  }
  throw std::logic_error("unreachable");
}

FieldValue field_inv(const FieldValue& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero field value");
  switch (a.kind()) {
    case FieldKind::Rationals: return FieldValue(BigRational(1 / a.rational()));
    case FieldKind::RationalFunctions: return FieldValue(a.rational_function().inv());
    case FieldKind::Galois: return FieldValue(a.galois().inv());
  }
  throw std::logic_error("unreachable");
}

}  // namespace skewlab
