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

#include "skewlab/automorphism.hpp"

#include <stdexcept>

namespace skewlab {

Automorphism Automorphism::shift(BigRational c) {
  if (c == 0) throw std::invalid_argument("shift automorphism requires c != 0");
  return Automorphism(Kind::Shift, std::move(c));
}

Automorphism Automorphism::scale(BigRational c) {
  if (c == 0) throw std::invalid_argument("scale automorphism requires c != 0");
  return Automorphism(Kind::Scale, std::move(c));
}

FieldValue Automorphism::apply(const FieldValue& a) const { return apply_power(1, a); }

FieldValue Automorphism::apply_power(long i, const FieldValue& a) const {
  switch (kind_) {
    case Kind::Identity:
      return a;
    case Kind::Shift: {
      if (a.kind() != FieldKind::RationalFunctions)
        throw std::invalid_argument("shift automorphism acts on Q(u) only");
      if (i == 0) return a;
      return FieldValue(a.rational_function().compose_linear(BigRational(1), BigRational(i) * c_));
    }
    case Kind::Scale: {
      if (a.kind() != FieldKind::RationalFunctions)
        throw std::invalid_argument("scale automorphism acts on Q(u) only");
      if (i == 0) return a;
      return FieldValue(a.rational_function().compose_linear(pow_rational(c_, i), BigRational(0)));
    }
    case Kind::Frobenius: {
      if (a.kind() != FieldKind::Galois)
        throw std::invalid_argument("frobenius acts on Galois fields only");
      const GaloisElement& g = a.galois();
      if (g.is_zero() || !g.field()) return a;
      const long k = static_cast<long>(g.field()->k());
      const long m = ((i % k) + k) % k;
      return FieldValue(g.frobenius_power(static_cast<std::uint32_t>(m)));
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<long> Automorphism::order(const GaloisField* galois) const {
  switch (kind_) {
    case Kind::Identity:
      return 1;
    case Kind::Shift:
      return std::nullopt;
    case Kind::Scale:
      // Over Q the only roots of unity are 1 and -1.
      if (c_ == 1) return 1;
      if (c_ == -1) return 2;
      return std::nullopt;
    case Kind::Frobenius:
      if (galois == nullptr)
        throw std::invalid_argument("frobenius order requires its Galois field");
      return static_cast<long>(galois->k());
  }
  throw std::logic_error("unreachable");
}

std::string Automorphism::to_string() const {
  switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Shift: return "u -> u+" + c_.get_str();
    case Kind::Scale: return "u -> " + c_.get_str() + "*u";
    case Kind::Frobenius: return "x -> x^p";
  }
  return "";
}

}  // namespace skewlab
