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

#include "skewlab/context.hpp"

#include <stdexcept>

namespace skewlab {

std::shared_ptr<const SkewContext> SkewContext::rationals(Automorphism sigma) {
  if (sigma.kind() != Automorphism::Kind::Identity)
    throw std::invalid_argument("L = Q admits only the identity automorphism here");
  return std::shared_ptr<const SkewContext>(
      new SkewContext(FieldKind::Rationals, nullptr, std::move(sigma)));
}

std::shared_ptr<const SkewContext> SkewContext::rational_functions(Automorphism sigma) {
  switch (sigma.kind()) {
    case Automorphism::Kind::Identity:
    case Automorphism::Kind::Shift:
    case Automorphism::Kind::Scale:
      break;
    default:
      throw std::invalid_argument("sigma incompatible with L = Q(u)");
  }
  return std::shared_ptr<const SkewContext>(
      new SkewContext(FieldKind::RationalFunctions, nullptr, std::move(sigma)));
}

std::shared_ptr<const SkewContext> SkewContext::galois(std::shared_ptr<const GaloisField> field,
                                                       Automorphism sigma) {
  if (!field) throw std::invalid_argument("galois context requires a field");
  switch (sigma.kind()) {
    case Automorphism::Kind::Identity:
    case Automorphism::Kind::Frobenius:
      break;
    default:
      throw std::invalid_argument("sigma incompatible with a Galois field");
  }
  return std::shared_ptr<const SkewContext>(
      new SkewContext(FieldKind::Galois, std::move(field), std::move(sigma)));
}

FieldValue SkewContext::zero() const {
  switch (kind_) {
    case FieldKind::Rationals: return FieldValue(BigRational(0));
    case FieldKind::RationalFunctions: return FieldValue(RationalFunction::zero());
    case FieldKind::Galois: return FieldValue(galois_->zero());
  }
  throw std::logic_error("unreachable");
}

FieldValue SkewContext::one() const { return from_rational(BigRational(1)); }

FieldValue SkewContext::from_rational(const BigRational& q) const {
  switch (kind_) {
    case FieldKind::Rationals: return FieldValue(q);
    case FieldKind::RationalFunctions: return FieldValue(RationalFunction(q));
    case FieldKind::Galois: return FieldValue(galois_->from_rational(q));
  }
  throw std::logic_error("unreachable");
}

FieldValue SkewContext::generator() const {
  switch (kind_) {
    case FieldKind::Rationals:
      throw std::domain_error("L = Q has no field generator beyond constants");
    case FieldKind::RationalFunctions:
      return FieldValue(RationalFunction::variable());
    case FieldKind::Galois:
      return FieldValue(galois_->generator());
  }
  throw std::logic_error("unreachable");
}

std::optional<long> SkewContext::sigma_order() const { return sigma_.order(galois_.get()); }

bool SkewContext::operator==(const SkewContext& o) const {
  if (kind_ != o.kind_ || sigma_ != o.sigma_) return false;
  if (kind_ == FieldKind::Galois) return *galois_ == *o.galois_;
  return true;
}

std::string SkewContext::description() const {
  std::string field;
  switch (kind_) {
    case FieldKind::Rationals: field = "L = Q"; break;
    case FieldKind::RationalFunctions: field = "L = Q(u)"; break;
    case FieldKind::Galois: field = "L = " + galois_->to_string(); break;
  }
  return field + ", sigma: " + sigma_.to_string();
}

}  // namespace skewlab
