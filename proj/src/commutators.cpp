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

#include "skewlab/commutators.hpp"

#include <stdexcept>

namespace skewlab {

CommutatorRecord commutator(const SkewSeries& x, const SkewSeries& y) {
  if (!x.valuation().has_value() || !y.valuation().has_value()) {
    throw std::domain_error("commutator: arguments must be nonzero");
  }
  // Fixed association: ((x*y) * x^{-1}) * y^{-1}. The two inverses are the
  // precision bottleneck; computing the left product first keeps the final
  // precision at min over both bracketings.
  SkewSeries xy = x.mul(y);
  SkewSeries value = xy.mul(x.inverse()).mul(y.inverse());
  long v = value.valuation().value_or(0);
  return CommutatorRecord{x, y, std::move(value), v};
}

SkewSeries commutator_product(std::span<const CommutatorRecord> records) {
  if (records.empty()) {
    throw std::invalid_argument("commutator_product: empty record list");
  }
  SkewSeries acc = records.front().value;
  for (std::size_t i = 1; i < records.size(); ++i) {
    acc = acc.mul(records[i].value);
  }
  return acc;
}

bool kernel_check(const SkewSeries& s) {
  auto v = s.valuation();
  if (!v.has_value()) {
    throw std::domain_error("kernel_check: valuation undefined for ZERO");
  }
  return *v == 0;
}

}  // namespace skewlab
