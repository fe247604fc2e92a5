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

#include <span>
#include <vector>

#include "skewlab/series.hpp"

namespace skewlab {

/// A computed multiplicative commutator x y x^{-1} y^{-1} together with its
/// arguments and the valuation of the result.
struct CommutatorRecord {
  SkewSeries x;
  SkewSeries y;
  SkewSeries value;
  long valuation_of_value;
};

/// Evaluates x y x^{-1} y^{-1} in the fixed order ((x*y) * x^{-1}) * y^{-1},
/// so precision propagation is identical everywhere. Throws std::domain_error
/// when either argument is ZERO.
CommutatorRecord commutator(const SkewSeries& x, const SkewSeries& y);

/// Left-to-right product of the records' values: a generic element of the
/// commutator subgroup D'. Throws std::invalid_argument on an empty list.
SkewSeries commutator_product(std::span<const CommutatorRecord> records);

/// True iff s lies in the kernel of the valuation map, i.e. v(s) = 0.
/// Throws std::domain_error on ZERO (v is undefined there).
bool kernel_check(const SkewSeries& s);

}  // namespace skewlab
