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
#include <vector>

#include "skewlab/rational.hpp"

namespace skewlab {

/// Dense row-major matrix over Q.
using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Solves A x = b exactly by fraction-exact Gaussian elimination. Returns one
/// solution when the system is consistent (free variables pinned to zero),
/// std::nullopt when it is inconsistent. Throws std::invalid_argument on
/// ragged rows or a row-count mismatch with b.
std::optional<std::vector<BigRational>> solve_linear_system(
    RationalMatrix a, std::vector<BigRational> b);

}  // namespace skewlab
