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

#include "skewlab/parser.hpp"
#include "skewlab/series.hpp"

namespace skewlab {

/// Evaluates an expression to a series at working precision `precision`.
///
/// Finite Laurent-polynomial subexpressions (sums of monomials, scalar
/// division, integer powers, monomial inversion via `^-k`) are computed in
/// exact arithmetic with no truncation; the result becomes a series only at
/// the end, at an O(t^P) marker's precision if one was added, otherwise at
/// max(precision, highest exponent + 1). A printed series therefore
/// re-evaluates to a structurally equal series. `comm` delegates to
/// commutator() and `inv` to SkewSeries::inverse(), which are
/// precision-tracked series operations.
///
/// Throws std::invalid_argument for symbols the context lacks (u needs
/// Q(u), w needs a Galois field) and std::domain_error for mathematically
/// undefined results (division or inversion of ZERO).
SkewSeries eval_expr(const Expr& e, const ContextPtr& ctx, long precision = kDefaultPrecision);

/// parse_expr + eval_expr in one step.
SkewSeries eval_text(const std::string& text, const ContextPtr& ctx,
                     long precision = kDefaultPrecision);

}  // namespace skewlab
