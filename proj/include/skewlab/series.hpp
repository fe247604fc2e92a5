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
#include <utility>
#include <vector>

#include "skewlab/context.hpp"

namespace skewlab {

/// Default absolute precision for series work.
inline constexpr long kDefaultPrecision = 32;

/// A truncated twisted Laurent series: an element of D = L((t, sigma)) known
/// modulo t^P. Multiplication twists coefficients past t:
///
///     (sum_i a_i t^i)(sum_j b_j t^j) = sum_r ( sum_{i+j=r} a_i sigma^i(b_j) ) t^r
///
/// Representation: either ZERO at precision P (nothing known below t^P), or a
/// lead exponent n with a dense coefficient run a_n, ..., a_{P-1} where
/// a_n != 0 and n < P. The valuation v maps a nonzero series to n; it is
/// undefined on ZERO, reported as std::nullopt.
///
/// Precision is absolute and propagates conservatively:
///   add: min(P_x, P_y)    mul: min(P_x + v(y), P_y + v(x))    inverse: P - 2n
class SkewSeries {
 public:
  /// The ZERO-at-precision series.
  static SkewSeries zero(ContextPtr ctx, long precision = kDefaultPrecision);
  static SkewSeries one(ContextPtr ctx, long precision = kDefaultPrecision);
  /// c * t^0.
  static SkewSeries constant(ContextPtr ctx, FieldValue c, long precision = kDefaultPrecision);
  /// c * t^e; requires e < precision.
  static SkewSeries monomial(ContextPtr ctx, FieldValue c, long e,
                             long precision = kDefaultPrecision);
  /// Builds a series from (exponent, coefficient) terms. Exponents must be
  /// distinct and < precision (std::invalid_argument otherwise); zero
  /// coefficients are dropped.
  static SkewSeries from_terms(ContextPtr ctx, std::vector<std::pair<long, FieldValue>> terms,
                               long precision = kDefaultPrecision);

  const ContextPtr& context() const { return ctx_; }
  long precision() const { return precision_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// The valuation v; std::nullopt on ZERO (v is undefined at 0).
  std::optional<long> valuation() const;
  /// Leading coefficient; throws std::domain_error on ZERO.
  const FieldValue& leading_coeff() const;
  /// Coefficient of t^e for any e < precision (zero outside the stored run);
  /// throws std::invalid_argument for e >= precision.
  FieldValue coeff(long e) const;

  SkewSeries negate() const;
  SkewSeries add(const SkewSeries& o) const;
  SkewSeries sub(const SkewSeries& o) const { return add(o.negate()); }
  /// Twisted product; per-cell sigma powers are evaluated in closed form.
  SkewSeries mul(const SkewSeries& o) const;
  /// Same contract and bit-identical results as mul; row i+1's twisted
  /// coefficients sigma^{i+1}(b_j) are built by applying sigma once to row
  /// i's, instead of evaluating each sigma power from scratch.
  SkewSeries mul_incremental(const SkewSeries& o) const;
  /// Left scalar multiple c * x (coefficientwise).
  SkewSeries scaled(const FieldValue& c) const;
  /// Two-sided inverse to the guaranteed precision P - 2n, found by
  /// term-by-term recursion. Throws std::domain_error on ZERO.
  SkewSeries inverse() const;
  /// k-fold product; pow(x, 0) = 1; negative k via inverse (std::domain_error
  /// on ZERO with k < 0).
  SkewSeries pow(long k) const;

  /// Drops coefficients at exponents >= new_precision; requires
  /// new_precision <= precision (std::invalid_argument otherwise).
  SkewSeries truncated(long new_precision) const;

  /// Equality of all coefficients below min(P_x, P_y).
  bool equals_to_precision(const SkewSeries& o) const;
  /// Structural equality: same lead, same precision, same coefficients.
  bool operator==(const SkewSeries& o) const;
  bool operator!=(const SkewSeries& o) const { return !(*this == o); }

  /// Textual form `c*t^k + ... + O(t^P)`; exponent 1 prints as `t`. The
  /// output re-parses to a structurally equal series.
  std::string to_string() const;

 private:
  SkewSeries(ContextPtr ctx, long lead, std::vector<FieldValue> coeffs, long precision)
      : ctx_(std::move(ctx)), lead_(lead), coeffs_(std::move(coeffs)), precision_(precision) {}

  void check_same_context(const SkewSeries& o) const;
  // Strips leading zero coefficients, fixing up lead_; empties to ZERO.
  void normalize();

  ContextPtr ctx_;
  long lead_ = 0;  // meaningful iff !coeffs_.empty()
  std::vector<FieldValue> coeffs_;
  long precision_ = kDefaultPrecision;
};

}  // namespace skewlab
