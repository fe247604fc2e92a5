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

#include <cstdint>
#include <string>
#include <vector>

#include "skewlab/series.hpp"

namespace skewlab {

/// Does `target` lie in the F-span of `generators`? All series must share
/// the context and `generators` must be nonempty (checked by the operations
/// below, which throw std::invalid_argument otherwise).
struct SpanProblem {
  ContextPtr context;
  SkewSeries target;
  std::vector<SkewSeries> generators;
  long precision = kDefaultPrecision;
};

enum class SpanVerdictKind { InSpan, NotInSpanObstruction, Undecided };

/// Outcome of a span query. IN_SPAN carries one witness combination whose
/// residual against the target is ZERO at working precision. The obstruction
/// verdict is a genuine non-membership proof: every generator has valuation
/// >= min_generator_valuation >= 0, so by the ultrametric law every F-linear
/// combination has valuation >= 0 or is zero, while the target has negative
/// valuation. UNDECIDED makes no claim either way.
struct SpanVerdict {
  SpanVerdictKind kind;
  std::vector<FieldValue> coefficients;  // InSpan: one scalar per generator
  long min_generator_valuation = 0;      // NotInSpanObstruction
  long target_valuation = 0;             // NotInSpanObstruction
  std::string reason;                    // Undecided

  static SpanVerdict in_span(std::vector<FieldValue> coeffs);
  static SpanVerdict obstruction(long min_generator_valuation,
                                 long target_valuation);
  static SpanVerdict undecided(std::string reason);

  std::string to_string() const;
};

/// The valuation certificate: if valuation(target) < 0 and every nonzero
/// generator has valuation >= 0, the target cannot be an F-combination of
/// the generators. Returns UNDECIDED("no valuation obstruction") when the
/// hypotheses fail. Throws std::domain_error on a ZERO target.
SpanVerdict valuation_obstruction(const SpanProblem& problem);

/// Constructive solver for the Shift case, where the fixed field is Q and a
/// span membership is a finite exact linear problem: per exponent row the
/// rational-function equation sum_i c_i * g_i,r(u) = target_r(u) is cleared
/// by the monic lcm of the denominators and matched coefficient-by-
/// coefficient in u; the assembled system is solved by exact Gaussian
/// elimination and the winning combination is re-verified against the
/// target. Returns IN_SPAN or UNDECIDED — never a non-membership claim,
/// since truncation only refutes up to precision. Throws
/// std::invalid_argument outside the Shift context.
SpanVerdict coefficient_matching_solve(const SpanProblem& problem);

/// The infinite-codimension witness run: draws `generator_budget` random
/// commutators (every fourth one a product of up to 4 commutators) and asks
/// valuation_obstruction for each target t^-1, ..., t^-k_max. All verdicts
/// come back NOT_IN_SPAN_OBSTRUCTION, one per k — an independent family of
/// cosets witnessing infinite codimension at truncated scale. Throws
/// std::invalid_argument when k_max < 1 or generator_budget = 0.
std::vector<SpanVerdict> codimension_witness_suite(const ContextPtr& ctx,
                                                   long k_max,
                                                   long generator_budget,
                                                   std::uint64_t seed,
                                                   long precision = kDefaultPrecision);

}  // namespace skewlab
