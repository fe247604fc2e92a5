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
#include <random>

#include "skewlab/series.hpp"

namespace skewlab {

/// Shape of a randomly drawn series. The lead exponent is uniform in
/// [lead_min, lead_max] and its coefficient is always nonzero, so the drawn
/// lead is the actual valuation and the series is never ZERO. Each of the
/// `extra_terms` following slots is filled with probability
/// nonzero_percent/100 from a small atom pool.
struct SeriesProfile {
  long lead_min = -3;
  long lead_max = 3;
  unsigned nonzero_percent = 70;
  long extra_terms = 5;
  long precision = kDefaultPrecision;
};

/// Mixes (master, stream, index) into an independent per-trial seed, so
/// trial i's draws never depend on how many draws trial i-1 consumed.
/// splitmix64-style finalizer.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index);

/// Uniform-ish integer in [lo, hi] by modulo reduction. The slight modulo
/// bias is irrelevant for property-test sampling and keeps draws identical
/// across platforms (std::uniform_int_distribution is not portable).
long draw_in_range(std::mt19937_64& rng, long lo, long hi);

/// True with probability percent/100.
bool draw_percent(std::mt19937_64& rng, unsigned percent);

/// A nonzero field element from the context's atom pool: small integers and
/// u-atoms (u, u±1, 1/u, ...) over Q(u); small integers and halves over Q;
/// any nonzero element of F_{p^k}.
FieldValue random_nonzero_coeff(const ContextPtr& ctx, std::mt19937_64& rng);

/// Deterministic nonzero series for the given seed and profile.
SkewSeries random_series(const ContextPtr& ctx, std::uint64_t seed,
                         const SeriesProfile& profile = {});

}  // namespace skewlab
