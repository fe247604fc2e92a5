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

#include "skewlab/random_series.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "skewlab/context.hpp"
#include "skewlab/rational_function.hpp"

namespace skewlab {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Nonzero integers 1..5, -1..-5 indexed 0..9.
BigRational small_nonzero_int(long index) {
  long magnitude = index % 5 + 1;
  return BigRational(index < 5 ? magnitude : -magnitude);
}

Polynomial shifted_u(long offset) {
  return Polynomial(std::vector<BigRational>{BigRational(offset), BigRational(1)});
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index) {
  return splitmix64(splitmix64(master ^ 0x6a09e667f3bcc909ull) + splitmix64(stream) +
                    index);
}

long draw_in_range(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("draw_in_range: empty range");
  std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % width);
}

bool draw_percent(std::mt19937_64& rng, unsigned percent) {
  return rng() % 100 < percent;
}

FieldValue random_nonzero_coeff(const ContextPtr& ctx, std::mt19937_64& rng) {
  switch (ctx->field_kind()) {
    case FieldKind::Rationals: {
      long index = draw_in_range(rng, 0, 13);
      if (index < 10) return FieldValue(small_nonzero_int(index));
      switch (index) {
        case 10: return FieldValue(BigRational(1, 2));
        case 11: return FieldValue(BigRational(-1, 2));
        case 12: return FieldValue(BigRational(3, 2));
        default: return FieldValue(BigRational(1, 3));
      }
    }
    case FieldKind::RationalFunctions: {
      long index = draw_in_range(rng, 0, 15);
      if (index < 10) return FieldValue(RationalFunction(small_nonzero_int(index)));
      switch (index) {
        case 10: return FieldValue(RationalFunction(shifted_u(0)));
        case 11: return FieldValue(RationalFunction(shifted_u(1)));
        case 12: return FieldValue(RationalFunction(shifted_u(-1)));
        case 13: return FieldValue(RationalFunction(Polynomial::one(), shifted_u(0)));
        case 14: return FieldValue(RationalFunction(Polynomial::one(), shifted_u(1)));
        default: return FieldValue(RationalFunction(shifted_u(1), shifted_u(0)));
      }
    }
    case FieldKind::Galois: {
      const auto& field = ctx->galois_field();
      std::vector<std::uint64_t> rep(field->k());
      for (;;) {
        bool any = false;
        for (auto& c : rep) {
          c = rng() % field->p();
          any = any || c != 0;
        }
        if (any) return FieldValue(field->from_coeffs(rep));
      }
    }
  }
  throw std::invalid_argument("random_nonzero_coeff: unknown field kind");
}

SkewSeries random_series(const ContextPtr& ctx, std::uint64_t seed,
                         const SeriesProfile& profile) {
  std::mt19937_64 rng(seed);
  long lead = draw_in_range(rng, profile.lead_min, profile.lead_max);
  std::vector<std::pair<long, FieldValue>> terms;
  terms.emplace_back(lead, random_nonzero_coeff(ctx, rng));
  for (long i = 1; i <= profile.extra_terms; ++i) {
    if (lead + i >= profile.precision) break;
    if (draw_percent(rng, profile.nonzero_percent)) {
      terms.emplace_back(lead + i, random_nonzero_coeff(ctx, rng));
    }
  }
  return SkewSeries::from_terms(ctx, std::move(terms), profile.precision);
}

}  // namespace skewlab
