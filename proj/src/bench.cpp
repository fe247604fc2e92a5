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

#include "skewlab/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "skewlab/random_series.hpp"
#include "skewlab/series.hpp"

namespace skewlab {

namespace {

using Clock = std::chrono::steady_clock;

// Coefficients for dense operands. Over Q(u) the pool is polynomial atoms
// (no denominators): sigma powers stay nontrivial, while coefficient sizes
// in an n-term convolution grow polynomially instead of through
// denominator blowup, which would turn the benchmark into a gcd benchmark.
FieldValue bench_coeff(const ContextPtr& ctx, std::mt19937_64& rng) {
  if (ctx->field_kind() != FieldKind::RationalFunctions) {
    return random_nonzero_coeff(ctx, rng);
  }
  switch (draw_in_range(rng, 0, 7)) {
    case 0: return FieldValue(RationalFunction(Polynomial({BigRational(0), BigRational(1)})));
    case 1: return FieldValue(RationalFunction(Polynomial({BigRational(1), BigRational(1)})));
    case 2: return FieldValue(RationalFunction(Polynomial({BigRational(-1), BigRational(1)})));
    case 3: return FieldValue(RationalFunction(Polynomial({BigRational(2), BigRational(1)})));
    case 4: return FieldValue(RationalFunction(Polynomial({BigRational(1), BigRational(2)})));
    case 5: return ctx->from_rational(BigRational(2));
    case 6: return ctx->from_rational(BigRational(3));
    default: return ctx->from_rational(BigRational(-1));
  }
}

// Dense series with lead 0: all `size` coefficient slots nonzero, so the
// convolution has the full size x size cell count.
SkewSeries dense_series(const ContextPtr& ctx, long size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<long, FieldValue>> terms;
  terms.reserve(static_cast<std::size_t>(size));
  for (long e = 0; e < size; ++e) terms.emplace_back(e, bench_coeff(ctx, rng));
  return SkewSeries::from_terms(ctx, std::move(terms), size);
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(xs.size()));
  return s;
}

}  // namespace

bool BenchReport::all_outputs_equal() const {
  for (const BenchRow& row : rows) {
    if (!row.outputs_equal) return false;
  }
  return true;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("bench needs at least one size");
  for (long size : config.sizes) {
    if (size < 1) throw std::invalid_argument("bench sizes must be at least 1");
  }
  if (config.trials < 1) throw std::invalid_argument("bench needs at least one trial");
  const ContextPtr ctx = make_context(config.context);

  BenchReport report;
  report.context_description = ctx->description();
  report.seed = config.seed;
  report.trials = config.trials;

  for (std::size_t s = 0; s < config.sizes.size(); ++s) {
    const long size = config.sizes[s];
    BenchRow row;
    row.size = size;
    std::vector<double> mul_ms, inc_ms;
    for (long trial = 0; trial < config.trials; ++trial) {
      const SkewSeries x = dense_series(
          ctx, size, derive_seed(config.seed, 100 + 2 * s, static_cast<std::uint64_t>(trial)));
      const SkewSeries y = dense_series(
          ctx, size, derive_seed(config.seed, 101 + 2 * s, static_cast<std::uint64_t>(trial)));

      const auto t0 = Clock::now();
      const SkewSeries via_mul = x.mul(y);
      const auto t1 = Clock::now();
      const SkewSeries via_incremental = x.mul_incremental(y);
      const auto t2 = Clock::now();

      mul_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      inc_ms.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
      if (via_mul != via_incremental) row.outputs_equal = false;
    }
    const Stats m = stats_of(mul_ms);
    const Stats i = stats_of(inc_ms);
    row.mul_mean_ms = m.mean;
    row.mul_stddev_ms = m.stddev;
    row.incremental_mean_ms = i.mean;
    row.incremental_stddev_ms = i.stddev;
    row.ratio = m.mean > 0.0 ? i.mean / m.mean : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

std::string bench_to_json(const BenchReport& report) {
  nlohmann::json j;
  j["schema_version"] = report.schema_version;
  j["context"] = report.context_description;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["rows"] = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    j["rows"].push_back({{"size", row.size},
                         {"mul_mean_ms", row.mul_mean_ms},
                         {"mul_stddev_ms", row.mul_stddev_ms},
                         {"incremental_mean_ms", row.incremental_mean_ms},
                         {"incremental_stddev_ms", row.incremental_stddev_ms},
                         {"ratio", row.ratio},
                         {"outputs_equal", row.outputs_equal}});
  }
  return j.dump(2);
}

std::string bench_table(const BenchReport& report) {
  std::ostringstream out;
  out << "context: " << report.context_description << ", " << report.trials
      << " trials per size\n";
  out << std::left << std::setw(8) << "size" << std::right << std::setw(14) << "mul mean ms"
      << std::setw(12) << "stddev" << std::setw(14) << "incr mean ms" << std::setw(12) << "stddev"
      << std::setw(10) << "ratio" << std::setw(8) << "equal" << "\n";
  out << std::fixed << std::setprecision(3);
  for (const BenchRow& row : report.rows) {
    out << std::left << std::setw(8) << row.size << std::right << std::setw(14) << row.mul_mean_ms
        << std::setw(12) << row.mul_stddev_ms << std::setw(14) << row.incremental_mean_ms
        << std::setw(12) << row.incremental_stddev_ms << std::setw(10) << row.ratio << std::setw(8)
        << (row.outputs_equal ? "yes" : "NO") << "\n";
  }
  return out.str();
}

}  // namespace skewlab
