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

#include "skewlab/config.hpp"

namespace skewlab {

/// Benchmark of mul (per-cell sigma powers in closed form) against
/// mul_incremental (row-to-row sigma reuse) on random dense lead-0 series.
struct BenchConfig {
  ContextConfig context;
  std::vector<long> sizes = {32, 64, 128, 256};
  long trials = 5;
  std::uint64_t seed = 42;
};

struct BenchRow {
  long size = 0;                  // coefficient count per operand
  double mul_mean_ms = 0.0;
  double mul_stddev_ms = 0.0;
  double incremental_mean_ms = 0.0;
  double incremental_stddev_ms = 0.0;
  double ratio = 0.0;             // incremental mean / mul mean
  bool outputs_equal = true;      // per-trial structural cross-check
};

struct BenchReport {
  int schema_version = 1;
  std::string context_description;
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<BenchRow> rows;

  bool all_outputs_equal() const;
};

/// Runs the benchmark; timings are report-only (no threshold), but each
/// trial cross-checks that both algorithms produce structurally equal
/// results. Throws std::invalid_argument on empty sizes, a size < 1, or
/// trials < 1.
BenchReport run_bench(const BenchConfig& config);

std::string bench_to_json(const BenchReport& report);
std::string bench_table(const BenchReport& report);

}  // namespace skewlab
