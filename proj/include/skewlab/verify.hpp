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
#include "skewlab/series.hpp"
#include "skewlab/span.hpp"

namespace skewlab {

/// Trial counts and context selection for one verification run. A count of
/// zero marks the property skipped (vacuous pass).
struct VerifyConfig {
  ContextConfig context;
  std::uint64_t seed = 42;
  long precision = kDefaultPrecision;
  long trials_ring = 1000;            // associativity + distributivity triples
  long trials_valuation = 1000;       // v(xy), v(x+y) pairs
  long trials_inverse = 500;          // two-sided inverse checks
  long trials_commutators = 200;      // single commutator kernel checks
  long trials_products = 50;          // products of up to 4 commutators
  long trials_f_combinations = 100;   // rational-scalar combinations (Shift)
  long trials_centre_probes = 200;    // random probes per centre candidate
  long k_max = 3;                     // codimension targets t^-1 .. t^-k_max
  long span_budget = 200;             // commutator generators per target
};

/// One property line in the report. `skipped` marks a property that ran no
/// trials (zero count, or a law that needs a different context); a skipped
/// property passes vacuously.
struct PropertyResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  bool skipped = false;
  std::string skip_reason;
  std::string first_counterexample;
  double elapsed_ms = 0.0;

  bool passed() const { return skipped || failures == 0; }
};

/// Everything needed to recompute a pass/fail flag is recorded: counts,
/// first counterexample, and the span certificates verbatim.
struct VerificationReport {
  int schema_version = 1;
  std::string field;
  std::string sigma;
  std::string context_description;
  std::uint64_t seed = 0;
  long precision = 0;
  std::vector<PropertyResult> properties;
  std::vector<SpanVerdict> certificates;  // codimension suite verdicts
  std::vector<std::string> certificate_targets;
  double total_ms = 0.0;

  bool all_passed() const;
};

/// Runs every property suite against the configured context. Deterministic
/// for fixed (config, seed) except the timing fields. Throws
/// std::invalid_argument on invalid config (bad context spec, negative
/// counts, precision < 1).
VerificationReport run_verify(const VerifyConfig& config);

/// The report as a versioned JSON document (the machine interface).
std::string report_to_json(const VerificationReport& report);

/// Short human-readable summary (one line per property).
std::string report_summary(const VerificationReport& report);

}  // namespace skewlab
