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

#include "skewlab/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "skewlab/centre.hpp"
#include "skewlab/commutators.hpp"
#include "skewlab/random_series.hpp"

namespace skewlab {

namespace {

using Clock = std::chrono::steady_clock;

// Seed streams per property, so adding trials to one property never shifts
// another property's draws.
constexpr std::uint64_t kStreamRingX = 0, kStreamRingY = 1, kStreamRingZ = 2;
constexpr std::uint64_t kStreamValX = 10, kStreamValY = 11;
constexpr std::uint64_t kStreamInverse = 20;
constexpr std::uint64_t kStreamCommX = 30, kStreamCommY = 31;
constexpr std::uint64_t kStreamProdLen = 40, kStreamProdX = 41, kStreamProdY = 42;
constexpr std::uint64_t kStreamCombLen = 50, kStreamCombX = 51, kStreamCombY = 52,
                        kStreamCombScalar = 53;
constexpr std::uint64_t kStreamCentre = 60;
constexpr std::uint64_t kStreamCodim = 70;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs `trial` for i in [0, trials); a returned string is the trial's
// counterexample. Zero trials marks the property skipped.
PropertyResult run_property(const std::string& name, long trials,
                            const std::function<std::optional<std::string>(long)>& trial) {
  PropertyResult result;
  result.name = name;
  result.trials = trials;
  if (trials == 0) {
    result.skipped = true;
    result.skip_reason = "zero trials requested";
    return result;
  }
  const auto start = Clock::now();
  for (long i = 0; i < trials; ++i) {
    std::optional<std::string> counterexample = trial(i);
    if (counterexample) {
      if (result.failures == 0) result.first_counterexample = *counterexample;
      ++result.failures;
    }
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

PropertyResult skipped_property(const std::string& name, std::string reason) {
  PropertyResult result;
  result.name = name;
  result.skipped = true;
  result.skip_reason = std::move(reason);
  return result;
}

SeriesProfile profile_for(const VerifyConfig& config) {
  SeriesProfile profile;
  profile.precision = config.precision;
  return profile;
}

PropertyResult check_ring_axioms(const ContextPtr& ctx, const VerifyConfig& config) {
  const SeriesProfile profile = profile_for(config);
  return run_property(
      "ring_axioms", config.trials_ring, [&](long i) -> std::optional<std::string> {
        const SkewSeries x =
            random_series(ctx, derive_seed(config.seed, kStreamRingX, static_cast<std::uint64_t>(i)), profile);
        const SkewSeries y =
            random_series(ctx, derive_seed(config.seed, kStreamRingY, static_cast<std::uint64_t>(i)), profile);
        const SkewSeries z =
            random_series(ctx, derive_seed(config.seed, kStreamRingZ, static_cast<std::uint64_t>(i)), profile);
        const char* law = nullptr;
        if (!x.mul(y).mul(z).equals_to_precision(x.mul(y.mul(z)))) {
          law = "associativity";
        } else if (!x.mul(y.add(z)).equals_to_precision(x.mul(y).add(x.mul(z)))) {
          law = "left distributivity";
        } else if (!x.add(y).mul(z).equals_to_precision(x.mul(z).add(y.mul(z)))) {
          law = "right distributivity";
        }
        if (!law) return std::nullopt;
        return std::string(law) + " failed at trial " + std::to_string(i) + ": x = " +
               x.to_string() + ", y = " + y.to_string() + ", z = " + z.to_string();
      });
}

PropertyResult check_valuation_laws(const ContextPtr& ctx, const VerifyConfig& config) {
  const SeriesProfile profile = profile_for(config);
  return run_property(
      "valuation_laws", config.trials_valuation, [&](long i) -> std::optional<std::string> {
        const SkewSeries x =
            random_series(ctx, derive_seed(config.seed, kStreamValX, static_cast<std::uint64_t>(i)), profile);
        const SkewSeries y =
            random_series(ctx, derive_seed(config.seed, kStreamValY, static_cast<std::uint64_t>(i)), profile);
        const SkewSeries xy = x.mul(y);
        if (!xy.valuation() || *xy.valuation() != *x.valuation() + *y.valuation()) {
          return "v(xy) != v(x) + v(y) at trial " + std::to_string(i) + ": x = " +
                 x.to_string() + ", y = " + y.to_string();
        }
        const SkewSeries sum = x.add(y);
        if (!sum.is_zero() &&
            *sum.valuation() < std::min(*x.valuation(), *y.valuation())) {
          return "v(x+y) < min(v(x), v(y)) at trial " + std::to_string(i) + ": x = " +
                 x.to_string() + ", y = " + y.to_string();
        }
        return std::nullopt;
      });
}

PropertyResult check_inverses(const ContextPtr& ctx, const VerifyConfig& config) {
  const SeriesProfile profile = profile_for(config);
  return run_property(
      "inverses", config.trials_inverse, [&](long i) -> std::optional<std::string> {
        const SkewSeries x = random_series(
            ctx, derive_seed(config.seed, kStreamInverse, static_cast<std::uint64_t>(i)), profile);
        const SkewSeries inv = x.inverse();
        const SkewSeries one = SkewSeries::one(ctx, config.precision);
        if (!x.mul(inv).equals_to_precision(one) || !inv.mul(x).equals_to_precision(one)) {
          return "x * inverse(x) != 1 at trial " + std::to_string(i) + ": x = " + x.to_string();
        }
        return std::nullopt;
      });
}

PropertyResult check_commutator_kernel(const ContextPtr& ctx, const VerifyConfig& config) {
  const SeriesProfile profile = profile_for(config);
  return run_property(
      "commutator_kernel", config.trials_commutators, [&](long i) -> std::optional<std::string> {
        const SkewSeries x =
            random_series(ctx, derive_seed(config.seed, kStreamCommX, static_cast<std::uint64_t>(i)), profile);
        const SkewSeries y =
            random_series(ctx, derive_seed(config.seed, kStreamCommY, static_cast<std::uint64_t>(i)), profile);
        const CommutatorRecord record = commutator(x, y);
        if (record.valuation_of_value != 0) {
          return "v(comm) = " + std::to_string(record.valuation_of_value) + " at trial " +
                 std::to_string(i) + ": x = " + x.to_string() + ", y = " + y.to_string();
        }
        return std::nullopt;
      });
}

std::vector<CommutatorRecord> draw_commutators(const ContextPtr& ctx, const VerifyConfig& config,
                                               std::uint64_t stream_x, std::uint64_t stream_y,
                                               long trial, long count) {
  const SeriesProfile profile = profile_for(config);
  std::vector<CommutatorRecord> records;
  records.reserve(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j) {
    const std::uint64_t index = static_cast<std::uint64_t>(trial) * 8 + static_cast<std::uint64_t>(j);
    records.push_back(commutator(random_series(ctx, derive_seed(config.seed, stream_x, index), profile),
                                 random_series(ctx, derive_seed(config.seed, stream_y, index), profile)));
  }
  return records;
}

PropertyResult check_commutator_products(const ContextPtr& ctx, const VerifyConfig& config) {
  return run_property(
      "commutator_products", config.trials_products, [&](long i) -> std::optional<std::string> {
        const long len =
            1 + static_cast<long>(derive_seed(config.seed, kStreamProdLen, static_cast<std::uint64_t>(i)) % 4);
        const std::vector<CommutatorRecord> records =
            draw_commutators(ctx, config, kStreamProdX, kStreamProdY, i, len);
        const SkewSeries product = commutator_product(records);
        if (!product.valuation() || *product.valuation() != 0) {
          return "product of " + std::to_string(len) + " commutators has valuation " +
                 (product.valuation() ? std::to_string(*product.valuation()) : std::string("ZERO")) +
                 " at trial " + std::to_string(i);
        }
        return std::nullopt;
      });
}

PropertyResult check_f_combinations(const ContextPtr& ctx, const VerifyConfig& config) {
  if (ctx->field_kind() != FieldKind::RationalFunctions ||
      ctx->sigma().kind() != Automorphism::Kind::Shift) {
    return skipped_property("f_combinations",
                            "rational-scalar combinations run in the Q(u) Shift context");
  }
  static const std::array<const char*, 14> kScalars = {
      "1", "-1", "2", "-2", "3", "-3", "4", "-4", "5", "-5", "1/2", "-1/2", "3/2", "1/3"};
  return run_property(
      "f_combinations", config.trials_f_combinations, [&](long i) -> std::optional<std::string> {
        const long len =
            2 + static_cast<long>(derive_seed(config.seed, kStreamCombLen, static_cast<std::uint64_t>(i)) % 3);
        const std::vector<CommutatorRecord> records =
            draw_commutators(ctx, config, kStreamCombX, kStreamCombY, i, len);
        std::mt19937_64 rng(derive_seed(config.seed, kStreamCombScalar, static_cast<std::uint64_t>(i)));
        SkewSeries combo = SkewSeries::zero(ctx, config.precision);
        for (const CommutatorRecord& record : records) {
          const char* q = kScalars[static_cast<std::size_t>(
              draw_in_range(rng, 0, static_cast<long>(kScalars.size()) - 1))];
          combo = combo.add(record.value.scaled(ctx->from_rational(parse_rational(q))));
        }
        if (!combo.is_zero() && *combo.valuation() < 0) {
          return "combination of " + std::to_string(len) + " commutators has valuation " +
                 std::to_string(*combo.valuation()) + " at trial " + std::to_string(i);
        }
        return std::nullopt;
      });
}

// The centre facts the algebra mandates for the configured context: which
// powers of t are central against the probe set, which constants are, and
// who the first witness must be.
PropertyResult check_centre(const ContextPtr& ctx, const VerifyConfig& config) {
  if (config.trials_centre_probes == 0) {
    return skipped_property("centre_checks", "zero trials requested");
  }
  const auto start = Clock::now();
  PropertyResult result;
  result.name = "centre_checks";

  std::vector<SkewSeries> probes;
  probes.push_back(SkewSeries::monomial(ctx, ctx->one(), 1, config.precision));
  const bool has_generator =
      ctx->field_kind() == FieldKind::RationalFunctions ||
      (ctx->field_kind() == FieldKind::Galois && ctx->galois_field()->k() > 1);
  if (has_generator) {
    probes.push_back(SkewSeries::constant(ctx, ctx->generator(), config.precision));
  }
  const SeriesProfile profile = profile_for(config);
  for (long i = 0; i < config.trials_centre_probes; ++i) {
    probes.push_back(random_series(
        ctx, derive_seed(config.seed, kStreamCentre, static_cast<std::uint64_t>(i)), profile));
  }

  // (candidate, expected centrality, expected witness probe or -1 for any).
  struct Case {
    SkewSeries candidate;
    bool expect_central;
    long witness_index;
  };
  std::vector<Case> cases;
  const std::optional<long> order = ctx->sigma_order();
  if (ctx->field_kind() == FieldKind::RationalFunctions &&
      ctx->sigma().kind() == Automorphism::Kind::Shift) {
    for (long k = 1; k <= 4; ++k) {
      cases.push_back({SkewSeries::monomial(ctx, ctx->one(), k, config.precision), false, 1});
    }
    cases.push_back({SkewSeries::constant(ctx, ctx->from_rational(BigRational(5)), config.precision),
                     true, -1});
    cases.push_back({SkewSeries::constant(ctx, ctx->generator(), config.precision), false, 0});
  } else if (ctx->field_kind() == FieldKind::Galois &&
             ctx->sigma().kind() == Automorphism::Kind::Frobenius && order && *order > 1) {
    cases.push_back({SkewSeries::monomial(ctx, ctx->one(), *order, config.precision), true, -1});
    cases.push_back({SkewSeries::monomial(ctx, ctx->one(), 1, config.precision), false, 1});
    cases.push_back({SkewSeries::constant(ctx, ctx->generator(), config.precision), false, 0});
    cases.push_back({SkewSeries::one(ctx, config.precision), true, -1});
  } else {
    cases.push_back({SkewSeries::one(ctx, config.precision), true, -1});
    cases.push_back({SkewSeries::monomial(ctx, ctx->one(), 1, config.precision),
                     order.has_value() && *order == 1, -1});
  }

  result.trials = static_cast<long>(cases.size());
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const Case& expected = cases[c];
    const CentreReport report = centre_check(expected.candidate, probes);
    std::string problem;
    if (report.central != expected.expect_central) {
      problem = expected.expect_central ? "expected central, witness found"
                                        : "expected non-central, no witness found";
    } else if (!expected.expect_central && expected.witness_index >= 0 &&
               (!report.witness ||
                *report.witness != probes[static_cast<std::size_t>(expected.witness_index)])) {
      problem = "wrong first witness";
    }
    if (!problem.empty()) {
      if (result.failures == 0) {
        result.first_counterexample = "candidate " + expected.candidate.to_string() + ": " + problem;
      }
      ++result.failures;
    }
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const PropertyResult& p : properties) {
    if (!p.passed()) return false;
  }
  return true;
}

VerificationReport run_verify(const VerifyConfig& config) {
  if (config.precision < 1) {
    throw std::invalid_argument("verification precision must be at least 1");
  }
  for (long count : {config.trials_ring, config.trials_valuation, config.trials_inverse,
                     config.trials_commutators, config.trials_products,
                     config.trials_f_combinations, config.trials_centre_probes, config.k_max,
                     config.span_budget}) {
    if (count < 0) throw std::invalid_argument("trial counts must be nonnegative");
  }
  const ContextPtr ctx = make_context(config.context);

  const auto start = Clock::now();
  VerificationReport report;
  report.field = config.context.field;
  report.sigma = config.context.sigma;
  report.context_description = ctx->description();
  report.seed = config.seed;
  report.precision = config.precision;

  report.properties.push_back(check_ring_axioms(ctx, config));
  report.properties.push_back(check_valuation_laws(ctx, config));
  report.properties.push_back(check_inverses(ctx, config));
  report.properties.push_back(check_commutator_kernel(ctx, config));
  report.properties.push_back(check_commutator_products(ctx, config));
  report.properties.push_back(check_f_combinations(ctx, config));
  report.properties.push_back(check_centre(ctx, config));

  // Codimension witness suite: one obstruction certificate per target
  // t^-1 .. t^-k_max, each against `span_budget` commutator generators.
  if (config.k_max == 0 || config.span_budget == 0) {
    report.properties.push_back(
        skipped_property("codimension_suite", "zero targets or zero generator budget requested"));
  } else {
    PropertyResult result;
    result.name = "codimension_suite";
    result.trials = config.k_max;
    const auto suite_start = Clock::now();
    report.certificates = codimension_witness_suite(
        ctx, config.k_max, config.span_budget, derive_seed(config.seed, kStreamCodim, 0),
        config.precision);
    for (long k = 1; k <= config.k_max; ++k) {
      report.certificate_targets.push_back("t^-" + std::to_string(k));
      const SpanVerdict& verdict = report.certificates[static_cast<std::size_t>(k - 1)];
      if (verdict.kind != SpanVerdictKind::NotInSpanObstruction) {
        if (result.failures == 0) {
          result.first_counterexample = "target t^-" + std::to_string(k) + ": " + verdict.to_string();
        }
        ++result.failures;
      }
    }
    result.elapsed_ms = ms_since(suite_start);
    report.properties.push_back(result);
  }

  report.total_ms = ms_since(start);
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["schema_version"] = report.schema_version;
  j["context"] = {{"field", report.field},
                  {"sigma", report.sigma},
                  {"description", report.context_description}};
  j["seed"] = report.seed;
  j["precision"] = report.precision;
  j["all_passed"] = report.all_passed();
  j["properties"] = nlohmann::json::array();
  for (const PropertyResult& p : report.properties) {
    nlohmann::json jp;
    jp["name"] = p.name;
    jp["trials"] = p.trials;
    jp["failures"] = p.failures;
    jp["skipped"] = p.skipped;
    jp["passed"] = p.passed();
    if (p.skipped) jp["skip_reason"] = p.skip_reason;
    if (p.failures > 0) jp["first_counterexample"] = p.first_counterexample;
    jp["elapsed_ms"] = p.elapsed_ms;
    j["properties"].push_back(std::move(jp));
  }
  j["span_certificates"] = nlohmann::json::array();
  for (std::size_t i = 0; i < report.certificates.size(); ++i) {
    const SpanVerdict& v = report.certificates[i];
    nlohmann::json jc;
    jc["target"] = i < report.certificate_targets.size() ? report.certificate_targets[i] : "";
    jc["obstruction"] = v.kind == SpanVerdictKind::NotInSpanObstruction;
    if (v.kind == SpanVerdictKind::NotInSpanObstruction) {
      jc["min_generator_valuation"] = v.min_generator_valuation;
      jc["target_valuation"] = v.target_valuation;
    }
    jc["verdict"] = v.to_string();
    j["span_certificates"].push_back(std::move(jc));
  }
  j["total_ms"] = report.total_ms;
  return j.dump(2);
}

std::string report_summary(const VerificationReport& report) {
  std::ostringstream out;
  out << "context: " << report.context_description << "\n";
  out << "seed " << report.seed << ", precision " << report.precision << "\n";
  for (const PropertyResult& p : report.properties) {
    out << "  " << p.name;
    for (std::size_t pad = p.name.size(); pad < 22; ++pad) out << ' ';
    if (p.skipped) {
      out << "skipped (" << p.skip_reason << ")\n";
      continue;
    }
    out << p.trials << " trials, " << (p.passed() ? "pass" : "FAIL");
    if (!p.passed()) out << " [" << p.first_counterexample << "]";
    out << "\n";
  }
  if (!report.certificates.empty()) {
    out << "  obstruction certificates: " << report.certificates.size() << "\n";
  }
  out << "overall: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace skewlab
