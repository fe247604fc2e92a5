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

#include "skewlab/span.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "skewlab/automorphism.hpp"
#include "skewlab/commutators.hpp"
#include "skewlab/context.hpp"
#include "skewlab/random_series.hpp"
#include "skewlab/rational_linalg.hpp"

namespace skewlab {

namespace {

void validate_problem(const SpanProblem& problem) {
  if (!problem.context) {
    throw std::invalid_argument("span: problem has no context");
  }
  if (problem.generators.empty()) {
    throw std::invalid_argument("span: generator list is empty");
  }
  if (*problem.target.context() != *problem.context) {
    throw std::invalid_argument("span: target context mismatch");
  }
  for (const auto& g : problem.generators) {
    if (*g.context() != *problem.context) {
      throw std::invalid_argument("span: generator context mismatch");
    }
  }
}

// Monic least common multiple; both inputs are nonzero monic denominators.
Polynomial monic_lcm(const Polynomial& a, const Polynomial& b) {
  Polynomial g = poly_gcd(a, b);
  return (a * b.divrem(g).first).monic();
}

// num * (lcm / den), exact by construction of the lcm.
Polynomial cleared_numerator(const RationalFunction& f, const Polynomial& lcm) {
  return f.num() * lcm.divrem(f.den()).first;
}

}  // namespace

SpanVerdict SpanVerdict::in_span(std::vector<FieldValue> coeffs) {
  SpanVerdict v;
  v.kind = SpanVerdictKind::InSpan;
  v.coefficients = std::move(coeffs);
  return v;
}

SpanVerdict SpanVerdict::obstruction(long min_generator_valuation,
                                     long target_valuation) {
  SpanVerdict v;
  v.kind = SpanVerdictKind::NotInSpanObstruction;
  v.min_generator_valuation = min_generator_valuation;
  v.target_valuation = target_valuation;
  return v;
}

SpanVerdict SpanVerdict::undecided(std::string reason) {
  SpanVerdict v;
  v.kind = SpanVerdictKind::Undecided;
  v.reason = std::move(reason);
  return v;
}

std::string SpanVerdict::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case SpanVerdictKind::InSpan: {
      out << "IN_SPAN[";
      for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i != 0) out << ", ";
        out << coefficients[i].to_string();
      }
      out << "]";
      break;
    }
    case SpanVerdictKind::NotInSpanObstruction:
      out << "NOT_IN_SPAN_OBSTRUCTION(min_generator_valuation="
          << min_generator_valuation << ", target_valuation=" << target_valuation
          << ")";
      break;
    case SpanVerdictKind::Undecided:
      out << "UNDECIDED(" << reason << ")";
      break;
  }
  return out.str();
}

SpanVerdict valuation_obstruction(const SpanProblem& problem) {
  validate_problem(problem);
  auto target_v = problem.target.valuation();
  if (!target_v.has_value()) {
    throw std::domain_error("valuation_obstruction: target is ZERO");
  }
  bool any_nonzero = false;
  long min_gen_v = 0;
  for (const auto& g : problem.generators) {
    auto v = g.valuation();
    if (!v.has_value()) continue;  // ZERO spans nothing
    min_gen_v = any_nonzero ? std::min(min_gen_v, *v) : *v;
    any_nonzero = true;
  }
  if (!any_nonzero) {
    return SpanVerdict::undecided("all generators are ZERO");
  }
  if (*target_v < 0 && min_gen_v >= 0) {
    return SpanVerdict::obstruction(min_gen_v, *target_v);
  }
  return SpanVerdict::undecided("no valuation obstruction");
}

SpanVerdict coefficient_matching_solve(const SpanProblem& problem) {
  validate_problem(problem);
  const SkewContext& ctx = *problem.context;
  if (ctx.field_kind() != FieldKind::RationalFunctions ||
      ctx.sigma().kind() != Automorphism::Kind::Shift) {
    throw std::invalid_argument(
        "coefficient_matching_solve: only the Shift context over Q(u) is "
        "supported (fixed field Q)");
  }

  long peff = problem.precision;
  peff = std::min(peff, problem.target.precision());
  for (const auto& g : problem.generators) peff = std::min(peff, g.precision());

  const std::size_t n = problem.generators.size();

  // Lowest exponent carrying any data.
  std::optional<long> lo;
  auto note = [&lo](std::optional<long> v) {
    if (v.has_value()) lo = lo.has_value() ? std::min(*lo, *v) : *v;
  };
  note(problem.target.valuation());
  for (const auto& g : problem.generators) note(g.valuation());
  if (!lo.has_value()) {
    // ZERO target, ZERO generators: the empty combination works.
    return SpanVerdict::in_span(
        std::vector<FieldValue>(n, FieldValue(RationalFunction::zero())));
  }

  RationalMatrix a;
  std::vector<BigRational> b;
  for (long r = *lo; r < peff; ++r) {
    std::vector<RationalFunction> row(n);
    RationalFunction rhs = problem.target.coeff(r).rational_function();
    bool all_zero = rhs.is_zero();
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = problem.generators[i].coeff(r).rational_function();
      all_zero = all_zero && row[i].is_zero();
    }
    if (all_zero) continue;

    Polynomial lcm = Polynomial::one();
    for (const auto& f : row) {
      if (!f.is_zero()) lcm = monic_lcm(lcm, f.den());
    }
    if (!rhs.is_zero()) lcm = monic_lcm(lcm, rhs.den());

    std::vector<Polynomial> cleared(n);
    long max_deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cleared[i] = cleared_numerator(row[i], lcm);
      max_deg = std::max(max_deg, cleared[i].degree());
    }
    Polynomial cleared_rhs = cleared_numerator(rhs, lcm);
    max_deg = std::max(max_deg, cleared_rhs.degree());

    for (long d = 0; d <= max_deg; ++d) {
      std::vector<BigRational> eq(n);
      for (std::size_t i = 0; i < n; ++i) {
        eq[i] = cleared[i].coeff(static_cast<std::size_t>(d));
      }
      a.push_back(std::move(eq));
      b.push_back(cleared_rhs.coeff(static_cast<std::size_t>(d)));
    }
  }

  auto solution = solve_linear_system(std::move(a), std::move(b));
  if (!solution.has_value()) {
    return SpanVerdict::undecided("no solution at this precision");
  }

  std::vector<FieldValue> coeffs;
  coeffs.reserve(n);
  for (const auto& c : *solution) {
    coeffs.emplace_back(RationalFunction(c));
  }

  // Re-verify the combination against the target before claiming IN_SPAN.
  SkewSeries residual = problem.target.truncated(peff);
  for (std::size_t i = 0; i < n; ++i) {
    residual = residual.sub(problem.generators[i].truncated(peff).scaled(coeffs[i]));
  }
  if (!residual.is_zero()) {
    return SpanVerdict::undecided("solution failed residual verification");
  }
  return SpanVerdict::in_span(std::move(coeffs));
}

std::vector<SpanVerdict> codimension_witness_suite(const ContextPtr& ctx,
                                                   long k_max,
                                                   long generator_budget,
                                                   std::uint64_t seed,
                                                   long precision) {
  if (k_max < 1) {
    throw std::invalid_argument("codimension_witness_suite: k_max must be >= 1");
  }
  if (generator_budget < 1) {
    throw std::invalid_argument(
        "codimension_witness_suite: generator budget must be >= 1");
  }

  SeriesProfile profile;
  profile.precision = precision;

  std::vector<SkewSeries> generators;
  generators.reserve(static_cast<std::size_t>(generator_budget));
  for (long i = 0; i < generator_budget; ++i) {
    auto index = static_cast<std::uint64_t>(i);
    if (i % 4 == 3) {
      // Every fourth generator is a product of 2..4 commutators, exercising
      // the full commutator subgroup rather than single commutators only.
      long len = 2 + static_cast<long>(derive_seed(seed, 2, index) % 3);
      std::vector<CommutatorRecord> records;
      records.reserve(static_cast<std::size_t>(len));
      for (long j = 0; j < len; ++j) {
        auto stream = static_cast<std::uint64_t>(3 + 2 * j);
        SkewSeries x = random_series(ctx, derive_seed(seed, stream, index), profile);
        SkewSeries y = random_series(ctx, derive_seed(seed, stream + 1, index), profile);
        records.push_back(commutator(x, y));
      }
      generators.push_back(commutator_product(records));
    } else {
      SkewSeries x = random_series(ctx, derive_seed(seed, 0, index), profile);
      SkewSeries y = random_series(ctx, derive_seed(seed, 1, index), profile);
      generators.push_back(commutator(x, y).value);
    }
  }

  std::vector<SpanVerdict> verdicts;
  verdicts.reserve(static_cast<std::size_t>(k_max));
  for (long k = 1; k <= k_max; ++k) {
    SpanProblem problem{ctx,
                        SkewSeries::monomial(ctx, ctx->one(), -k, precision),
                        generators, precision};
    verdicts.push_back(valuation_obstruction(problem));
  }
  return verdicts;
}

}  // namespace skewlab
