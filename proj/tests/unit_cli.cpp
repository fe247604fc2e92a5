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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "skewlab/bench.hpp"
#include "skewlab/config.hpp"
#include "skewlab/eval.hpp"
#include "skewlab/parser.hpp"
#include "skewlab/random_series.hpp"
#include "skewlab/verify.hpp"

using namespace skewlab;

namespace {

ContextPtr shift_ctx() {
  static ContextPtr ctx = SkewContext::rational_functions(Automorphism::shift(BigRational(1)));
  return ctx;
}

ContextPtr frob_ctx() {
  static ContextPtr ctx =
      SkewContext::galois(GaloisField::make(2, 2, {1, 1, 1}), Automorphism::frobenius());
  return ctx;
}

RationalFunction rf(std::vector<long> num, std::vector<long> den) {
  std::vector<BigRational> n(num.begin(), num.end());
  std::vector<BigRational> d(den.begin(), den.end());
  return RationalFunction(Polynomial(std::move(n)), Polynomial(std::move(d)));
}

// Random expression trees for the parse/print round-trip. Literals are
// nonnegative (the parser represents negative values as unary minus).
ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  auto node = [&](Expr::Kind kind) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    return e;
  };
  const long leaf = draw_in_range(rng, 0, 4);
  if (depth <= 0) {
    switch (leaf) {
      case 0: {
        auto e = node(Expr::Kind::Literal);
        e->literal = BigInt(draw_in_range(rng, 0, 9));
        return e;
      }
      case 1: return node(Expr::Kind::SymbolU);
      case 2: return node(Expr::Kind::SymbolT);
      case 3: {
        auto e = node(Expr::Kind::PrecisionMark);
        e->exponent = draw_in_range(rng, -4, 40);
        return e;
      }
      default: return node(Expr::Kind::SymbolW);
    }
  }
  switch (draw_in_range(rng, 0, 7)) {
    case 0: {
      auto e = node(Expr::Kind::Add);
      e->lhs = random_expr(rng, depth - 1);
      e->rhs = random_expr(rng, depth - 1);
      return e;
    }
    case 1: {
      auto e = node(Expr::Kind::Sub);
      e->lhs = random_expr(rng, depth - 1);
      e->rhs = random_expr(rng, depth - 1);
      return e;
    }
    case 2: {
      auto e = node(Expr::Kind::Mul);
      e->lhs = random_expr(rng, depth - 1);
      e->rhs = random_expr(rng, depth - 1);
      return e;
    }
    case 3: {
      auto e = node(Expr::Kind::Div);
      e->lhs = random_expr(rng, depth - 1);
      e->rhs = random_expr(rng, depth - 1);
      return e;
    }
    case 4: {
      auto e = node(Expr::Kind::Neg);
      e->lhs = random_expr(rng, depth - 1);
      return e;
    }
    case 5: {
      auto e = node(Expr::Kind::Pow);
      e->lhs = random_expr(rng, depth - 1);
      e->exponent = draw_in_range(rng, -3, 3);
      return e;
    }
    case 6: {
      auto e = node(Expr::Kind::Comm);
      e->lhs = random_expr(rng, depth - 1);
      e->rhs = random_expr(rng, depth - 1);
      return e;
    }
    default: {
      auto e = node(Expr::Kind::Inv);
      e->lhs = random_expr(rng, depth - 1);
      return e;
    }
  }
}

}  // namespace

TEST_CASE("parser builds the pinned example trees") {
  const ExprPtr mul = parse_expr("t*u");
  REQUIRE(mul->kind == Expr::Kind::Mul);
  CHECK(mul->lhs->kind == Expr::Kind::SymbolT);
  CHECK(mul->rhs->kind == Expr::Kind::SymbolU);

  const ExprPtr comm = parse_expr("comm(t, u)");
  REQUIRE(comm->kind == Expr::Kind::Comm);
  CHECK(comm->lhs->kind == Expr::Kind::SymbolT);
  CHECK(comm->rhs->kind == Expr::Kind::SymbolU);

  // 3*t^-2 + t parses as Add(Mul(3, Pow(t, -2)), t).
  const ExprPtr sum = parse_expr("3*t^-2 + t");
  REQUIRE(sum->kind == Expr::Kind::Add);
  CHECK(sum->rhs->kind == Expr::Kind::SymbolT);
  REQUIRE(sum->lhs->kind == Expr::Kind::Mul);
  CHECK(sum->lhs->lhs->kind == Expr::Kind::Literal);
  CHECK(sum->lhs->lhs->literal == 3);
  REQUIRE(sum->lhs->rhs->kind == Expr::Kind::Pow);
  CHECK(sum->lhs->rhs->exponent == -2);
  CHECK(sum->lhs->rhs->lhs->kind == Expr::Kind::SymbolT);
}

TEST_CASE("parser precedence: ^ over unary minus over * and / over + and -") {
  // u*t^2 is u*(t^2), not (u*t)^2.
  const ExprPtr p1 = parse_expr("u*t^2");
  REQUIRE(p1->kind == Expr::Kind::Mul);
  CHECK(p1->rhs->kind == Expr::Kind::Pow);

  // -t^2 is -(t^2).
  const ExprPtr p2 = parse_expr("-t^2");
  REQUIRE(p2->kind == Expr::Kind::Neg);
  CHECK(p2->lhs->kind == Expr::Kind::Pow);

  // -t*u is (-t)*u: unary minus binds tighter than *.
  const ExprPtr p3 = parse_expr("-t*u");
  REQUIRE(p3->kind == Expr::Kind::Mul);
  CHECK(p3->lhs->kind == Expr::Kind::Neg);

  // 1+2*3 keeps * below +.
  const ExprPtr p4 = parse_expr("1+2*3");
  REQUIRE(p4->kind == Expr::Kind::Add);
  CHECK(p4->rhs->kind == Expr::Kind::Mul);

  // Left associativity: 1-2-3 is (1-2)-3, 8/4/2 is (8/4)/2, t^2^3 is (t^2)^3.
  const ExprPtr p5 = parse_expr("1-2-3");
  REQUIRE(p5->kind == Expr::Kind::Sub);
  CHECK(p5->lhs->kind == Expr::Kind::Sub);
  const ExprPtr p6 = parse_expr("8/4/2");
  REQUIRE(p6->kind == Expr::Kind::Div);
  CHECK(p6->lhs->kind == Expr::Kind::Div);
  const ExprPtr p7 = parse_expr("t^2^3");
  REQUIRE(p7->kind == Expr::Kind::Pow);
  CHECK(p7->exponent == 3);
  REQUIRE(p7->lhs->kind == Expr::Kind::Pow);
  CHECK(p7->lhs->exponent == 2);

  // Parentheses override: (1+2)*3.
  const ExprPtr p8 = parse_expr("(1+2)*3");
  REQUIRE(p8->kind == Expr::Kind::Mul);
  CHECK(p8->lhs->kind == Expr::Kind::Add);

  // O(t^P) is an ordinary additive primary.
  const ExprPtr p9 = parse_expr("t + O(t^8)");
  REQUIRE(p9->kind == Expr::Kind::Add);
  REQUIRE(p9->rhs->kind == Expr::Kind::PrecisionMark);
  CHECK(p9->rhs->exponent == 8);
}

TEST_CASE("parse errors carry byte offsets and expected-token hints") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };

  CHECK(offset_of("t*") == 2);
  CHECK(offset_of("t u") == 2);
  CHECK(offset_of("(t") == 2);
  CHECK(offset_of("comm(t u)") == 7);
  CHECK(offset_of("v") == 0);
  CHECK(offset_of("t^x") == 2);
  CHECK(offset_of("3*$") == 2);
  CHECK(offset_of("O(u^3)") == 2);

  try {
    parse_expr("t*");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.expected() == "a number, u, w, t, comm, inv, O, or '('");
    CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
  try {
    parse_expr("comm(t u)");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.expected() == "','");
  }
}

TEST_CASE("print/parse round-trip holds on 100 generated expressions") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 100; ++i) {
    const ExprPtr original = random_expr(rng, 1 + static_cast<int>(rng() % 4));
    const std::string text = expr_to_string(*original);
    CAPTURE(text);
    const ExprPtr reparsed = parse_expr(text);
    CHECK(expr_equal(*original, *reparsed));
  }
}

TEST_CASE("eval matches the pinned series examples") {
  // t*u = (u+1)*t under Shift(1), at working precision 32.
  const SkewSeries tu = eval_text("t*u", shift_ctx());
  CHECK(tu == SkewSeries::from_terms(shift_ctx(), {{1, FieldValue(rf({1, 1}, {1}))}}, 32));

  // comm(t, u) = constant (u+1)/u (precision per the commutator chain).
  const SkewSeries c = eval_text("comm(t, u)", shift_ctx());
  CHECK(c == SkewSeries::constant(shift_ctx(), FieldValue(rf({1, 1}, {0, 1})), 31));

  // inv(1 - t) is the geometric series at full precision.
  const SkewSeries geo = eval_text("inv(1 - t)", shift_ctx());
  std::vector<std::pair<long, FieldValue>> ones;
  for (long e = 0; e < 32; ++e) ones.emplace_back(e, shift_ctx()->one());
  CHECK(geo == SkewSeries::from_terms(shift_ctx(), std::move(ones), 32));

  // Laurent polynomial with negative exponent.
  const SkewSeries lp = eval_text("3*t^-2 + t", shift_ctx());
  CHECK(lp == SkewSeries::from_terms(
                  shift_ctx(),
                  {{-2, shift_ctx()->from_rational(BigRational(3))}, {1, shift_ctx()->one()}}, 32));

  // Galois: comm(t, w) = w as a constant; w^2 + w = 1 in F_4 with w^2+w+1=0.
  const SkewSeries cw = eval_text("comm(t, w)", frob_ctx());
  CHECK(cw == SkewSeries::constant(frob_ctx(), frob_ctx()->generator(), 31));
  CHECK(eval_text("w^2 + w", frob_ctx()) == SkewSeries::one(frob_ctx(), 32));

  // Scalar division stays exact: (u+1)/u - 1/u = 1.
  CHECK(eval_text("(u+1)/u - 1/u", shift_ctx()) == SkewSeries::one(shift_ctx(), 32));
}

TEST_CASE("eval precision rules: markers pin, exact terms widen") {
  const SkewSeries marked = eval_text("t + O(t^8)", shift_ctx());
  CHECK(marked == SkewSeries::from_terms(shift_ctx(), {{1, shift_ctx()->one()}}, 8));

  // A term at or above the marker is truncated away.
  CHECK(eval_text("t^10 + O(t^8)", shift_ctx()) == SkewSeries::zero(shift_ctx(), 8));

  // Without a marker, exact terms above the working precision survive.
  const SkewSeries high = eval_text("t^40", shift_ctx());
  CHECK(high.precision() == 41);
  CHECK(*high.valuation() == 40);

  // Monomial inversion through ^-k is exact: no precision loss.
  const SkewSeries m = eval_text("3*t^-2 + (u+1)/u*t^0 + O(t^32)", shift_ctx());
  CHECK(m.precision() == 32);
  CHECK(m.to_string() == "3*t^-2 + (u+1)/u*t^0 + O(t^32)");
  CHECK(eval_text("(u*t)^-1", shift_ctx()) ==
        SkewSeries::monomial(shift_ctx(), FieldValue(rf({1}, {-1, 1})), -1, 32));
}

TEST_CASE("printed series re-evaluate to structurally equal series") {
  for (const ContextPtr& ctx : {shift_ctx(), frob_ctx()}) {
    for (std::uint64_t i = 0; i < 25; ++i) {
      const SkewSeries x = random_series(ctx, derive_seed(99, 3, i));
      const SkewSeries back = eval_text(x.to_string(), ctx);
      CAPTURE(x.to_string());
      CHECK(x == back);
    }
    // ZERO and negative-lead series round-trip too.
    const SkewSeries z = SkewSeries::zero(ctx, 17);
    CHECK(eval_text(z.to_string(), ctx) == z);
    const SkewSeries neg = SkewSeries::monomial(ctx, ctx->one(), -5, 12);
    CHECK(eval_text(neg.to_string(), ctx) == neg);
  }
}

TEST_CASE("eval rejects symbols the context lacks and undefined results") {
  CHECK_THROWS_AS(eval_text("w", shift_ctx()), std::invalid_argument);
  CHECK_THROWS_AS(eval_text("u", frob_ctx()), std::invalid_argument);
  CHECK_THROWS_AS(eval_text("inv(O(t^5))", shift_ctx()), std::domain_error);
  CHECK_THROWS_AS(eval_text("1/0", shift_ctx()), std::domain_error);
  CHECK_THROWS_AS(eval_text("(t - t)^-1", shift_ctx()), std::domain_error);
  CHECK_THROWS_AS(eval_text("comm(t, 0)", shift_ctx()), std::domain_error);
  // 1/2 exists in F_4 (2 = 0 is not invertible? no: 2 = 0 in F_2^k), so it
  // is undefined there, while 1/3 = 1.
  CHECK_THROWS_AS(eval_text("1/2", frob_ctx()), std::domain_error);
  CHECK(eval_text("1/3", frob_ctx()) == SkewSeries::one(frob_ctx(), 32));
}

TEST_CASE("context configs build the advertised contexts and reject bad specs") {
  const ContextPtr a = make_context({"q-u", "shift:1"});
  CHECK(a->field_kind() == FieldKind::RationalFunctions);
  CHECK(a->sigma().kind() == Automorphism::Kind::Shift);

  const ContextPtr b = make_context({"gf:2:2:1,1,1", "frobenius"});
  CHECK(b->field_kind() == FieldKind::Galois);
  CHECK(b->galois_field()->p() == 2);
  CHECK(b->galois_field()->k() == 2);

  const ContextPtr c = make_context({"q", "identity"});
  CHECK(c->field_kind() == FieldKind::Rationals);

  const ContextPtr d = make_context({"gf:3:1", "identity"});
  CHECK(d->galois_field()->modulus() == std::vector<std::uint64_t>{0, 1});

  CHECK_THROWS_AS(make_context({"q-u", "frobenius"}), std::invalid_argument);
  CHECK_THROWS_AS(make_context({"q", "shift:1"}), std::invalid_argument);
  CHECK_THROWS_AS(make_context({"gf:2:2:1,1,1", "shift:1"}), std::invalid_argument);
  CHECK_THROWS_AS(make_context({"gf:4:1:1", "identity"}), std::invalid_argument);
  CHECK_THROWS_AS(make_context({"gf:2:2:1,1,1,1", "frobenius"}), std::invalid_argument);
  CHECK_THROWS_AS(make_context({"r", "identity"}), std::invalid_argument);
  CHECK_THROWS_AS(make_context({"q-u", "shift:0"}), std::invalid_argument);
  CHECK_THROWS_AS(make_context({"q-u", "twist:1"}), std::invalid_argument);
}

TEST_CASE("run_verify passes at small scale in both canonical contexts") {
  VerifyConfig config;
  config.trials_ring = 5;
  config.trials_valuation = 5;
  config.trials_inverse = 3;
  config.trials_commutators = 2;
  config.trials_products = 2;
  config.trials_f_combinations = 2;
  config.trials_centre_probes = 5;
  config.span_budget = 4;

  const VerificationReport shift_report = run_verify(config);
  CHECK(shift_report.all_passed());
  REQUIRE(shift_report.properties.size() == 8);
  CHECK(shift_report.certificates.size() == 3);
  for (const SpanVerdict& v : shift_report.certificates) {
    CHECK(v.kind == SpanVerdictKind::NotInSpanObstruction);
  }

  config.context = {"gf:2:2:1,1,1", "frobenius"};
  const VerificationReport galois_report = run_verify(config);
  CHECK(galois_report.all_passed());
  bool saw_fcomb_skip = false;
  for (const PropertyResult& p : galois_report.properties) {
    if (p.name == "f_combinations") saw_fcomb_skip = p.skipped;
  }
  CHECK(saw_fcomb_skip);
}

TEST_CASE("run_verify with zero trials skips every property and passes") {
  VerifyConfig config;
  config.trials_ring = 0;
  config.trials_valuation = 0;
  config.trials_inverse = 0;
  config.trials_commutators = 0;
  config.trials_products = 0;
  config.trials_f_combinations = 0;
  config.trials_centre_probes = 0;
  config.k_max = 0;

  const VerificationReport report = run_verify(config);
  CHECK(report.all_passed());
  for (const PropertyResult& p : report.properties) {
    CHECK(p.skipped);
    CHECK(p.trials == 0);
  }
  CHECK(report.certificates.empty());

  VerifyConfig bad = config;
  bad.trials_ring = -1;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
  VerifyConfig bad_precision;
  bad_precision.precision = 0;
  CHECK_THROWS_AS(run_verify(bad_precision), std::invalid_argument);
}

TEST_CASE("verification reports are deterministic and serialize versioned JSON") {
  VerifyConfig config;
  config.trials_ring = 3;
  config.trials_valuation = 3;
  config.trials_inverse = 2;
  config.trials_commutators = 1;
  config.trials_products = 1;
  config.trials_f_combinations = 1;
  config.trials_centre_probes = 3;
  config.span_budget = 2;

  const VerificationReport r1 = run_verify(config);
  const VerificationReport r2 = run_verify(config);
  REQUIRE(r1.properties.size() == r2.properties.size());
  for (std::size_t i = 0; i < r1.properties.size(); ++i) {
    CHECK(r1.properties[i].name == r2.properties[i].name);
    CHECK(r1.properties[i].trials == r2.properties[i].trials);
    CHECK(r1.properties[i].failures == r2.properties[i].failures);
    CHECK(r1.properties[i].skipped == r2.properties[i].skipped);
    CHECK(r1.properties[i].first_counterexample == r2.properties[i].first_counterexample);
  }
  REQUIRE(r1.certificates.size() == r2.certificates.size());
  for (std::size_t i = 0; i < r1.certificates.size(); ++i) {
    CHECK(r1.certificates[i].to_string() == r2.certificates[i].to_string());
  }

  const nlohmann::json j = nlohmann::json::parse(report_to_json(r1));
  CHECK(j["schema_version"] == 1);
  CHECK(j["context"]["field"] == "q-u");
  CHECK(j["context"]["sigma"] == "shift:1");
  CHECK(j["seed"] == 42);
  CHECK(j["precision"] == 32);
  CHECK(j["all_passed"] == true);
  CHECK(j["properties"].size() == 8);
  CHECK(j["span_certificates"].size() == 3);
  CHECK(j["span_certificates"][0]["target"] == "t^-1");
  CHECK(j["span_certificates"][0]["obstruction"] == true);
  CHECK(j["span_certificates"][0]["min_generator_valuation"] == 0);
  CHECK(j["span_certificates"][0]["target_valuation"] == -1);
}

TEST_CASE("bench reports one row per size with agreeing outputs") {
  BenchConfig config;
  config.sizes = {8, 32};
  config.trials = 2;

  const BenchReport report = run_bench(config);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.all_outputs_equal());
  for (const BenchRow& row : report.rows) {
    CHECK(row.mul_mean_ms > 0.0);
    CHECK(row.incremental_mean_ms > 0.0);
    CHECK(row.ratio > 0.0);
  }
  // Larger inputs take longer on any one machine (sanity, not a contract).
  CHECK(report.rows[1].mul_mean_ms >= report.rows[0].mul_mean_ms);

  const nlohmann::json j = nlohmann::json::parse(bench_to_json(report));
  CHECK(j["schema_version"] == 1);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["size"] == 8);
  CHECK(j["rows"][0]["outputs_equal"] == true);

  BenchConfig bad;
  bad.sizes = {};
  CHECK_THROWS_AS(run_bench(bad), std::invalid_argument);
  bad.sizes = {0};
  CHECK_THROWS_AS(run_bench(bad), std::invalid_argument);
  bad.sizes = {8};
  bad.trials = 0;
  CHECK_THROWS_AS(run_bench(bad), std::invalid_argument);
}
