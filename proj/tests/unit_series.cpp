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

#include <stdexcept>
#include <vector>

#include "skewlab/context.hpp"
#include "skewlab/random_series.hpp"
#include "skewlab/series.hpp"

using namespace skewlab;

namespace {

ContextPtr shift_ctx() {
  static ContextPtr ctx =
      SkewContext::rational_functions(Automorphism::shift(BigRational(1)));
  return ctx;
}

ContextPtr frob_ctx() {
  static ContextPtr ctx =
      SkewContext::galois(GaloisField::make(2, 2, {1, 1, 1}), Automorphism::frobenius());
  return ctx;
}

Polynomial poly(std::vector<long> coeffs) {
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

FieldValue rf(std::vector<long> num, std::vector<long> den = {1}) {
  return FieldValue(RationalFunction(poly(std::move(num)), poly(std::move(den))));
}

}  // namespace

TEST_CASE("from_terms canonicalizes") {
  auto ctx = shift_ctx();
  SkewSeries one = SkewSeries::from_terms(ctx, {{0, ctx->one()}}, 32);
  CHECK(one.valuation() == 0);
  CHECK(one.leading_coeff() == ctx->one());
  CHECK(one.precision() == 32);

  SkewSeries s = SkewSeries::from_terms(
      ctx, {{-2, ctx->from_integer(3)}, {1, ctx->one()}}, 32);
  CHECK(s.valuation() == -2);

  SkewSeries z = SkewSeries::from_terms(ctx, {{5, ctx->zero()}}, 32);
  CHECK(z.is_zero());
  CHECK(z.precision() == 32);
  CHECK(!z.valuation().has_value());

  CHECK_THROWS_AS(SkewSeries::from_terms(ctx, {{32, ctx->one()}}, 32),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      SkewSeries::from_terms(ctx, {{3, ctx->one()}, {3, ctx->one()}}, 32),
      std::invalid_argument);
}

TEST_CASE("addition is componentwise with cancellation") {
  auto ctx = shift_ctx();
  SkewSeries one_plus_t =
      SkewSeries::from_terms(ctx, {{0, ctx->one()}, {1, ctx->one()}}, 32);
  SkewSeries minus_one = SkewSeries::constant(ctx, ctx->from_integer(-1), 32);
  SkewSeries t = SkewSeries::monomial(ctx, ctx->one(), 1, 32);

  CHECK(one_plus_t.add(minus_one) == t);  // cancellation raises the lead

  SkewSeries sum = one_plus_t.add(one_plus_t.negate());
  CHECK(sum.is_zero());
  CHECK(sum.precision() == 32);

  SkewSeries low = SkewSeries::monomial(ctx, ctx->from_integer(3), -2, 32);
  CHECK(low.add(t).valuation() == -2);

  // Precision is the min of the operands'.
  CHECK(low.add(t.truncated(10)).precision() == 10);

  SkewSeries other_field = SkewSeries::one(frob_ctx(), 32);
  CHECK_THROWS_AS(one_plus_t.add(other_field), std::invalid_argument);
}

TEST_CASE("twisted multiplication moves coefficients through sigma") {
  auto ctx = shift_ctx();
  SkewSeries t = SkewSeries::monomial(ctx, ctx->one(), 1, 32);
  SkewSeries u = SkewSeries::constant(ctx, ctx->generator(), 32);

  // t*u = sigma(u)*t = (u+1)*t.
  CHECK(t.mul(u) == SkewSeries::monomial(ctx, rf({1, 1}), 1, 32));

  // (u*t)^2 = u*sigma(u)*t^2 = u(u+1)*t^2, precision 33 = min(32+1, 32+1).
  SkewSeries ut = SkewSeries::monomial(ctx, ctx->generator(), 1, 32);
  CHECK(ut.mul(ut) == SkewSeries::monomial(ctx, rf({0, 1, 1}), 2, 33));

  // Noncommutativity witness: u*t has coefficient u, t*u has u+1.
  CHECK(t.mul(u) != u.mul(t));
  CHECK(u.mul(t).leading_coeff() == ctx->generator());
  CHECK(t.mul(u).leading_coeff() == rf({1, 1}));

  // 1 is a two-sided identity up to precision.
  SkewSeries one = SkewSeries::one(ctx, 32);
  SkewSeries x = SkewSeries::from_terms(
      ctx, {{-2, ctx->from_integer(3)}, {0, ctx->generator()}}, 32);
  CHECK(one.mul(x).equals_to_precision(x));
  CHECK(x.mul(one).equals_to_precision(x));
  SkewSeries lead0 =
      SkewSeries::from_terms(ctx, {{0, ctx->generator()}, {2, ctx->one()}}, 32);
  CHECK(one.mul(lead0) == lead0);  // lead 0: precision survives exactly

  CHECK_THROWS_AS(t.mul(SkewSeries::one(frob_ctx(), 32)), std::invalid_argument);
}

TEST_CASE("multiplication precision follows min(Px + lead y, Py + lead x)") {
  auto ctx = shift_ctx();
  SkewSeries x = SkewSeries::monomial(ctx, ctx->from_integer(3), -2, 32);
  SkewSeries t = SkewSeries::monomial(ctx, ctx->one(), 1, 32);
  SkewSeries p = x.mul(t);
  CHECK(p.precision() == 30);  // min(32 + 1, 32 - 2)
  CHECK(p.valuation() == -1);

  SkewSeries q = t.mul(x);
  CHECK(q.precision() == 30);
  CHECK(q.leading_coeff() == ctx->from_integer(3));  // sigma fixes constants
}

TEST_CASE("frobenius context multiplication") {
  auto ctx = frob_ctx();
  auto f4 = ctx->galois_field();
  FieldValue w(f4->generator());
  FieldValue w1(f4->generator() + f4->one());

  SkewSeries t = SkewSeries::monomial(ctx, ctx->one(), 1, 32);
  SkewSeries ws = SkewSeries::constant(ctx, w, 32);

  // t*w = w^2*t = (w+1)*t.
  CHECK(t.mul(ws) == SkewSeries::monomial(ctx, w1, 1, 32));

  // (w*t)^2 = w*sigma(w)*t^2 = w(w+1)t^2 = t^2 since w^2+w = 1 in F_4.
  SkewSeries wt = SkewSeries::monomial(ctx, w, 1, 32);
  CHECK(wt.mul(wt) == SkewSeries::monomial(ctx, ctx->one(), 2, 33));

  // t^2 commutes with w (sigma has order 2).
  SkewSeries t2 = t.mul(t);
  CHECK(t2.mul(ws).equals_to_precision(ws.mul(t2)));
}

TEST_CASE("mul_incremental is structurally identical to mul") {
  auto qu = shift_ctx();
  SkewSeries t = SkewSeries::monomial(qu, qu->one(), 1, 32);
  SkewSeries u = SkewSeries::constant(qu, qu->generator(), 32);
  CHECK(t.mul_incremental(u) == t.mul(u));

  SeriesProfile profile;
  profile.precision = 64;
  for (ContextPtr ctx : {shift_ctx(), frob_ctx()}) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      SkewSeries x = random_series(ctx, derive_seed(7, 0, i), profile);
      SkewSeries y = random_series(ctx, derive_seed(7, 1, i), profile);
      REQUIRE(x.mul_incremental(y) == x.mul(y));
    }
  }
}

TEST_CASE("valuation reads the lead exponent") {
  auto ctx = shift_ctx();
  SkewSeries s = SkewSeries::from_terms(
      ctx, {{-2, ctx->from_integer(3)}, {1, ctx->one()}}, 32);
  CHECK(s.valuation() == -2);
  CHECK(SkewSeries::one(ctx).valuation() == 0);
  CHECK(!SkewSeries::zero(ctx).valuation().has_value());
}

TEST_CASE("inverse of one minus t is the geometric series") {
  auto ctx = shift_ctx();
  SkewSeries x = SkewSeries::from_terms(
      ctx, {{0, ctx->one()}, {1, ctx->from_integer(-1)}}, 32);
  SkewSeries inv = x.inverse();
  CHECK(inv.precision() == 32);  // lead 0: no precision loss
  std::vector<std::pair<long, FieldValue>> ones;
  for (long e = 0; e < 32; ++e) ones.emplace_back(e, ctx->one());
  CHECK(inv == SkewSeries::from_terms(ctx, ones, 32));
  CHECK(x.mul(inv).equals_to_precision(SkewSeries::one(ctx)));
}

TEST_CASE("inverse twists the leading coefficient through sigma^-n") {
  auto ctx = shift_ctx();
  SkewSeries ut = SkewSeries::monomial(ctx, ctx->generator(), 1, 32);
  // inverse(u*t) = (1/(u-1))*t^-1: check (u*t)*(1/(u-1)*t^-1) = u*(1/u) = 1.
  SkewSeries inv = ut.inverse();
  CHECK(inv.precision() == 30);  // P - 2n = 32 - 2
  CHECK(inv == SkewSeries::monomial(ctx, rf({1}, {-1, 1}), -1, 30));
  CHECK(ut.mul(inv).equals_to_precision(SkewSeries::one(ctx)));
  CHECK(inv.mul(ut).equals_to_precision(SkewSeries::one(ctx)));

  SkewSeries t = SkewSeries::monomial(ctx, ctx->one(), 1, 32);
  CHECK(t.inverse() == SkewSeries::monomial(ctx, ctx->one(), -1, 30));

  CHECK_THROWS_AS(SkewSeries::zero(ctx).inverse(), std::domain_error);
}

TEST_CASE("inverses stay two-sided on random series") {
  SeriesProfile profile;
  for (ContextPtr ctx : {shift_ctx(), frob_ctx()}) {
    SkewSeries one = SkewSeries::one(ctx);
    for (std::uint64_t i = 0; i < 25; ++i) {
      SkewSeries x = random_series(ctx, derive_seed(11, 0, i), profile);
      SkewSeries inv = x.inverse();
      REQUIRE(x.mul(inv).equals_to_precision(one));
      REQUIRE(inv.mul(x).equals_to_precision(one));
    }
  }
}

TEST_CASE("integer powers") {
  auto ctx = shift_ctx();
  SkewSeries t = SkewSeries::monomial(ctx, ctx->one(), 1, 32);
  // Sequential products grow precision: t^2 at 33, t^3 at 34.
  CHECK(t.pow(3) == SkewSeries::monomial(ctx, ctx->one(), 3, 34));
  CHECK(t.pow(-1) == SkewSeries::monomial(ctx, ctx->one(), -1, 30));
  CHECK(t.pow(0) == SkewSeries::one(ctx, 32));

  SkewSeries one_plus_t =
      SkewSeries::from_terms(ctx, {{0, ctx->one()}, {1, ctx->one()}}, 32);
  CHECK(one_plus_t.pow(2) ==
        SkewSeries::from_terms(
            ctx, {{0, ctx->one()}, {1, ctx->from_integer(2)}, {2, ctx->one()}}, 32));

  CHECK_THROWS_AS(SkewSeries::zero(ctx).pow(-2), std::domain_error);
  CHECK(SkewSeries::zero(ctx).pow(0) == SkewSeries::one(ctx));
}

TEST_CASE("truncation and comparison") {
  auto ctx = shift_ctx();
  SkewSeries s = SkewSeries::from_terms(
      ctx, {{0, ctx->one()}, {1, ctx->one()}, {2, ctx->one()}}, 32);
  SkewSeries cut = s.truncated(2);
  CHECK(cut == SkewSeries::from_terms(ctx, {{0, ctx->one()}, {1, ctx->one()}}, 2));
  CHECK_THROWS_AS(s.truncated(40), std::invalid_argument);

  // A difference beyond the comparison precision is invisible.
  SkewSeries far = SkewSeries::from_terms(ctx, {{0, ctx->one()}, {40, ctx->one()}}, 64);
  CHECK(far.equals_to_precision(SkewSeries::one(ctx, 32)));

  SkewSeries low = SkewSeries::from_terms(
      ctx, {{-2, ctx->from_integer(3)}, {1, ctx->one()}}, 32);
  CHECK(low.leading_coeff() == ctx->from_integer(3));
  CHECK_THROWS_AS(SkewSeries::zero(ctx).leading_coeff(), std::domain_error);
}

TEST_CASE("textual form") {
  auto ctx = shift_ctx();
  SkewSeries s = SkewSeries::from_terms(
      ctx, {{-2, ctx->from_integer(3)}, {0, rf({1, 1}, {0, 1})}}, 32);
  CHECK(s.to_string() == "3*t^-2 + (u+1)/u*t^0 + O(t^32)");

  SkewSeries t = SkewSeries::monomial(ctx, ctx->one(), 1, 32);
  SkewSeries u = SkewSeries::constant(ctx, ctx->generator(), 32);
  CHECK(t.mul(u).to_string() == "(u+1)*t + O(t^32)");

  CHECK(SkewSeries::zero(ctx).to_string() == "O(t^32)");

  auto gf = frob_ctx();
  SkewSeries wt = SkewSeries::monomial(gf, FieldValue(gf->galois_field()->generator()), 1, 32);
  CHECK(wt.to_string() == "w*t + O(t^32)");
}
