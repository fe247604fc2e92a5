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

#include "skewlab/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewlab {

namespace {

// True when the coefficient's printed form needs parentheses before `*t^k`,
// i.e. when it is a top-level sum.
bool coeff_needs_parens(const FieldValue& v) {
  switch (v.kind()) {
    case FieldKind::Rationals:
      return false;
    case FieldKind::RationalFunctions: {
      const RationalFunction& f = v.rational_function();
      if (!f.den().is_one()) return false;  // printed as num/den, binds fine
      int terms = 0;
      for (const auto& c : f.num().coeffs())
        if (c != 0) ++terms;
      return terms > 1;
    }
    case FieldKind::Galois: {
      int terms = 0;
      for (auto c : v.galois().rep())
        if (c != 0) ++terms;
      return terms > 1;
    }
  }
  return false;
}

}  // namespace

SkewSeries SkewSeries::zero(ContextPtr ctx, long precision) {
  return SkewSeries(std::move(ctx), 0, {}, precision);
}

SkewSeries SkewSeries::one(ContextPtr ctx, long precision) {
  // With precision <= 0 the constant term is already beyond the cutoff.
  if (precision <= 0) return zero(std::move(ctx), precision);
  FieldValue c = ctx->one();
  return monomial(std::move(ctx), std::move(c), 0, precision);
}

SkewSeries SkewSeries::constant(ContextPtr ctx, FieldValue c, long precision) {
  return monomial(std::move(ctx), std::move(c), 0, precision);
}

SkewSeries SkewSeries::monomial(ContextPtr ctx, FieldValue c, long e, long precision) {
  return from_terms(std::move(ctx), {{e, std::move(c)}}, precision);
}

SkewSeries SkewSeries::from_terms(ContextPtr ctx,
                                  std::vector<std::pair<long, FieldValue>> terms,
                                  long precision) {
  std::vector<long> exps;
  exps.reserve(terms.size());
  long lead = precision;
  for (const auto& [e, c] : terms) {
    if (e >= precision) throw std::invalid_argument("term exponent at or beyond precision");
    exps.push_back(e);
    if (!c.is_zero()) lead = std::min(lead, e);
  }
  std::sort(exps.begin(), exps.end());
  if (std::adjacent_find(exps.begin(), exps.end()) != exps.end())
    throw std::invalid_argument("duplicate exponent in terms");
  if (lead == precision) return zero(std::move(ctx), precision);
  std::vector<FieldValue> coeffs(static_cast<std::size_t>(precision - lead), ctx->zero());
  for (auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    coeffs[static_cast<std::size_t>(e - lead)] = std::move(c);
  }
  return SkewSeries(std::move(ctx), lead, std::move(coeffs), precision);
}

std::optional<long> SkewSeries::valuation() const {
  if (is_zero()) return std::nullopt;
  return lead_;
}

const FieldValue& SkewSeries::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero series");
  return coeffs_.front();
}

FieldValue SkewSeries::coeff(long e) const {
  if (e >= precision_) throw std::invalid_argument("coefficient beyond precision");
  if (is_zero() || e < lead_) return ctx_->zero();
  return coeffs_[static_cast<std::size_t>(e - lead_)];
}

void SkewSeries::check_same_context(const SkewSeries& o) const {
  if (*ctx_ != *o.ctx_) throw std::invalid_argument("series from different skew contexts");
}

void SkewSeries::normalize() {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip].is_zero()) ++skip;
  if (skip == coeffs_.size()) {
    coeffs_.clear();
    lead_ = 0;
    return;
  }
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<long>(skip);
  }
}

SkewSeries SkewSeries::negate() const {
  SkewSeries r(*this);
  for (auto& c : r.coeffs_) c = field_neg(c);
  return r;
}

SkewSeries SkewSeries::add(const SkewSeries& o) const {
  check_same_context(o);
  const long prec = std::min(precision_, o.precision_);
  long lead = prec;
  if (!is_zero()) lead = std::min(lead, lead_);
  if (!o.is_zero()) lead = std::min(lead, o.lead_);
  if (lead >= prec) return zero(ctx_, prec);
  SkewSeries r(ctx_, lead, std::vector<FieldValue>(static_cast<std::size_t>(prec - lead), ctx_->zero()), prec);
  if (!is_zero()) {
    for (long e = lead_; e < std::min(precision_, prec); ++e)
      r.coeffs_[static_cast<std::size_t>(e - lead)] = coeffs_[static_cast<std::size_t>(e - lead_)];
  }
  if (!o.is_zero()) {
    for (long e = o.lead_; e < std::min(o.precision_, prec); ++e) {
      FieldValue& slot = r.coeffs_[static_cast<std::size_t>(e - lead)];
      slot = field_add(slot, o.coeffs_[static_cast<std::size_t>(e - o.lead_)]);
    }
  }
  r.normalize();
  return r;
}

SkewSeries SkewSeries::scaled(const FieldValue& c) const {
  if (c.is_zero()) return zero(ctx_, precision_);
  SkewSeries r(*this);
  for (auto& x : r.coeffs_) x = field_mul(c, x);
  r.normalize();
  return r;
}

SkewSeries SkewSeries::mul(const SkewSeries& o) const {
  check_same_context(o);
  if (is_zero() || o.is_zero()) {
    const long px = is_zero() ? precision_ : lead_;
    const long py = o.is_zero() ? o.precision_ : o.lead_;
    return zero(ctx_, px + py);
  }
  const long m = lead_, n = o.lead_;
  const long prec = std::min(precision_ + n, o.precision_ + m);
  const long lead = m + n;
  const Automorphism& sigma = ctx_->sigma();
  std::vector<FieldValue> out(static_cast<std::size_t>(prec - lead), ctx_->zero());
  for (long r = lead; r < prec; ++r) {
    FieldValue acc = ctx_->zero();
    const long i_lo = std::max(m, r - (o.precision_ - 1));
    const long i_hi = std::min(precision_ - 1, r - n);
    for (long i = i_lo; i <= i_hi; ++i) {
      const FieldValue& a = coeffs_[static_cast<std::size_t>(i - m)];
      if (a.is_zero()) continue;
      const FieldValue& b = o.coeffs_[static_cast<std::size_t>(r - i - n)];
      if (b.is_zero()) continue;
      acc = field_add(acc, field_mul(a, sigma.apply_power(i, b)));
    }
    out[static_cast<std::size_t>(r - lead)] = std::move(acc);
  }
  SkewSeries r(ctx_, lead, std::move(out), prec);
  r.normalize();  // the lead cell a_m sigma^m(b_n) is nonzero in a field
  return r;
}

SkewSeries SkewSeries::mul_incremental(const SkewSeries& o) const {
  check_same_context(o);
  if (is_zero() || o.is_zero()) {
    const long px = is_zero() ? precision_ : lead_;
    const long py = o.is_zero() ? o.precision_ : o.lead_;
    return zero(ctx_, px + py);
  }
  const long m = lead_, n = o.lead_;
  const long prec = std::min(precision_ + n, o.precision_ + m);
  const long lead = m + n;
  const Automorphism& sigma = ctx_->sigma();
  std::vector<FieldValue> out(static_cast<std::size_t>(prec - lead), ctx_->zero());
  // twisted[j] tracks sigma^i(b_{n+j}) across rows; row m seeds it with the
  // closed form, every later row applies sigma exactly once per entry.
  std::vector<FieldValue> twisted(o.coeffs_.size());
  for (long i = m; i < precision_; ++i) {
    if (i == m) {
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        twisted[j] = sigma.apply_power(m, o.coeffs_[j]);
    } else {
      for (auto& t : twisted) t = sigma.apply(t);
    }
    const FieldValue& a = coeffs_[static_cast<std::size_t>(i - m)];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      const long r = i + n + static_cast<long>(j);
      if (r >= prec) break;
      if (twisted[j].is_zero()) continue;
      FieldValue& slot = out[static_cast<std::size_t>(r - lead)];
      slot = field_add(slot, field_mul(a, twisted[j]));
    }
  }
  SkewSeries r(ctx_, lead, std::move(out), prec);
  r.normalize();
  return r;
}

SkewSeries SkewSeries::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero series");
  const long n = lead_;
  const long prec = precision_ - 2 * n;  // guaranteed absolute precision
  const long lead = -n;
  const Automorphism& sigma = ctx_->sigma();
  const FieldValue lead_inv = field_inv(coeffs_.front());
  std::vector<FieldValue> b(static_cast<std::size_t>(prec - lead), ctx_->zero());
  b[0] = sigma.apply_power(-n, lead_inv);
  // Coefficient b_{s-n} kills the convolution coefficient of t^s, s >= 1:
  //   a_n sigma^n(b_{s-n}) = - sum_{i>n} a_i sigma^i(b_{s-i})
  for (long s = 1; s < prec + n; ++s) {
    FieldValue acc = ctx_->zero();
    const long i_hi = std::min(precision_ - 1, s + n);
    for (long i = n + 1; i <= i_hi; ++i) {
      const FieldValue& a = coeffs_[static_cast<std::size_t>(i - n)];
      if (a.is_zero()) continue;
      const FieldValue& bj = b[static_cast<std::size_t>(s - i + n)];  // j = s - i
      if (bj.is_zero()) continue;
      acc = field_add(acc, field_mul(a, sigma.apply_power(i, bj)));
    }
    if (!acc.is_zero())
      b[static_cast<std::size_t>(s)] = sigma.apply_power(-n, field_mul(lead_inv, field_neg(acc)));
  }
  return SkewSeries(ctx_, lead, std::move(b), prec);
}

SkewSeries SkewSeries::pow(long k) const {
  if (k == 0) return one(ctx_, precision_);
  if (k < 0) {
    if (is_zero()) throw std::domain_error("negative power of the zero series");
    return inverse().pow(-k);
  }
  SkewSeries r(*this);
  for (long i = 1; i < k; ++i) r = r.mul(*this);
  return r;
}

SkewSeries SkewSeries::truncated(long new_precision) const {
  if (new_precision > precision_)
    throw std::invalid_argument("truncation cannot raise precision");
  if (is_zero() || lead_ >= new_precision) return zero(ctx_, new_precision);
  SkewSeries r(*this);
  r.precision_ = new_precision;
  r.coeffs_.resize(static_cast<std::size_t>(new_precision - lead_));
  return r;
}

bool SkewSeries::equals_to_precision(const SkewSeries& o) const {
  check_same_context(o);
  const long prec = std::min(precision_, o.precision_);
  long lo = prec;
  if (!is_zero()) lo = std::min(lo, lead_);
  if (!o.is_zero()) lo = std::min(lo, o.lead_);
  for (long e = lo; e < prec; ++e) {
    if (coeff(e) != o.coeff(e)) return false;
  }
  return true;
}

bool SkewSeries::operator==(const SkewSeries& o) const {
  if (*ctx_ != *o.ctx_) return false;
  if (precision_ != o.precision_ || coeffs_.size() != o.coeffs_.size()) return false;
  if (!is_zero() && lead_ != o.lead_) return false;
  return coeffs_ == o.coeffs_;
}

std::string SkewSeries::to_string() const {
  std::ostringstream out;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (coeffs_[idx].is_zero()) continue;
    const long e = lead_ + static_cast<long>(idx);
    const std::string c = coeffs_[idx].to_string();
    out << (coeff_needs_parens(coeffs_[idx]) ? "(" + c + ")" : c);
    out << "*t";
    if (e != 1) out << "^" << e;
    out << " + ";
  }
  out << "O(t^" << precision_ << ")";
  return out.str();
}

}  // namespace skewlab
