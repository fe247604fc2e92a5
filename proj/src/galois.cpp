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

#include "skewlab/galois.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace skewlab {

namespace {

using Fp = std::uint64_t;
using FpPoly = std::vector<Fp>;  // low to high, trailing zeros trimmed

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp mod_inverse(Fp a, Fp p) {
  // Extended Euclid on integers; a != 0 mod p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  return static_cast<Fp>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b, Fp p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b, Fp p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, Fp p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  trim(r);
  return r;
}

// Remainder of a modulo monic-or-not divisor m (leading coefficient
// inverted mod p).
FpPoly poly_mod(FpPoly a, const FpPoly& m, Fp p) {
  if (m.empty()) throw std::domain_error("polynomial division by zero");
  const Fp lead_inv = mod_inverse(m.back(), p);
  while (a.size() >= m.size()) {
    Fp factor = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - m.size();
    if (factor != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[i + shift] = (a[i + shift] + p - (factor * m[i]) % p) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() < m.size()) break;
  }
  trim(a);
  return a;
}

FpPoly poly_gcd_fp(FpPoly a, FpPoly b, Fp p) {
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Fp inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = (c * inv) % p;
  }
  return a;
}

FpPoly poly_pow_mod(FpPoly base, const BigInt& e, const FpPoly& m, Fp p) {
  FpPoly acc{1};
  base = poly_mod(std::move(base), m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (std::size_t i = bits; i-- > 0;) {
    acc = poly_mod(poly_mul(acc, acc, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = poly_mod(poly_mul(acc, base, p), m, p);
  }
  return acc;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Rabin irreducibility test for a monic f of degree k over F_p:
// x^(p^k) == x mod f, and gcd(x^(p^(k/q)) - x, f) = 1 for every prime q | k.
bool is_irreducible(const FpPoly& f, Fp p) {
  const std::size_t k = f.size() - 1;
  const FpPoly x{0, 1};
  BigInt pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
  if (poly_pow_mod(x, pk, f, p) != poly_mod(x, f, p)) return false;
  std::size_t rem = k;
  for (std::size_t q = 2; q <= rem; ++q) {
    if (rem % q != 0) continue;
    while (rem % q == 0) rem /= q;
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(k / q));
    FpPoly diff = poly_sub(poly_pow_mod(x, e, f, p), poly_mod(x, f, p), p);
    if (poly_gcd_fp(diff, f, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const GaloisField> GaloisField::make(std::uint64_t p, std::uint32_t k,
                                                     std::vector<std::uint64_t> modulus) {
  if (p >= (1ull << 31)) throw std::invalid_argument("galois characteristic too large");
  if (!is_prime_u64(p)) throw std::invalid_argument("galois characteristic must be prime");
  if (k < 1) throw std::invalid_argument("galois extension degree must be >= 1");
  if (modulus.size() != static_cast<std::size_t>(k) + 1)
    throw std::invalid_argument("galois modulus must have degree k (k+1 coefficients)");
  for (auto& c : modulus) c %= p;
  if (modulus.back() == 0) throw std::invalid_argument("galois modulus must have degree k");
  if (modulus.back() != 1) {
    const Fp inv = mod_inverse(modulus.back(), p);
    for (auto& c : modulus) c = (c * inv) % p;
  }
  if (k > 1 && !is_irreducible(modulus, p))
    throw std::invalid_argument("galois modulus is reducible");
  return std::shared_ptr<const GaloisField>(new GaloisField(p, k, std::move(modulus)));
}

std::shared_ptr<const GaloisField> GaloisField::make(std::uint64_t p, std::uint32_t k) {
  if (p >= (1ull << 31)) throw std::invalid_argument("galois characteristic too large");
  if (!is_prime_u64(p)) throw std::invalid_argument("galois characteristic must be prime");
  if (k < 1) throw std::invalid_argument("galois extension degree must be >= 1");
  // Count through monic degree-k polynomials in lexicographic coefficient
  // order until one is irreducible.
  FpPoly f(static_cast<std::size_t>(k) + 1, 0);
  f.back() = 1;
  while (true) {
    if (k == 1 || is_irreducible(f, p)) {
      return std::shared_ptr<const GaloisField>(new GaloisField(p, k, f));
    }
    std::size_t i = 0;
    while (i < k && f[i] == p - 1) f[i++] = 0;
    if (i == k) throw std::invalid_argument("no irreducible modulus found");
    ++f[i];
  }
}

GaloisElement::GaloisElement(std::shared_ptr<const GaloisField> field,
                             std::vector<std::uint64_t> rep)
    : field_(std::move(field)), rep_(std::move(rep)) {
  trim(rep_);
}

GaloisElement GaloisField::zero() const { return GaloisElement(shared_from_this(), {}); }

GaloisElement GaloisField::one() const { return from_integer(1); }

GaloisElement GaloisField::generator() const {
  if (k_ == 1) throw std::domain_error("prime field has no extension generator");
  return GaloisElement(shared_from_this(), {0, 1});
}

GaloisElement GaloisField::from_integer(const BigInt& n) const {
  BigInt r = n % BigInt(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  std::uint64_t v = r.get_ui();
  return GaloisElement(shared_from_this(), v == 0 ? FpPoly{} : FpPoly{v});
}

GaloisElement GaloisField::from_rational(const BigRational& q) const {
  GaloisElement den = from_integer(q.get_den());
  if (den.is_zero()) throw std::domain_error("rational with denominator divisible by p");
  return from_integer(q.get_num()) * den.inv();
}

GaloisElement GaloisField::from_coeffs(std::vector<std::uint64_t> rep) const {
  for (auto& c : rep) c %= p_;
  FpPoly r = poly_mod(std::move(rep), modulus_, p_);
  return GaloisElement(shared_from_this(), std::move(r));
}

std::string GaloisField::to_string() const {
  std::ostringstream out;
  out << "F_" << p_;
  if (k_ > 1) out << "^" << k_;
  return out.str();
}

void GaloisElement::check_same_field(const GaloisElement& o) const {
  if (!field_ || !o.field_ || !(*field_ == *o.field_))
    throw std::invalid_argument("galois elements from different fields");
}

GaloisElement GaloisElement::operator-() const {
  FpPoly r = rep_;
  for (auto& c : r) c = (field_->p() - c) % field_->p();
  trim(r);
  return GaloisElement(field_, std::move(r));
}

GaloisElement GaloisElement::operator+(const GaloisElement& o) const {
  check_same_field(o);
  return GaloisElement(field_, poly_add(rep_, o.rep_, field_->p()));
}

GaloisElement GaloisElement::operator-(const GaloisElement& o) const {
  check_same_field(o);
  return GaloisElement(field_, poly_sub(rep_, o.rep_, field_->p()));
}

GaloisElement GaloisElement::operator*(const GaloisElement& o) const {
  check_same_field(o);
  return GaloisElement(field_,
                       poly_mod(poly_mul(rep_, o.rep_, field_->p()), field_->modulus(), field_->p()));
}

GaloisElement GaloisElement::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero galois element");
  const Fp p = field_->p();
  // Extended Euclid in F_p[w]: r0 = modulus, r1 = rep; track s only.
  FpPoly r0 = field_->modulus(), r1 = rep_;
  FpPoly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // Divide r0 by r1.
    const Fp lead_inv = mod_inverse(r1.back(), p);
    FpPoly q;
    FpPoly rem = r0;
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size()) {
      Fp factor = (rem.back() * lead_inv) % p;
      std::size_t shift = rem.size() - r1.size();
      q[shift] = factor;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[i + shift] = (rem[i + shift] + p - (factor * r1[i]) % p) % p;
      trim(rem);
      if (rem.empty()) break;
    }
    FpPoly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd(modulus, rep), a nonzero constant since the modulus is
  // irreducible and rep is nonzero of smaller degree.
  const Fp scale = mod_inverse(r0.back(), p);
  for (auto& c : s0) c = (c * scale) % p;
  trim(s0);
  return GaloisElement(field_, poly_mod(std::move(s0), field_->modulus(), p));
}

GaloisElement GaloisElement::pow(const BigInt& e) const {
  if (e < 0) throw std::domain_error("negative exponent in galois pow");
  return GaloisElement(field_, poly_pow_mod(rep_, e, field_->modulus(), field_->p()));
}

GaloisElement GaloisElement::frobenius() const {
  return pow(BigInt(static_cast<unsigned long>(field_->p())));
}

GaloisElement GaloisElement::frobenius_power(std::uint32_t m) const {
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), field_->p(), m);
  return pow(e);
}

bool GaloisElement::operator==(const GaloisElement& o) const {
  if (!field_ || !o.field_) return rep_ == o.rep_ && !field_ == !o.field_;
  return *field_ == *o.field_ && rep_ == o.rep_;
}

std::string GaloisElement::to_string(const std::string& var) const {
  if (rep_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = rep_.size(); d-- > 0;) {
    if (rep_[d] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (d == 0) {
      out << rep_[d];
    } else {
      if (rep_[d] != 1) out << rep_[d] << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

}  // namespace skewlab
