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

#include "skewlab/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace skewlab {

namespace {
const BigRational kZero(0);
}  // namespace

Polynomial::Polynomial(BigRational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::monomial(BigRational c, std::size_t d) {
  if (c == 0) return Polynomial();
  Polynomial p;
  p.coeffs_.assign(d + 1, kZero);
  p.coeffs_[d] = std::move(c);
  return p;
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const BigRational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

const BigRational& Polynomial::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : kZero;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  r.normalize();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  r.normalize();
  return r;
}

namespace {

// Denominator-cleared view: p == zpoly / den exactly.
struct ClearedPoly {
  std::vector<BigInt> coeffs;
  BigInt den;
};

ClearedPoly clear_denominators(const std::vector<BigRational>& coeffs) {
  ClearedPoly out;
  out.den = 1;
  for (const auto& c : coeffs)
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.get_den_mpz_t());
  out.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), out.den.get_mpz_t(), c.get_den_mpz_t());
    out.coeffs.push_back(BigInt(c.get_num() * factor));
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  // Schoolbook over Z: mpq arithmetic canonicalizes (runs integer gcds) on
  // every operation, so clear denominators once and restore at the end.
  ClearedPoly a = clear_denominators(coeffs_);
  ClearedPoly b = clear_denominators(o.coeffs_);
  std::vector<BigInt> prod(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  const BigInt den = a.den * b.den;
  Polynomial r;
  r.coeffs_.reserve(prod.size());
  for (auto& c : prod) r.coeffs_.push_back(make_rational(std::move(c), den));
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  if (c == 0) return Polynomial();
  Polynomial r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem(*this);
  Polynomial quot;
  const long dd = divisor.degree();
  if (rem.degree() >= dd) quot.coeffs_.assign(rem.degree() - dd + 1, kZero);
  const BigRational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const long shift = rem.degree() - dd;
    BigRational factor = rem.leading() / lead;
    quot.coeffs_[shift] = factor;
    // rem -= factor * u^shift * divisor; the leading term cancels exactly.
    for (long i = 0; i <= dd; ++i) {
      if (divisor.coeffs_[i] == 0) continue;
      rem.coeffs_[i + shift] -= factor * divisor.coeffs_[i];
    }
    rem.normalize();
  }
  quot.normalize();
  return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return Polynomial();
  if (leading() == 1) return *this;
  Polynomial r(*this);
  const BigRational inv = BigRational(1) / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Polynomial Polynomial::compose_linear(const BigRational& a, const BigRational& b) const {
  if (coeffs_.size() <= 1) return *this;  // constants are fixed points

  // Pure scaling p(a*u): coefficient k picks up a^k; no Horner needed.
  if (b == 0) {
    Polynomial r(*this);
    BigRational power(1);
    for (std::size_t k = 1; k < r.coeffs_.size(); ++k) {
      power *= a;
      if (r.coeffs_[k] != 0) r.coeffs_[k] *= power;
    }
    return r;
  }

  // Pure translation p(u + b) with integer b — the hot path, since shift
  // powers are sigma^i: u -> u + i*c. Taylor shift by integer Horner over Z.
  if (a == 1 && b.get_den() == 1) {
    ClearedPoly p = clear_denominators(coeffs_);
    const BigInt& shift = b.get_num();
    std::vector<BigInt> acc;
    acc.reserve(p.coeffs.size());
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
      // acc = acc*(u + shift) + c.
      acc.push_back(BigInt(0));
      for (std::size_t i = acc.size() - 1; i > 0; --i) {
        acc[i] += acc[i - 1];
        acc[i - 1] *= shift;
      }
      acc[0] += *it;
    }
    Polynomial r;
    r.coeffs_.reserve(acc.size());
    for (auto& c : acc) r.coeffs_.push_back(make_rational(std::move(c), p.den));
    r.normalize();
    return r;
  }

  // General rational a, b: Horner over Q (cold path).
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    // acc = acc * (a*u + b) + c
    if (!acc.is_zero()) {
      Polynomial shifted;
      shifted.coeffs_.assign(acc.coeffs_.size() + 1, kZero);
      for (std::size_t i = 0; i < acc.coeffs_.size(); ++i) {
        shifted.coeffs_[i + 1] = acc.coeffs_[i] * a;
        shifted.coeffs_[i] += acc.coeffs_[i] * b;
      }
      shifted.normalize();
      acc = std::move(shifted);
    }
    if (*it != 0) acc = acc + Polynomial(*it);
  }
  return acc;
}

BigRational Polynomial::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long d = degree(); d >= 0; --d) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    BigRational abs = c < 0 ? BigRational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (d == 0) {
      out << abs.get_str();
    } else {
      if (abs != 1) out << abs.get_str() << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

namespace {

// Integer-polynomial helpers for the subresultant gcd. Coefficients are
// low-to-high with a nonzero back, like Polynomial.
using ZPoly = std::vector<BigInt>;

void z_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long z_degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

// Primitive part in place; returns true if p was nonzero. The leading
// coefficient is made positive so primitive parts are unique.
void z_make_primitive(ZPoly& p) {
  if (p.empty()) return;
  BigInt g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators: the primitive integer polynomial proportional to q.
ZPoly z_from_rational(const Polynomial& q) {
  BigInt lcm(1);
  for (const auto& c : q.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  ZPoly p;
  p.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) {
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    p.push_back(BigInt(c.get_num() * factor));
  }
  z_trim(p);
  z_make_primitive(p);
  return p;
}

// ---- Modular gcd machinery (Brown's algorithm) -----------------------------
//
// The gcd degree over Q is bounded by the gcd degree of any reduction mod p
// that keeps both leading coefficients nonzero. Word-size Euclid images are
// orders of magnitude cheaper than the subresultant PRS, so the gcd is
// assembled from images by CRT and confirmed with one exact trial division.

using FpPoly = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin, valid for n < 2^32 (bases 2, 7, 61).
bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 61ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t base : {2ull, 7ull, 61ull}) {
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = x * x % n;
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

// 31-bit primes (products fit comfortably in 64 bits), largest first.
const std::vector<std::uint64_t>& gcd_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t n = 2147483647ull; v.size() < 32; n -= 2) {
      if (is_prime_u32(n)) v.push_back(n);
    }
    return v;
  }();
  return primes;
}

// Monic gcd image of (a, b) mod p; nullopt when p kills a leading
// coefficient (such a prime carries no degree information).
std::optional<FpPoly> z_gcd_image_mod_p(const ZPoly& a, const ZPoly& b,
                                        std::uint64_t p) {
  if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 ||
      mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) {
    return std::nullopt;
  }
  FpPoly x(a.size()), y(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) x[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  for (std::size_t i = 0; i < b.size(); ++i) y[i] = mpz_fdiv_ui(b[i].get_mpz_t(), p);
  auto trim = [](FpPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!y.empty()) {
    // x mod y in F_p.
    const std::uint64_t inv_lead = pow_mod(y.back(), p - 2, p);
    while (x.size() >= y.size()) {
      const std::uint64_t f = x.back() * inv_lead % p;
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) {
        x[i + shift] = (x[i + shift] + p - f * y[i] % p) % p;
      }
      // The leading term cancels by construction; drop it and any new zeros.
      trim(x);
    }
    std::swap(x, y);
  }
  const std::uint64_t inv_lead = pow_mod(x.back(), p - 2, p);
  for (auto& c : x) c = c * inv_lead % p;
  return x;
}

// Incremental CRT with symmetric residues: on return cand is congruent to
// image mod p and to its old self mod modulus, coefficients in
// (-modulus*p/2, modulus*p/2].
void crt_lift(ZPoly& cand, BigInt& modulus, const FpPoly& image, std::uint64_t p) {
  const std::uint64_t m_inv =
      pow_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
  const BigInt new_modulus = modulus * BigInt(static_cast<unsigned long>(p));
  const BigInt half = new_modulus / 2;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const std::uint64_t c_mod_p = mpz_fdiv_ui(cand[i].get_mpz_t(), p);
    std::uint64_t delta = (image[i] + p - c_mod_p) % p * m_inv % p;
    cand[i] += modulus * BigInt(static_cast<unsigned long>(delta));
    if (cand[i] > half) cand[i] -= new_modulus;
  }
  modulus = new_modulus;
}

// Exact-division test over Z. For primitive operands this decides
// divisibility over Q as well (Gauss's lemma).
bool z_divides(const ZPoly& g, ZPoly a) {
  const BigInt& lead = g.back();
  while (a.size() >= g.size()) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.back().get_mpz_t(), lead.get_mpz_t());
    if (r != 0) return false;
    const std::size_t shift = a.size() - g.size();
    for (std::size_t i = 0; i + 1 < g.size(); ++i) a[i + shift] -= q * g[i];
    a.pop_back();  // the top term cancelled exactly
    z_trim(a);
  }
  return a.empty();
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
ZPoly z_prem(ZPoly a, const ZPoly& b) {
  const long db = z_degree(b);
  long e = z_degree(a) - db + 1;
  const BigInt& c = b.back();
  while (!a.empty() && z_degree(a) >= db) {
    const long shift = z_degree(a) - db;
    BigInt lead = a.back();
    for (auto& x : a) x *= c;
    for (long i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= lead * b[static_cast<std::size_t>(i)];
    z_trim(a);
    --e;
  }
  // Pad the skipped scalings so the result is exactly lc(b)^(d+1) * a mod b.
  if (e > 0) {
    BigInt pad;
    mpz_pow_ui(pad.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : a) x *= pad;
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(Polynomial a0, Polynomial b0) {
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  // Nonzero constants are units, so any constant operand forces gcd 1.
  if (a0.is_constant() || b0.is_constant()) return Polynomial::one();

  // Monic Euclid over Q swells coefficients exponentially, so run the
  // subresultant PRS on primitive integer polynomials instead.
  ZPoly a = z_from_rational(a0);
  ZPoly b = z_from_rational(b0);
  if (z_degree(a) < z_degree(b)) std::swap(a, b);

  // Brown's modular gcd: monic images mod word-size primes, scaled to the
  // leading-coefficient gcd, CRT-combined until the candidate stabilizes,
  // then confirmed with one exact trial division. Primes whose image degree
  // exceeds the best seen are unlucky and skipped; a smaller degree restarts.
  const BigInt lead_gcd = gcd(a.back(), b.back());
  ZPoly cand;
  BigInt modulus(0);
  long best_deg = -1;
  for (std::uint64_t p : gcd_primes()) {
    const std::optional<FpPoly> image_opt = z_gcd_image_mod_p(a, b, p);
    if (!image_opt) continue;
    FpPoly image = *image_opt;
    // A constant image proves coprimality outright (the common case here:
    // denominator checks and cross-cancellations mostly hit coprime pairs).
    if (image.size() == 1) return Polynomial::one();
    const long deg = static_cast<long>(image.size()) - 1;
    if (best_deg >= 0 && deg > best_deg) continue;
    const std::uint64_t scale = mpz_fdiv_ui(lead_gcd.get_mpz_t(), p);
    for (auto& c : image) c = c * scale % p;
    if (best_deg < 0 || deg < best_deg) {
      best_deg = deg;
      cand.clear();
      const std::uint64_t half = p / 2;
      for (std::uint64_t c : image) {
        cand.emplace_back(c > half ? -BigInt(static_cast<unsigned long>(p - c))
                                   : BigInt(static_cast<unsigned long>(c)));
      }
      modulus = BigInt(static_cast<unsigned long>(p));
      continue;
    }
    const ZPoly before = cand;
    crt_lift(cand, modulus, image, p);
    if (cand == before) {
      ZPoly candidate = cand;
      z_make_primitive(candidate);
      if (z_divides(candidate, a) && z_divides(candidate, b)) {
        std::vector<BigRational> out;
        out.reserve(candidate.size());
        for (auto& c : candidate) out.emplace_back(std::move(c));
        return Polynomial(std::move(out)).monic();
      }
    }
  }

  // Safety net if the prime supply runs out before stabilizing: the
  // deterministic subresultant PRS.
  BigInt g(1), h(1);
  for (;;) {
    const long d = z_degree(a) - z_degree(b);
    ZPoly r = z_prem(std::move(a), b);
    if (r.empty()) break;
    if (z_degree(r) == 0) return Polynomial::one();  // coprime
    a = std::move(b);
    // Divide out the known subresultant factor g*h^d, keeping sizes tame.
    BigInt divisor = g;
    for (long i = 0; i < d; ++i) divisor *= h;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    b = std::move(r);
    g = a.back();
    // h = g^d * h^(1-d), exact in Z for every d >= 0.
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      BigInt gp;
      mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(d));
      BigInt hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d - 1));
      mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
    }
  }
  z_make_primitive(b);
  std::vector<BigRational> out;
  out.reserve(b.size());
  for (auto& c : b) out.emplace_back(std::move(c));
  return Polynomial(std::move(out)).monic();
}

}  // namespace skewlab
