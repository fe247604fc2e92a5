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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewlab {

/// Arbitrary-precision integers and rationals, backed by GMP.
///
/// mpq_class maintains the canonical form we rely on everywhere:
/// gcd(|num|, den) = 1, den > 0, zero stored as 0/1. Every arithmetic
/// result is canonical, so equality of values is structural equality.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error for den = 0.
inline BigRational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// q^e for any integer e; throws std::domain_error on 0^negative.
inline BigRational pow_rational(const BigRational& q, long e) {
  if (e == 0) return BigRational(1);
  if (q == 0 && e < 0) throw std::domain_error("inverse of zero rational");
  BigRational base = e > 0 ? q : BigRational(1) / q;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-(e + 1)) + 1ul;
  BigRational acc(1);
  while (n != 0) {
    if (n & 1ul) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

/// Parses "a" or "a/b" with optional leading minus. Throws
/// std::invalid_argument on malformed input, std::domain_error on a zero
/// denominator (the text is well-formed but names no rational).
inline BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (q.get_den() == 0)
    throw std::domain_error("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace skewlab
