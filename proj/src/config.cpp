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

#include "skewlab/config.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || s.empty()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid " + what + " '" + s + "' in field spec");
  }
}

Automorphism parse_sigma(const std::string& spec) {
  if (spec == "identity") return Automorphism::identity();
  if (spec == "frobenius") return Automorphism::frobenius();
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (colon != std::string::npos && (head == "shift" || head == "scale")) {
    BigRational c;
    try {
      c = parse_rational(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid sigma parameter in '" + spec +
                                  "': expected a nonzero rational");
    }
    return head == "shift" ? Automorphism::shift(c) : Automorphism::scale(c);
  }
  throw std::invalid_argument("unknown sigma spec '" + spec +
                              "': expected identity, shift:c, scale:c, or frobenius");
}

}  // namespace

ContextPtr make_context(const ContextConfig& config) {
  const Automorphism sigma = parse_sigma(config.sigma);
  if (config.field == "q") return SkewContext::rationals(sigma);
  if (config.field == "q-u") return SkewContext::rational_functions(sigma);
  if (config.field.rfind("gf:", 0) == 0) {
    const std::vector<std::string> parts = split(config.field, ':');
    if (parts.size() != 3 && parts.size() != 4) {
      throw std::invalid_argument("invalid field spec '" + config.field +
                                  "': expected gf:p:k or gf:p:k:c0,c1,...,ck");
    }
    const std::uint64_t p = parse_u64(parts[1], "characteristic");
    const std::uint64_t k = parse_u64(parts[2], "extension degree");
    if (k == 0 || k > 64) {
      throw std::invalid_argument("invalid extension degree in field spec '" + config.field + "'");
    }
    std::shared_ptr<const GaloisField> field;
    if (parts.size() == 4) {
      std::vector<std::uint64_t> modulus;
      for (const std::string& c : split(parts[3], ',')) {
        modulus.push_back(parse_u64(c, "modulus coefficient"));
      }
      field = GaloisField::make(p, static_cast<std::uint32_t>(k), std::move(modulus));
    } else {
      field = GaloisField::make(p, static_cast<std::uint32_t>(k));
    }
    return SkewContext::galois(std::move(field), sigma);
  }
  throw std::invalid_argument("unknown field spec '" + config.field +
                              "': expected q, q-u, or gf:p:k[:c0,c1,...,ck]");
}

}  // namespace skewlab
