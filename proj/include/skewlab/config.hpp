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

#include <string>

#include "skewlab/context.hpp"

namespace skewlab {

/// Textual context selection shared by the CLI and the verification
/// harness.
///
/// field:  "q"                   rationals
///         "q-u"                 rational functions Q(u)
///         "gf:p:k:c0,c1,...,ck" F_{p^k} with the given monic modulus
///                               (coefficients low to high)
///         "gf:p:k"              F_{p^k} with the default modulus
/// sigma:  "identity" | "shift:c" | "scale:c" | "frobenius"
///         with c a nonzero rational such as 1 or -2/3
struct ContextConfig {
  std::string field = "q-u";
  std::string sigma = "shift:1";
};

/// Builds the context; throws std::invalid_argument on malformed specs or
/// on a sigma that cannot act on the field.
ContextPtr make_context(const ContextConfig& config);

}  // namespace skewlab
