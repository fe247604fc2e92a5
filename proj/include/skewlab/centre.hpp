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

#include <optional>
#include <span>
#include <vector>

#include "skewlab/series.hpp"

namespace skewlab {

/// Outcome of probing a candidate for centrality. `central` means every
/// probe commuted with the candidate up to the working precision; otherwise
/// `witness` holds the first probe with candidate*p != p*candidate.
/// `tested_against` records the probes actually consumed, in order (all of
/// them for a central verdict, up to and including the witness otherwise).
struct CentreReport {
  SkewSeries candidate;
  std::vector<SkewSeries> tested_against;
  bool central = false;
  std::optional<SkewSeries> witness;
};

/// Tests candidate*p == p*candidate against each probe in order, stopping at
/// the first failure. Equality is judged at the common precision of the two
/// products. A candidate that commutes with everything here is only known
/// central up to the probe set; a witness is a definitive non-centrality
/// certificate.
CentreReport centre_check(const SkewSeries& candidate,
                          std::span<const SkewSeries> probes);

}  // namespace skewlab
