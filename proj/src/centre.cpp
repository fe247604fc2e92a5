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

#include "skewlab/centre.hpp"

namespace skewlab {

CentreReport centre_check(const SkewSeries& candidate,
                          std::span<const SkewSeries> probes) {
  CentreReport report{candidate, {}, true, std::nullopt};
  for (const SkewSeries& p : probes) {
    report.tested_against.push_back(p);
    SkewSeries left = candidate.mul(p);
    SkewSeries right = p.mul(candidate);
    if (!left.equals_to_precision(right)) {
      report.central = false;
      report.witness = p;
      break;
    }
  }
  return report;
}

}  // namespace skewlab
