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

#include "skewlab/rational_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace skewlab {

std::optional<std::vector<BigRational>> solve_linear_system(
    RationalMatrix a, std::vector<BigRational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) {
    throw std::invalid_argument("solve_linear_system: rhs size mismatch");
  }
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw std::invalid_argument("solve_linear_system: ragged matrix");
    }
  }

  // Row echelon form. Exact arithmetic: any nonzero pivot will do.
  std::vector<std::size_t> pivot_col;  // per eliminated row
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    BigRational inv_p = 1 / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv_p;
    b[rank] *= inv_p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      BigRational f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (std::size_t r = rank; r < rows; ++r) {
    if (b[r] != 0) return std::nullopt;  // 0 = nonzero: inconsistent
  }

  std::vector<BigRational> x(cols, BigRational(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
  return x;
}

}  // namespace skewlab
