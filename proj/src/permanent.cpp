/*
 * Copyright 2026 The dicke-optics Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dicke/permanent.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke {

std::complex<double> permanent(const Eigen::MatrixXcd& m, int cap) {
  if (m.rows() != m.cols()) throw DimensionError("permanent: matrix is not square");
  const int n = static_cast<int>(m.rows());
  if (n > cap)
    throw CapacityError("permanent: size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  if (n == 0) return {1.0, 0.0};

  std::vector<std::complex<double>> row_sums(n);
  std::complex<double> total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    gray ^= std::uint64_t{1} << j;
    const bool added = (gray >> j) & 1U;
    for (int i = 0; i < n; ++i) row_sums[i] += added ? m(i, j) : -m(i, j);

    std::complex<double> prod = row_sums[0];
    for (int i = 1; i < n; ++i) prod *= row_sums[i];
    // (-1)^(n - |S|)
    const int size = std::popcount(gray);
    total += ((n - size) % 2 == 0) ? prod : -prod;
  }
  return total;
}

}  // namespace dicke
