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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

// Sum over all permutations, O(n! n).
std::complex<double> naive_permanent(const Eigen::MatrixXcd& m) {
  std::vector<int> sigma(m.rows());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::complex<double> total = 0.0;
  do {
    std::complex<double> prod = 1.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) prod *= m(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

TEST(Permanent, EmptyMatrixIsOne) {
  EXPECT_EQ(permanent(Eigen::MatrixXcd(0, 0)), std::complex<double>(1.0));
}

TEST(Permanent, AllOnesIsFactorial) {
  for (int n = 1; n <= 8; ++n) {
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_NEAR(permanent(Eigen::MatrixXcd::Ones(n, n)).real(), fact, 1e-9 * fact) << n;
  }
}

TEST(Permanent, TwoByTwo) {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  EXPECT_NEAR(std::abs(permanent(m) - std::complex<double>(10.0)), 0.0, 1e-12);
}

TEST(Permanent, MatchesPermutationSum) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 7; ++n) {
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    EXPECT_NEAR(std::abs(permanent(m) - naive_permanent(m)), 0.0, 1e-10) << n;
  }
}

TEST(Permanent, RejectsNonSquare) {
  EXPECT_THROW(permanent(Eigen::MatrixXcd::Ones(2, 3)), DimensionError);
}

TEST(Permanent, CapacityCap) {
  EXPECT_THROW(permanent(Eigen::MatrixXcd::Ones(5, 5), 4), CapacityError);
}

}  // namespace
}  // namespace dicke
