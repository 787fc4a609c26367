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

#include "dicke/formulas.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke::formulas {
namespace {

constexpr double kTol = 1e-12;

// Direct product-form evaluations with long double, no logarithms.
long double fact(int n) {
  long double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long double direct_ancilla_final(int n, const std::vector<int>& k) {
  const int big_k = n - k[0];
  long double r = fact(n) * fact(big_k) / fact(n - big_k) * std::pow((long double)(n - big_k), n - big_k) *
                  std::pow((long double)big_k, big_k) / std::pow((long double)n, n + 2 * big_k) * n;
  for (std::size_t i = 1; i < k.size(); ++i) r *= fact(k[i]) / std::pow((long double)k[i], k[i]);
  return r;
}

TEST(Formulas, LogFactorialExactAndLarge) {
  EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
  EXPECT_NEAR(log_factorial(10), std::log(3628800.0), kTol);
  EXPECT_NEAR(log_factorial(25), std::lgamma(26.0), 1e-10);
  EXPECT_THROW(log_factorial(-1), ParameterError);
}

TEST(Formulas, POp) {
  EXPECT_NEAR(p_op(4), 0.09375, kTol);
  EXPECT_NEAR(p_op(1), 1.0, kTol);
  EXPECT_NEAR(p_op(3), 6.0 / 27.0, kTol);
}

TEST(Formulas, PSingleMultiport) {
  const std::vector<int> k22{2, 2};
  const std::vector<int> k11{1, 1};
  const std::vector<int> k4{4};
  EXPECT_NEAR(p_single_multiport(4, k22), 384.0 / 65536.0, kTol);
  EXPECT_NEAR(p_single_multiport(2, k11), 0.25, kTol);
  EXPECT_NEAR(p_single_multiport(4, k4), 24.0 * 24.0 * 4.0 / 65536.0, kTol);
  EXPECT_THROW(p_single_multiport(5, k22), SpecError);
}

TEST(Formulas, PPerLevel) {
  const std::vector<int> k22{2, 2};
  const std::vector<int> k111{1, 1, 1};
  const std::vector<int> k11{1, 1};
  const std::vector<int> k31{3, 1};
  const std::vector<int> k30{3, 0};
  EXPECT_NEAR(p_per_level(4, k22), 0.046875, kTol);
  EXPECT_NEAR(p_per_level(3, k111), p_op(3), kTol);
  EXPECT_NEAR(p_per_level(2, k11), 0.5, kTol);
  EXPECT_NEAR(p_per_level(4, k31), 0.09375 * 6.0 / 27.0, kTol);
  EXPECT_THROW(p_per_level(3, k30), SpecError);
}

TEST(Formulas, PAncillaOperator) {
  EXPECT_NEAR(p_ancilla_operator(1, 1, 0.0), 1.0, kTol);
  EXPECT_NEAR(p_ancilla_operator(3, 1, 2.0 / 3.0), 4.0 / 27.0, kTol);
  EXPECT_NEAR(p_ancilla_operator(2, 1, 0.5), 0.25, kTol);
  EXPECT_THROW(p_ancilla_operator(2, 3, 0.5), ParameterError);
  EXPECT_THROW(p_ancilla_operator(2, 1, 1.5), ParameterError);
}

TEST(Formulas, PAncillaOptical) {
  const std::vector<int> k21{2, 1};
  const std::vector<int> k31{3, 1};
  EXPECT_NEAR(p_opt(3, 1), 2.0 / 3.0, kTol);
  EXPECT_NEAR(p_ancilla_final(3, k21), 4.0 / 27.0, kTol);
  EXPECT_NEAR(p_ancilla_final(4, k31), 27.0 / 256.0, kTol);
  EXPECT_GT(p_ancilla_final(4, k31), p_op(4));
  EXPECT_DOUBLE_EQ(p_ancilla_optical(4, 2, 0.0), 0.0);
  for (int n = 2; n <= 12; ++n)
    for (int big_k = 1; big_k < n; ++big_k)
      EXPECT_NEAR(p_ancilla_optical(n, big_k, p_opt(n, big_k)), p_ancilla_optical_max(n, big_k),
                  1e-14);
}

TEST(Formulas, PAncillaFinalMatchesDirectEvaluation) {
  for (int n = 2; n <= 14; ++n) {
    for (int k1 = 1; k1 < n; ++k1) {
      const std::vector<int> q{n - k1, k1};
      EXPECT_NEAR(p_ancilla_final(n, q) / double(direct_ancilla_final(n, q)), 1.0, 1e-12);
      for (int k2 = 1; k1 + k2 < n; ++k2) {
        const std::vector<int> t{n - k1 - k2, k1, k2};
        EXPECT_NEAR(p_ancilla_final(n, t) / double(direct_ancilla_final(n, t)), 1.0, 1e-12);
      }
    }
  }
}

TEST(Formulas, PAncillaFinalRejectsDegenerateK) {
  const std::vector<int> no_ancilla{3, 0};
  const std::vector<int> all_ancilla{0, 3};
  EXPECT_THROW(p_ancilla_final(3, no_ancilla), SpecError);
  EXPECT_THROW(p_ancilla_final(3, all_ancilla), SpecError);
}

TEST(Formulas, Specializations) {
  for (int n = 3; n <= 12; ++n) {
    const std::vector<int> q{n - 1, 1};
    EXPECT_NEAR(qubit::p_per_level(n, 1), p_per_level(n, q), kTol);
    EXPECT_NEAR(qubit::p_ancilla_final(n, 1), p_ancilla_final(n, q), kTol);
    EXPECT_NEAR(qubit::p_single_multiport(n, 1), p_single_multiport(n, q), kTol);
    const std::vector<int> t{n - 2, 1, 1};
    EXPECT_NEAR(qutrit::p_ancilla_final(n, 1, 1), p_ancilla_final(n, t), kTol);
  }
}

TEST(Formulas, SchemeProbabilityParallelFactors) {
  const std::vector<int> k22{2, 2};
  const std::vector<int> k21{2, 1};
  const auto op = scheme_probability(Scheme::kOperatorAllOne, 4, k22, std::nullopt);
  EXPECT_DOUBLE_EQ(op.parallel_factor, 1.0);
  EXPECT_NEAR(op.value, 0.09375, kTol);
  EXPECT_DOUBLE_EQ(scheme_probability(Scheme::kPrepSingleMultiport, 4, k22, std::nullopt).parallel_factor, 4.0);
  EXPECT_DOUBLE_EQ(scheme_probability(Scheme::kPrepPerLevel, 4, k22, std::nullopt).parallel_factor, 2.0);
  const auto anc = scheme_probability(Scheme::kAncilla, 3, k21, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(anc.parallel_factor, 3.0);
  EXPECT_NEAR(anc.value, 4.0 / 27.0, kTol);
  EXPECT_NEAR(scheme_probability(Scheme::kAppendixD4, 4, k22, std::nullopt).value, 0.0234375, kTol);
  EXPECT_THROW(scheme_probability(Scheme::kAppendixD4, 3, k21, std::nullopt), SpecError);
}

TEST(Formulas, SchemeNames) {
  for (auto s : {Scheme::kOperatorAllOne, Scheme::kFockSingleMode, Scheme::kPrepSingleMultiport,
                 Scheme::kPrepPerLevel, Scheme::kAncilla, Scheme::kAppendixD4})
    EXPECT_EQ(scheme_from_string(to_string(s)), s);
  EXPECT_THROW(scheme_from_string("w_state"), SpecError);
}

TEST(Crossover, QubitKOneRows) {
  const auto rows = crossover_table(Family::kQubit, 1, 2, 10);
  ASSERT_EQ(rows.size(), 9u);
  const auto& n4 = rows[2];
  EXPECT_EQ(n4.n, 4);
  EXPECT_NEAR(n4.p_op, 0.09375, kTol);
  EXPECT_NEAR(n4.p_per_level, 0.09375 * 6.0 / 27.0, kTol);
  EXPECT_NEAR(n4.p_ancilla_final, 0.10546875, kTol);
  EXPECT_NEAR(n4.p_single_multiport, 4.0 * 24.0 * 6.0 / 65536.0, kTol);
  EXPECT_LT(rows[1].diff_op, 0.0);
  EXPECT_GT(rows[1].diff_per_level, 0.0);
  EXPECT_LT(rows[0].diff_per_level, 0.0);
  EXPECT_GT(n4.diff_op, 0.0);
}

TEST(Crossover, SkipsRowsWithoutMainPhotons) {
  const auto rows = crossover_table(Family::kQutrit, 2, 2, 8);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front().n, 5);
}

TEST(Contour, RootsLieBetweenIntegerSigns) {
  for (int k1 = 1; k1 <= 5; ++k1) {
    const double root = contour_root(Family::kQubit, Contour::kSecond, k1);
    const double below = continuous::log_p_ancilla_final(Family::kQubit, root - 1e-3, k1) -
                         continuous::log_p_op(root - 1e-3);
    const double above = continuous::log_p_ancilla_final(Family::kQubit, root + 1e-3, k1) -
                         continuous::log_p_op(root + 1e-3);
    EXPECT_LT(below, 0.0) << k1;
    EXPECT_GT(above, 0.0) << k1;
  }
}

TEST(Contour, FitSlopesNearReferenceLines) {
  EXPECT_NEAR(contour_fit(Family::kQubit, Contour::kFirst, 1, 20).slope, 2.41, 0.241);
  EXPECT_NEAR(contour_fit(Family::kQubit, Contour::kSecond, 1, 20).slope, 6.38, 0.638);
  EXPECT_NEAR(contour_fit(Family::kQutrit, Contour::kFirst, 1, 10).slope, 4.81, 0.481);
  EXPECT_NEAR(contour_fit(Family::kQutrit, Contour::kSecond, 1, 10).slope, 12.68, 1.268);
  EXPECT_THROW(contour_fit(Family::kQubit, Contour::kFirst, 1, 2), ParameterError);
}

}  // namespace
}  // namespace dicke::formulas
