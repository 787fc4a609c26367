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

#include "dicke/postselect.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/evolve.hpp"
#include "dicke/verify.hpp"

namespace dicke {
namespace {

constexpr double kTol = 1e-12;

FockState operator_output() {
  const OccupationVector in{{{0, 0}, 1}, {{1, 0}, 1}, {{2, 1}, 1}, {{3, 1}, 1}};
  return apply_transfer(all_one(4, 2), basis_state(4, 2, in));
}

TEST(Pattern, OnePerModeAccepts) {
  const std::vector<int> reg{0, 1};
  const auto p = PostselectionPattern::one_per_mode(reg);
  EXPECT_TRUE(p.accepts({{{0, 0}, 1}, {{1, 1}, 1}}));
  EXPECT_FALSE(p.accepts({{{0, 0}, 2}}));
  EXPECT_FALSE(p.accepts({{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}}));
  EXPECT_EQ(p.total_count(), 2);
}

TEST(Pattern, UncoveredModesMustBeDark) {
  const PostselectionPattern p({{{0}, std::nullopt, 1}});
  EXPECT_TRUE(p.accepts({{{0, 1}, 1}}));
  EXPECT_FALSE(p.accepts({{{1, 0}, 1}}));
}

TEST(Pattern, LevelFilter) {
  const PostselectionPattern p({{{0, 1}, 0, 2}});
  EXPECT_TRUE(p.accepts({{{0, 0}, 1}, {{1, 0}, 1}}));
  EXPECT_TRUE(p.accepts({{{1, 0}, 2}}));
  EXPECT_FALSE(p.accepts({{{0, 0}, 1}, {{1, 1}, 1}}));
}

TEST(Pattern, RejectsOverlapAndBadCounts) {
  EXPECT_THROW(PostselectionPattern({{{0, 1}, std::nullopt, 1}, {{1}, std::nullopt, 1}}),
               ParameterError);
  EXPECT_THROW(PostselectionPattern({{{0}, std::nullopt, -1}}), ParameterError);
}

TEST(Project, OperatorOutput) {
  const std::vector<int> reg{0, 1, 2, 3};
  const auto pattern = PostselectionPattern::one_per_mode(reg);
  // Raw all-one output carries norm² 2!·2!; after renormalization the
  // accepted weight is 4!/4^4.
  const auto raw = operator_output();
  EXPECT_NEAR(raw.norm_sq(), 4.0, 1e-12);
  const auto proj = project(normalize(raw), pattern);
  EXPECT_NEAR(proj.probability, 24.0 / 256.0, kTol);
  ASSERT_TRUE(proj.normalized.has_value());
  EXPECT_EQ(proj.normalized->size(), 6u);
  for (const auto& [occ, amp] : proj.normalized->terms())
    EXPECT_NEAR(std::abs(amp), 1.0 / std::sqrt(6.0), kTol);
}

TEST(Project, VacuumAndHomGiveZero) {
  const std::vector<int> reg{0, 1};
  const auto pattern = PostselectionPattern::one_per_mode(reg);
  const auto none = project(vacuum(2, 1), pattern);
  EXPECT_EQ(none.probability, 0.0);
  EXPECT_FALSE(none.normalized.has_value());
  const auto hom = apply_transfer(dft(2, 1), basis_state(2, 1, {{{0, 0}, 1}, {{1, 0}, 1}}));
  EXPECT_NEAR(project(hom, pattern).probability, 0.0, kTol);
}

TEST(Project, CompletePatternSetSumsToNorm) {
  std::mt19937_64 rng(3);
  const TransferMatrix u({random_unitary(3, rng)});
  const auto out = apply_transfer(u, basis_state(3, 1, {{{0, 0}, 2}, {{2, 0}, 1}}));
  double total = 0.0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      total += project(out, PostselectionPattern({{{0}, std::nullopt, a},
                                                   {{1}, std::nullopt, b},
                                                   {{2}, std::nullopt, 3 - a - b}}))
                   .probability;
  EXPECT_NEAR(total, out.norm_sq(), 1e-12);
}

TEST(Dicke, Amplitudes) {
  const auto bell = dicke({2, {1, 1}});
  const std::vector<int> d01{0, 1};
  const std::vector<int> d00{0, 0};
  EXPECT_NEAR(std::abs(bell.amplitude(d01) - 1.0 / std::sqrt(2.0)), 0.0, kTol);
  EXPECT_EQ(bell.amplitude(d00), Amplitude(0.0));

  for (const DickeSpec& spec : {DickeSpec{4, {2, 2}}, DickeSpec{3, {1, 1, 1}}}) {
    const auto q = dicke(spec);
    int nonzero = 0;
    for (Eigen::Index i = 0; i < q.amplitudes().size(); ++i) {
      if (std::abs(q.amplitudes()[i]) == 0.0) continue;
      ++nonzero;
      EXPECT_NEAR(std::abs(q.amplitudes()[i]), 1.0 / std::sqrt(6.0), kTol);
    }
    EXPECT_EQ(nonzero, 6);
  }
  EXPECT_THROW(dicke({3, {1, 1}}), SpecError);
}

TEST(Dicke, PermutationSymmetric) {
  const auto q = dicke({4, {1, 2, 1}});
  std::vector<int> digits(4);
  for (Eigen::Index i = 0; i < q.amplitudes().size(); ++i) {
    Eigen::Index rest = i;
    for (int pos = 3; pos >= 0; --pos) {
      digits[pos] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    std::vector<int> rotated(digits.begin() + 1, digits.end());
    rotated.push_back(digits[0]);
    EXPECT_EQ(q.amplitude(digits), q.amplitude(rotated));
  }
}

TEST(Fidelity, Basics) {
  const auto q = dicke({3, {2, 1}});
  EXPECT_NEAR(fidelity(q, q), 1.0, kTol);
  const auto zeros = dicke({3, {3, 0}});
  EXPECT_NEAR(fidelity(q, zeros), 0.0, kTol);
  EXPECT_THROW(fidelity(q, dicke({2, {1, 1}})), DimensionError);
}

TEST(Extract, RoundTripsEmbeddedState) {
  const auto q = dicke({3, {1, 1, 1}});
  const std::vector<int> reg{4, 1, 2};
  const auto s = embed_qudits(q, reg, 5);
  EXPECT_NEAR(fidelity(extract_qudits(s, reg), q), 1.0, kTol);
}

TEST(Extract, FixesGlobalPhase) {
  const auto q = dicke({2, {1, 1}});
  const std::vector<int> reg{0, 1};
  const auto s = scale(embed_qudits(q, reg, 2), std::polar(1.0, 0.7));
  const auto back = extract_qudits(s, reg);
  for (Eigen::Index i = 0; i < back.amplitudes().size(); ++i) {
    if (std::abs(back.amplitudes()[i]) == 0.0) continue;
    EXPECT_NEAR(back.amplitudes()[i].imag(), 0.0, kTol);
    EXPECT_GT(back.amplitudes()[i].real(), 0.0);
    break;
  }
}

TEST(Extract, Errors) {
  const std::vector<int> reg{0, 1};
  EXPECT_THROW(extract_qudits(basis_state(2, 1, {{{0, 0}, 2}}), reg), EncodingError);
  FockState::TermMap terms;
  terms[OccupationVector{{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}}] = 1.0;
  terms[OccupationVector{{{0, 0}, 1}, {{1, 0}, 1}, {{3, 0}, 1}}] = 1.0;
  EXPECT_THROW(extract_qudits(FockState::from_terms(4, 1, 3, terms), reg), EntangledAncillaError);
  EXPECT_THROW(extract_qudits(FockState(2, 1, 2), reg), DegenerateStateError);
}

TEST(PhaseCorrection, Values) {
  for (const auto& ph : phase_correction(4, 1)) EXPECT_NEAR(std::abs(ph - 1.0), 0.0, kTol);
  const auto two = phase_correction(2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(std::abs(two[0] - 1.0), 0.0, kTol);
  EXPECT_NEAR(std::abs(two[1] + 1.0), 0.0, kTol);
  EXPECT_THROW(phase_correction(3, 0), ParameterError);
  EXPECT_THROW(phase_correction(3, 4), ParameterError);
}

TEST(PhaseCorrection, ApplyToLevelOnly) {
  const auto s = basis_state(2, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
  const std::vector<Amplitude> phases{1.0, -1.0};
  const auto t = apply_mode_phases(s, 0, phases);
  EXPECT_NEAR(std::abs(t.amplitude({{{1, 0}, 1}, {{0, 1}, 1}}) + 1.0), 0.0, kTol);
  const auto u = apply_mode_phases(s, 1, phases);
  EXPECT_NEAR(std::abs(u.amplitude({{{1, 0}, 1}, {{0, 1}, 1}}) - 1.0), 0.0, kTol);
}

}  // namespace
}  // namespace dicke
