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

#include "dicke/fock.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

TEST(OccupationVector, MergesRepeatedLabelsAndSorts) {
  OccupationVector occ{{{2, 0}, 1}, {{0, 1}, 2}, {{2, 0}, 1}};
  ASSERT_EQ(occ.entries().size(), 2u);
  EXPECT_EQ(occ.entries()[0].label, (ModeLabel{0, 1}));
  EXPECT_EQ(occ.count({2, 0}), 2);
  EXPECT_EQ(occ.total(), 4);
  EXPECT_EQ(occ.spatial_count(2), 2);
  EXPECT_EQ(occ.level_count(1), 2);
  EXPECT_DOUBLE_EQ(occ.factorial_product(), 4.0);
}

TEST(OccupationVector, ToString) {
  EXPECT_EQ(OccupationVector{}.to_string(), "vac");
  OccupationVector occ{{{0, 0}, 1}, {{1, 1}, 2}};
  EXPECT_EQ(occ.to_string(), "(0,0)^1 (1,1)^2");
}

TEST(OccupationVector, ValidateRejectsOutOfRangeLabels) {
  OccupationVector occ{{{3, 0}, 1}};
  EXPECT_THROW(occ.validate(3, 1), DimensionError);
  EXPECT_NO_THROW(occ.validate(4, 1));
  OccupationVector level{{{0, 2}, 1}};
  EXPECT_THROW(level.validate(4, 2), DimensionError);
}

TEST(FockState, BasisStateHasUnitNorm) {
  const auto s = basis_state(3, 2, {{{0, 0}, 2}, {{2, 1}, 1}});
  EXPECT_EQ(s.photon_number(), 3);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(norm_sq(s), 1.0);
}

TEST(FockState, FromTermsPrunesTinyAmplitudes) {
  FockState::TermMap terms;
  terms[OccupationVector{{{0, 0}, 1}}] = 1.0;
  terms[OccupationVector{{{1, 0}, 1}}] = 1e-13;
  const auto s = FockState::from_terms(2, 1, 1, terms);
  EXPECT_EQ(s.size(), 1u);
}

TEST(FockState, FromTermsRejectsWrongPhotonNumber) {
  FockState::TermMap terms;
  terms[OccupationVector{{{0, 0}, 2}}] = 1.0;
  EXPECT_THROW(FockState::from_terms(2, 1, 1, terms), DimensionError);
}

TEST(FockState, InnerProductAcrossSectorsIsZero) {
  const auto a = basis_state(2, 1, {{{0, 0}, 1}});
  const auto b = basis_state(2, 1, {{{0, 0}, 2}});
  EXPECT_EQ(inner_product(a, b), Amplitude(0.0));
  EXPECT_THROW(inner_product(a, basis_state(3, 1, {{{0, 0}, 1}})), DimensionError);
}

TEST(FockState, NormalizeAndScale) {
  const auto a = basis_state(2, 1, {{{0, 0}, 1}});
  const auto b = basis_state(2, 1, {{{1, 0}, 1}});
  const auto sum = add(scale(a, 3.0), scale(b, Amplitude(0.0, 4.0)));
  EXPECT_DOUBLE_EQ(norm_sq(sum), 25.0);
  const auto n = normalize(sum);
  EXPECT_NEAR(norm_sq(n), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(n.amplitude({{{1, 0}, 1}}) - Amplitude(0.0, 0.8)), 0.0, 1e-15);
  EXPECT_THROW(normalize(FockState(2, 1, 1)), DegenerateStateError);
}

TEST(FockState, AddRejectsDifferentSectors) {
  EXPECT_THROW(add(basis_state(2, 1, {{{0, 0}, 1}}), basis_state(2, 1, {{{0, 0}, 2}})),
               DimensionError);
}

TEST(FockState, TensorJoinsDisjointModes) {
  const auto a = basis_state(3, 1, {{{0, 0}, 1}});
  const auto b = basis_state(3, 1, {{{2, 0}, 2}});
  const auto t = tensor(a, b);
  EXPECT_EQ(t.photon_number(), 3);
  EXPECT_DOUBLE_EQ(std::abs(t.amplitude({{{0, 0}, 1}, {{2, 0}, 2}})), 1.0);
  EXPECT_THROW(tensor(a, a), ModeCollisionError);
}

TEST(FockState, VacuumHasZeroPhotons) {
  const auto v = vacuum(4, 2);
  EXPECT_EQ(v.photon_number(), 0);
  EXPECT_DOUBLE_EQ(std::abs(v.amplitude(OccupationVector{})), 1.0);
}

}  // namespace
}  // namespace dicke
