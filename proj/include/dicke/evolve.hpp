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

#pragma once

#include <span>

#include "dicke/fock.hpp"
#include "dicke/interferometer.hpp"
#include "dicke/permanent.hpp"

namespace dicke {

/// Evolves a Fock state through a transfer matrix by substituting every
/// input creation operator with its row of output operators and expanding.
///
/// Photons are absorbed one at a time into a sparse map of partial
/// monomials, so the cost scales with the number of distinct partial
/// occupations rather than with the number of product terms. Monomial
/// coefficients are converted to the normalized basis with sqrt(prod n!).
FockState apply_transfer(const TransferMatrix& t, const FockState& s);

/// apply_transfer restricted to outputs with at most slot_capacity[l*d + s]
/// photons of level s in mode l. Counts only grow during the expansion, so
/// the kept terms equal those of the full output.
FockState apply_transfer(const TransferMatrix& t, const FockState& s,
                         std::span<const int> slot_capacity);

/// <out| T |in> from per-level permanents of the row/column-repeated
/// submatrices, divided by sqrt(prod in! prod out!).
///
/// Independent of apply_transfer. Returns 0 when the per-level photon counts
/// of `in` and `out` differ, since T never changes internal levels.
Amplitude transition_amplitude(const TransferMatrix& t, const OccupationVector& in,
                               const OccupationVector& out,
                               int permanent_cap = kDefaultPermanentCap);

/// k!/k^k: all k single photons of one level leave a fixed port of a
/// k-port symmetric splitter.
double bunching_probability(int k);

/// (prod_j k_j!)/N^N for N = sum_j k_j photons, k_j of level j, sent one per
/// input into an N-port symmetric splitter and all leaving a fixed port.
double mixed_bunching_probability(std::span<const int> k);

struct BunchingResult {
  double probability;
  FockState conditioned;  ///< normalized state after all photons left port 0
};

/// Simulates the bunching stage: single photons (k_j of level j, in input
/// order) through dft(N), postselected on every photon leaving port 0.
BunchingResult simulate_bunching(std::span<const int> k);

}  // namespace dicke
