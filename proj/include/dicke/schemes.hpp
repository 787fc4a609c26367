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

#include <optional>
#include <vector>

#include "dicke/evolve.hpp"
#include "dicke/fock.hpp"
#include "dicke/formulas.hpp"
#include "dicke/interferometer.hpp"
#include "dicke/postselect.hpp"

namespace dicke {

/// Largest N accepted by the circuit simulator.
inline constexpr int kMaxSimulatedN = 6;

struct SchemeSpec {
  Scheme scheme = Scheme::kOperatorAllOne;
  int n = 0;
  std::vector<int> k;
  std::optional<double> p;  ///< ancilla transmissivity, defaults to p_opt
  int herald_mode = 1;      ///< ancilla herald port, 1-based
  /// prep_per_level: feed level j into input j of the final splitter instead
  /// of merging all groups into input 0.
  bool separate_inputs = false;
  /// Completion of the two-port splitters' unused second row.
  SplitterCompletion completion = SplitterCompletion::kSymmetric;
};

/// Feedforward phases for photons of one level, indexed by output mode.
struct LevelPhases {
  int level = 0;
  std::vector<Amplitude> phases;
};

struct BuiltScheme {
  TransferMatrix circuit;
  FockState input;
  PostselectionPattern pattern;
  DickeSpec target;
  double parallel_factor = 1.0;
  std::vector<int> register_modes;
  std::vector<LevelPhases> corrections;
  /// Divide the circuit output by its norm before detection. Set for the
  /// non-unitary all-one operator, whose raw output norm² is ∏k_j!.
  bool renormalize_output = false;
};

/// Assembles circuit, input, detection pattern and target of a scheme.
/// Throws SpecError for unsupported (scheme, N, k) and CapacityError above
/// kMaxSimulatedN.
BuiltScheme build_scheme(const SchemeSpec& spec);

struct RunReport {
  SchemeSpec spec;
  double probability = 0.0;  ///< fixed herald/prep port, single window
  double parallel_factor = 1.0;
  std::optional<double> formula;
  double fidelity = 0.0;  ///< after feedforward corrections
  double uncorrected_fidelity = 0.0;
  FockState state{0, 1, 0};  ///< normalized postselected state, corrections applied
  double wall_time_ms = 0.0;
};

/// build -> evolve -> project -> correct -> extract -> fidelity.
///
/// Throws VerificationError when probability * parallel_factor differs from
/// the closed form by more than `tolerance`.
RunReport run(const SchemeSpec& spec, double tolerance = 1e-10);

/// All k-vectors of length d with entries >= min_part summing to n.
std::vector<std::vector<int>> compositions(int n, int d, int min_part);

}  // namespace dicke
