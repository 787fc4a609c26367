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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dicke/fock.hpp"

namespace dicke {

/// Exact photon count required on a set of spatial modes. With `level` set,
/// the modes may only hold photons of that internal level.
struct ModeConstraint {
  std::vector<int> modes;
  std::optional<int> level;
  int count = 0;
};

/// Accepted detection event. Constraints cover disjoint spatial modes and
/// every mode not covered must be empty.
class PostselectionPattern {
 public:
  explicit PostselectionPattern(std::vector<ModeConstraint> constraints);

  /// Exactly one photon (any level) in each listed mode.
  static PostselectionPattern one_per_mode(std::span<const int> modes);

  bool accepts(const OccupationVector& occupation) const;
  int total_count() const noexcept { return total_; }
  const std::vector<ModeConstraint>& constraints() const noexcept { return constraints_; }

 private:
  std::vector<ModeConstraint> constraints_;
  std::vector<std::pair<int, int>> owner_;  // sorted (mode, constraint index)
  int total_ = 0;
};

struct Projection {
  FockState branch;                     ///< unnormalized accepted part
  double probability = 0.0;             ///< norm_sq(branch)
  std::optional<FockState> normalized;  ///< present when probability > 0
};

Projection project(const FockState& s, const PostselectionPattern& pattern);

/// Largest photon count per (mode, level) slot, indexed l*levels + s, that
/// an accepted event can show.
std::vector<int> slot_capacities(const PostselectionPattern& pattern, int modes, int levels);

/// N qudits with k_j of them in level j; d = k.size().
struct DickeSpec {
  int n = 0;
  std::vector<int> k;

  int levels() const noexcept { return static_cast<int>(k.size()); }
  /// Throws SpecError unless all k_j >= 0 and sum k_j = N >= 1.
  void validate() const;
};

inline constexpr int kMaxQuditDimension = 1 << 20;

/// Dense amplitude vector over |s_1 ... s_N>, s_1 being the most significant
/// digit in base d.
class QuditState {
 public:
  QuditState(int qudits, int levels, Eigen::VectorXcd amplitudes);

  int qudits() const noexcept { return qudits_; }
  int levels() const noexcept { return levels_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Amplitude amplitude(std::span<const int> digits) const;
  std::size_t index(std::span<const int> digits) const;

 private:
  int qudits_;
  int levels_;
  Eigen::VectorXcd amplitudes_;
};

/// Reads one qudit per register mode (its photon's internal level) and
/// factors out the remaining modes, which must hold the same occupation in
/// every term. The result is normalized with its first nonzero amplitude
/// made real and positive.
QuditState extract_qudits(const FockState& s, std::span<const int> register_modes);

/// Inverse of extract_qudits for a state with no photons outside the register.
FockState embed_qudits(const QuditState& q, std::span<const int> register_modes, int modes);

/// Symmetric Dicke state: every distinct arrangement of the multiset
/// {0^k_0, 1^k_1, ...} with amplitude sqrt(prod k_j! / N!).
QuditState dicke(const DickeSpec& spec);

/// |<a|b>|^2 for normalized states.
double fidelity(const QuditState& a, const QuditState& b);

/// Feedforward phases for level-0 photons in the N main output modes when
/// the herald fires at (1-based) herald_mode of the N-port herald splitter:
/// phase[l] = omega_N^{l (herald_mode - 1)} with 0-based l.
std::vector<Amplitude> phase_correction(int n, int herald_mode);

/// Multiplies each term by prod phases[mode]^count over photons of `level`.
/// Modes beyond phases.size() are left untouched.
FockState apply_mode_phases(const FockState& s, int level, std::span<const Amplitude> phases);

}  // namespace dicke
