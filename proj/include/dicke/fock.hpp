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

#include <compare>
#include <complex>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dicke {

using Amplitude = std::complex<double>;

/// Amplitudes with modulus below this are dropped after every add/evolve.
inline constexpr double kPruneThreshold = 1e-12;

/// (spatial mode, internal level) of a single photon. Ordered lexicographically.
struct ModeLabel {
  int spatial = 0;
  int internal = 0;

  friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
};

struct OccupationEntry {
  ModeLabel label;
  int count = 0;

  friend auto operator<=>(const OccupationEntry&, const OccupationEntry&) = default;
};

/// Photon counts per mode label, stored sparsely and in canonical order.
///
/// Only labels with a positive count are kept, so two vectors describing the
/// same physical occupation compare equal regardless of how they were built.
class OccupationVector {
 public:
  OccupationVector() = default;
  OccupationVector(std::initializer_list<OccupationEntry> entries);
  explicit OccupationVector(std::span<const OccupationEntry> entries);

  int total() const noexcept { return total_; }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<OccupationEntry>& entries() const noexcept { return entries_; }

  int count(ModeLabel label) const noexcept;
  /// Photons in a spatial mode, summed over internal levels.
  int spatial_count(int spatial) const noexcept;
  int level_count(int internal) const noexcept;

  /// Adds n photons with the given label (n may be zero; negative is rejected).
  void add(ModeLabel label, int n = 1);

  /// Throws DimensionError unless every label fits an (L, d) system.
  void validate(int modes, int levels) const;

  /// prod_i n_i!, the squared norm of the creation-operator monomial.
  double factorial_product() const noexcept;

  std::string to_string() const;

  friend bool operator==(const OccupationVector& a, const OccupationVector& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const OccupationVector& a, const OccupationVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<OccupationEntry> entries_;
  int total_ = 0;
};

/// Sparse superposition of occupation vectors with a common photon number.
///
/// States are values: operations return new states and never mutate their
/// arguments. A state with no terms is the null state of its sector.
class FockState {
 public:
  using TermMap = std::map<OccupationVector, Amplitude>;

  /// Null state of the given photon-number sector.
  FockState(int modes, int levels, int photon_number);

  /// Validates every occupation against (modes, levels, photon_number) and
  /// prunes amplitudes below kPruneThreshold.
  static FockState from_terms(int modes, int levels, int photon_number, TermMap terms);

  int modes() const noexcept { return modes_; }
  int levels() const noexcept { return levels_; }
  int photon_number() const noexcept { return photon_number_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_null() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  Amplitude amplitude(const OccupationVector& occupation) const;
  double norm_sq() const noexcept;

 private:
  int modes_;
  int levels_;
  int photon_number_;
  TermMap terms_;
};

/// Normalized Fock basis element |n>.
FockState basis_state(int modes, int levels, const OccupationVector& occupation);

FockState vacuum(int modes, int levels);

/// <a|b>. Different photon-number sectors are orthogonal.
Amplitude inner_product(const FockState& a, const FockState& b);

double norm_sq(const FockState& s);
FockState normalize(const FockState& s);
FockState scale(const FockState& s, Amplitude c);
FockState add(const FockState& a, const FockState& b);

/// Product of two states occupying disjoint spatial modes of the same system.
FockState tensor(const FockState& a, const FockState& b);

}  // namespace dicke
