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
#include <string_view>
#include <utility>
#include <vector>

namespace dicke {

/// Postselection schemes with a simulated circuit and a closed form.
enum class Scheme {
  kOperatorAllOne,
  kFockSingleMode,
  kPrepSingleMultiport,
  kPrepPerLevel,
  kAncilla,
  kAppendixD4,
};

std::string_view to_string(Scheme scheme);
/// Throws SpecError for unknown names.
Scheme scheme_from_string(std::string_view name);

namespace formulas {

/// log(n!), exact below 21 and log-Gamma above.
double log_factorial(int n);

/// N!/N^N, the bound for schemes without ancillary photons.
double p_op(int n);

/// All N single photons through one N-port splitter into a fixed port,
/// followed by the postselection multiport; includes the xN parallel factor.
double p_single_multiport(int n, std::span<const int> k);

/// One k_j-port splitter per level; includes the x k_min parallel factor.
/// Every k_j must be at least 1.
double p_per_level(int n, std::span<const int> k);

/// Operator-level ancilla map with transmissivity p and K ancillary photons.
double p_ancilla_operator(int n, int big_k, double p);

/// Optical ancilla scheme with the herald multiport (xN parallel factor
/// included), starting from multiphoton Fock states for the ancilla levels.
double p_ancilla_optical(int n, int big_k, double p);

/// Transmissivity maximizing p_ancilla_optical: (N-K)/N.
double p_opt(int n, int big_k);

double p_ancilla_optical_max(int n, int big_k);

/// p_ancilla_optical at p with the single-photon bunching factor
/// prod_{i>=1} k_i!/k_i^k_i. k[0] = N - K.
double p_ancilla_at(int n, std::span<const int> k, double p);

/// p_ancilla_at evaluated at p_opt.
double p_ancilla_final(int n, std::span<const int> k);

/// BS/PBS circuit for the four-qubit Dicke state with two excitations:
/// 4!/(4 * 4^4).
double p_appendix_d4();

struct SchemeProbability {
  Scheme scheme;
  int n = 0;
  std::vector<int> k;
  int big_k = 0;
  std::optional<double> p;
  double value = 0.0;
  /// Multiplier already contained in `value` (xN, x k_min, or 1).
  double parallel_factor = 1.0;
};

/// Closed form of a scheme. For kAncilla, p defaults to p_opt.
SchemeProbability scheme_probability(Scheme scheme, int n, std::span<const int> k,
                                     std::optional<double> p = std::nullopt);

// Specializations written out for two and three levels.
namespace qubit {
double p_single_multiport(int n, int k1);
double p_per_level(int n, int k1);
double p_ancilla_final(int n, int k1);
}  // namespace qubit

namespace qutrit {
double p_single_multiport(int n, int k1, int k2);
double p_per_level(int n, int k1, int k2);
double p_ancilla_final(int n, int k1, int k2);
}  // namespace qutrit

/// Qubit: k = (N - k1, k1). Qutrit: k = (N - 2 k1, k1, k1).
enum class Family { kQubit, kQutrit };

std::vector<int> family_k(Family family, int n, int k1);

struct CrossoverRow {
  int n = 0;
  std::vector<int> k;
  double p_op = 0.0;
  double p_single_multiport = 0.0;
  double p_per_level = 0.0;
  double p_ancilla_final = 0.0;
  double diff_per_level = 0.0;  ///< p_ancilla_final - p_per_level
  double diff_op = 0.0;         ///< p_ancilla_final - p_op
};

/// One row per N in [n_min, n_max] with k_0 >= 1.
std::vector<CrossoverRow> crossover_table(Family family, int k1, int n_min, int n_max);

/// kFirst: ancilla scheme vs. per-level splitters. kSecond: ancilla scheme
/// vs. the N!/N^N bound.
enum class Contour { kFirst, kSecond };

/// Log-probabilities extended to real N through log-Gamma.
namespace continuous {
double log_p_op(double n);
double log_p_per_level(Family family, double n, double k1);
double log_p_ancilla_final(Family family, double n, double k1);
}  // namespace continuous

/// Real N > lower edge at which the ancilla scheme starts to win, found by
/// bisection to 1e-9. The lower edge is k_0 = k_1 for kFirst (the region
/// k_1 <= k_0 that the comparison covers) and k_0 = 1 for kSecond.
double contour_root(Family family, Contour contour, int k1);

struct ContourFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double intercept_stderr = 0.0;
  double residual_rms = 0.0;
  std::vector<std::pair<int, double>> points;  ///< (k1, N*)
};

/// Unweighted least-squares line N* = slope * k1 + intercept over the
/// integer grid k1_min..k1_max.
ContourFit contour_fit(Family family, Contour contour, int k1_min, int k1_max);

}  // namespace formulas
}  // namespace dicke
