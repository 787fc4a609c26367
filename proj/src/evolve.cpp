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

#include "dicke/evolve.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

// Entries below this are treated as structural zeros during expansion.
constexpr double kEntryFloor = 1e-15;

struct RowEntry {
  int output;
  Amplitude value;
};

// Nonzero entries of every (level, input) row.
std::vector<std::vector<std::vector<RowEntry>>> sparse_rows(const TransferMatrix& t) {
  std::vector<std::vector<std::vector<RowEntry>>> rows(t.levels());
  for (int s = 0; s < t.levels(); ++s) {
    rows[s].resize(t.inputs());
    for (int j = 0; j < t.inputs(); ++j)
      for (int l = 0; l < t.outputs(); ++l)
        if (std::abs(t(s, j, l)) > kEntryFloor) rows[s][j].push_back({l, t(s, j, l)});
  }
  return rows;
}

}  // namespace

FockState apply_transfer(const TransferMatrix& t, const FockState& s) {
  return apply_transfer(t, s, {});
}

FockState apply_transfer(const TransferMatrix& t, const FockState& s,
                         std::span<const int> slot_capacity) {
  if (s.modes() != t.inputs() || s.levels() != t.levels()) {
    std::ostringstream msg;
    msg << "apply_transfer: state on (L=" << s.modes() << ", d=" << s.levels()
        << ") does not match transfer with " << t.inputs() << " inputs and d=" << t.levels();
    throw DimensionError(msg.str());
  }
  const auto rows = sparse_rows(t);

  // Partial monomials are keyed by a dense count string, one byte per
  // (output mode, level) slot.
  const int levels = t.levels();
  const auto slots = static_cast<std::size_t>(t.outputs()) * levels;
  if (!slot_capacity.empty() && slot_capacity.size() != slots)
    throw DimensionError("apply_transfer: slot capacity size does not match outputs x levels");
  std::unordered_map<std::string, Amplitude> collected;
  for (const auto& [occ, amp] : s.terms()) {
    std::unordered_map<std::string, Amplitude> partial{
        {std::string(slots, '\0'), amp / std::sqrt(occ.factorial_product())}};
    for (const auto& e : occ.entries()) {
      const auto& row = rows[e.label.internal][e.label.spatial];
      for (int photon = 0; photon < e.count; ++photon) {
        std::unordered_map<std::string, Amplitude> next;
        next.reserve(partial.size() * row.size());
        for (const auto& [mono, coeff] : partial) {
          std::string grown = mono;
          for (const auto& [l, value] : row) {
            const std::size_t index = static_cast<std::size_t>(l) * levels + e.label.internal;
            if (!slot_capacity.empty() && grown[index] >= slot_capacity[index]) continue;
            auto& slot = grown[index];
            ++slot;
            next[grown] += coeff * value;
            --slot;
          }
        }
        partial = std::move(next);
      }
    }
    for (const auto& [mono, coeff] : partial) collected[mono] += coeff;
  }

  FockState::TermMap out;
  for (const auto& [mono, coeff] : collected) {
    OccupationVector occ;
    for (std::size_t i = 0; i < slots; ++i)
      if (mono[i]) occ.add({static_cast<int>(i / levels), static_cast<int>(i % levels)}, mono[i]);
    out.emplace(occ, coeff * std::sqrt(occ.factorial_product()));
  }
  return FockState::from_terms(t.outputs(), t.levels(), s.photon_number(), std::move(out));
}

Amplitude transition_amplitude(const TransferMatrix& t, const OccupationVector& in,
                               const OccupationVector& out, int permanent_cap) {
  in.validate(t.inputs(), t.levels());
  out.validate(t.outputs(), t.levels());
  if (in.total() != out.total()) return {};

  Amplitude amp{1.0, 0.0};
  for (int s = 0; s < t.levels(); ++s) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (const auto& e : in.entries())
      if (e.label.internal == s) rows.insert(rows.end(), e.count, e.label.spatial);
    for (const auto& e : out.entries())
      if (e.label.internal == s) cols.insert(cols.end(), e.count, e.label.spatial);
    if (rows.size() != cols.size()) return {};
    if (rows.empty()) continue;

    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd sub(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) sub(i, j) = t(s, rows[i], cols[j]);
    amp *= permanent(sub, permanent_cap);
  }
  return amp / std::sqrt(in.factorial_product() * out.factorial_product());
}

double bunching_probability(int k) {
  if (k < 1) throw ParameterError("bunching_probability: k must be positive");
  // k!/k^k = prod_{i=1..k} i/k
  double p = 1.0;
  for (int i = 1; i <= k; ++i) p *= double(i) / k;
  return p;
}

double mixed_bunching_probability(std::span<const int> k) {
  const int n = std::accumulate(k.begin(), k.end(), 0);
  if (n < 1) throw ParameterError("mixed_bunching_probability: need at least one photon");
  double log_p = -n * std::log(double(n));
  for (int kj : k) {
    if (kj < 0) throw ParameterError("mixed_bunching_probability: negative count");
    log_p += std::lgamma(kj + 1.0);
  }
  return std::exp(log_p);
}

BunchingResult simulate_bunching(std::span<const int> k) {
  const int n = std::accumulate(k.begin(), k.end(), 0);
  const int levels = static_cast<int>(k.size());
  if (n < 1 || levels < 1) throw ParameterError("simulate_bunching: need at least one photon");

  OccupationVector in;
  int mode = 0;
  for (int s = 0; s < levels; ++s)
    for (int i = 0; i < k[s]; ++i) in.add({mode++, s});

  const FockState out = apply_transfer(dft(n, levels), basis_state(n, levels, in));
  FockState::TermMap kept;
  for (const auto& [occ, amp] : out.terms())
    if (occ.spatial_count(0) == n) kept.emplace(occ, amp);
  const FockState branch = FockState::from_terms(n, levels, n, std::move(kept));
  const double prob = branch.norm_sq();
  return {prob, prob > 0.0 ? normalize(branch) : branch};
}

}  // namespace dicke
