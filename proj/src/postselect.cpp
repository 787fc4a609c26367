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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

PostselectionPattern::PostselectionPattern(std::vector<ModeConstraint> constraints)
    : constraints_(std::move(constraints)) {
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    const auto& con = constraints_[c];
    if (con.count < 0) throw ParameterError("PostselectionPattern: negative count");
    if (con.modes.empty()) throw ParameterError("PostselectionPattern: constraint without modes");
    for (int m : con.modes) owner_.emplace_back(m, static_cast<int>(c));
    total_ += con.count;
  }
  std::sort(owner_.begin(), owner_.end());
  for (std::size_t i = 1; i < owner_.size(); ++i)
    if (owner_[i].first == owner_[i - 1].first)
      throw ParameterError("PostselectionPattern: mode " + std::to_string(owner_[i].first) +
                           " appears in more than one constraint");
}

PostselectionPattern PostselectionPattern::one_per_mode(std::span<const int> modes) {
  std::vector<ModeConstraint> cons;
  cons.reserve(modes.size());
  for (int m : modes) cons.push_back({{m}, std::nullopt, 1});
  return PostselectionPattern(std::move(cons));
}

bool PostselectionPattern::accepts(const OccupationVector& occupation) const {
  if (occupation.total() != total_) return false;
  std::vector<int> seen(constraints_.size(), 0);
  for (const auto& e : occupation.entries()) {
    auto it = std::lower_bound(owner_.begin(), owner_.end(), std::pair{e.label.spatial, -1});
    if (it == owner_.end() || it->first != e.label.spatial) return false;
    const auto& con = constraints_[it->second];
    if (con.level && *con.level != e.label.internal) return false;
    seen[it->second] += e.count;
  }
  for (std::size_t c = 0; c < constraints_.size(); ++c)
    if (seen[c] != constraints_[c].count) return false;
  return true;
}

std::vector<int> slot_capacities(const PostselectionPattern& pattern, int modes, int levels) {
  std::vector<int> cap(static_cast<std::size_t>(modes) * levels, 0);
  for (const auto& con : pattern.constraints()) {
    for (int m : con.modes) {
      if (m < 0 || m >= modes) throw DimensionError("slot_capacities: mode out of range");
      for (int s = 0; s < levels; ++s)
        if (!con.level || *con.level == s) cap[static_cast<std::size_t>(m) * levels + s] = con.count;
    }
  }
  return cap;
}

Projection project(const FockState& s, const PostselectionPattern& pattern) {
  FockState::TermMap kept;
  for (const auto& [occ, amp] : s.terms())
    if (pattern.accepts(occ)) kept.emplace(occ, amp);
  FockState branch =
      FockState::from_terms(s.modes(), s.levels(), s.photon_number(), std::move(kept));
  const double prob = branch.norm_sq();
  Projection result{branch, prob, std::nullopt};
  if (prob > 0.0) result.normalized = normalize(branch);
  return result;
}

void DickeSpec::validate() const {
  if (k.empty()) throw SpecError("DickeSpec: empty k-vector");
  int sum = 0;
  for (int kj : k) {
    if (kj < 0) throw SpecError("DickeSpec: negative k_j");
    sum += kj;
  }
  if (n < 1 || sum != n) {
    std::ostringstream msg;
    msg << "DickeSpec: sum of k (" << sum << ") must equal N (" << n << ") >= 1";
    throw SpecError(msg.str());
  }
}

QuditState::QuditState(int qudits, int levels, Eigen::VectorXcd amplitudes)
    : qudits_(qudits), levels_(levels), amplitudes_(std::move(amplitudes)) {
  if (qudits < 1 || levels < 1) throw DimensionError("QuditState: invalid dimensions");
  double dim = std::pow(double(levels), qudits);
  if (dim > kMaxQuditDimension)
    throw CapacityError("QuditState: d^N exceeds " + std::to_string(kMaxQuditDimension));
  if (amplitudes_.size() != static_cast<Eigen::Index>(dim))
    throw DimensionError("QuditState: amplitude vector has wrong length");
}

std::size_t QuditState::index(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != qudits_)
    throw DimensionError("QuditState: wrong number of digits");
  std::size_t idx = 0;
  for (int v : digits) {
    if (v < 0 || v >= levels_) throw DimensionError("QuditState: digit out of range");
    idx = idx * levels_ + v;
  }
  return idx;
}

Amplitude QuditState::amplitude(std::span<const int> digits) const {
  return amplitudes_(static_cast<Eigen::Index>(index(digits)));
}

QuditState extract_qudits(const FockState& s, std::span<const int> register_modes) {
  if (s.is_null()) throw DegenerateStateError("extract_qudits: null state");
  const int n = static_cast<int>(register_modes.size());
  const int d = s.levels();
  const auto dim = static_cast<Eigen::Index>(std::llround(std::pow(double(d), n)));
  if (double(dim) > kMaxQuditDimension)
    throw CapacityError("extract_qudits: d^N exceeds " + std::to_string(kMaxQuditDimension));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);

  std::vector<int> sorted_register(register_modes.begin(), register_modes.end());
  std::sort(sorted_register.begin(), sorted_register.end());

  std::optional<OccupationVector> ancilla;
  std::vector<int> digits(n);
  for (const auto& [occ, amp] : s.terms()) {
    OccupationVector rest;
    for (const auto& e : occ.entries())
      if (!std::binary_search(sorted_register.begin(), sorted_register.end(), e.label.spatial))
        rest.add(e.label, e.count);
    if (!ancilla) {
      ancilla = rest;
    } else if (*ancilla != rest) {
      throw EntangledAncillaError("extract_qudits: non-register occupation differs between " +
                                  ancilla->to_string() + " and " + rest.to_string());
    }

    for (int i = 0; i < n; ++i) {
      if (occ.spatial_count(register_modes[i]) != 1)
        throw EncodingError("extract_qudits: term " + occ.to_string() +
                            " does not hold exactly one photon in register mode " +
                            std::to_string(register_modes[i]));
      for (const auto& e : occ.entries())
        if (e.label.spatial == register_modes[i]) digits[i] = e.label.internal;
    }
    std::size_t idx = 0;
    for (int v : digits) idx = idx * d + v;
    amps(static_cast<Eigen::Index>(idx)) += amp;
  }

  const double norm = amps.norm();
  if (!(norm > 0.0)) throw DegenerateStateError("extract_qudits: zero register amplitude");
  amps /= norm;
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (std::abs(amps(i)) > kPruneThreshold) {
      amps *= std::conj(amps(i)) / std::abs(amps(i));
      amps(i) = std::abs(amps(i));
      break;
    }
  }
  return QuditState(n, d, std::move(amps));
}

FockState embed_qudits(const QuditState& q, std::span<const int> register_modes, int modes) {
  if (static_cast<int>(register_modes.size()) != q.qudits())
    throw DimensionError("embed_qudits: register size differs from qudit count");
  FockState::TermMap terms;
  const int d = q.levels();
  for (Eigen::Index idx = 0; idx < q.amplitudes().size(); ++idx) {
    const Amplitude a = q.amplitudes()(idx);
    if (std::abs(a) < kPruneThreshold) continue;
    OccupationVector occ;
    auto rem = static_cast<std::size_t>(idx);
    for (int i = q.qudits() - 1; i >= 0; --i) {
      occ.add({register_modes[i], static_cast<int>(rem % d)});
      rem /= d;
    }
    terms.emplace(std::move(occ), a);
  }
  return FockState::from_terms(modes, d, q.qudits(), std::move(terms));
}

QuditState dicke(const DickeSpec& spec) {
  spec.validate();
  const int d = spec.levels();
  std::vector<int> arrangement;
  arrangement.reserve(spec.n);
  for (int s = 0; s < d; ++s) arrangement.insert(arrangement.end(), spec.k[s], s);

  double log_amp = -std::lgamma(spec.n + 1.0);
  for (int kj : spec.k) log_amp += std::lgamma(kj + 1.0);
  const double amp = std::exp(0.5 * log_amp);

  const auto dim = static_cast<Eigen::Index>(std::llround(std::pow(double(d), spec.n)));
  if (double(dim) > kMaxQuditDimension)
    throw CapacityError("dicke: d^N exceeds " + std::to_string(kMaxQuditDimension));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  // Sorted start, so next_permutation visits each distinct arrangement once.
  do {
    std::size_t idx = 0;
    for (int v : arrangement) idx = idx * d + v;
    amps(static_cast<Eigen::Index>(idx)) = amp;
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return QuditState(spec.n, d, std::move(amps));
}

double fidelity(const QuditState& a, const QuditState& b) {
  if (a.qudits() != b.qudits() || a.levels() != b.levels())
    throw DimensionError("fidelity: qudit states of different dimension");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

std::vector<Amplitude> phase_correction(int n, int herald_mode) {
  if (n < 1) throw ParameterError("phase_correction: N must be positive");
  if (herald_mode < 1 || herald_mode > n)
    throw ParameterError("phase_correction: herald_mode must lie in 1..N");
  std::vector<Amplitude> phases(n);
  for (int l = 0; l < n; ++l) {
    const int e = (l * (herald_mode - 1)) % n;
    phases[l] = e == 0 ? Amplitude{1.0} : std::polar(1.0, 2.0 * std::numbers::pi * e / n);
  }
  return phases;
}

FockState apply_mode_phases(const FockState& s, int level, std::span<const Amplitude> phases) {
  FockState::TermMap terms;
  for (const auto& [occ, amp] : s.terms()) {
    Amplitude a = amp;
    for (const auto& e : occ.entries()) {
      if (e.label.internal != level || e.label.spatial >= static_cast<int>(phases.size())) continue;
      for (int c = 0; c < e.count; ++c) a *= phases[e.label.spatial];
    }
    terms.emplace(occ, a);
  }
  return FockState::from_terms(s.modes(), s.levels(), s.photon_number(), std::move(terms));
}

}  // namespace dicke
