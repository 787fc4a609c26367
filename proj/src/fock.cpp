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

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

void require_same_system(const FockState& a, const FockState& b, const char* what) {
  if (a.modes() != b.modes() || a.levels() != b.levels()) {
    std::ostringstream msg;
    msg << what << ": system mismatch (" << a.modes() << "," << a.levels() << ") vs ("
        << b.modes() << "," << b.levels() << ")";
    throw DimensionError(msg.str());
  }
}

}  // namespace

OccupationVector::OccupationVector(std::initializer_list<OccupationEntry> entries)
    : OccupationVector(std::span<const OccupationEntry>(entries.begin(), entries.size())) {}

OccupationVector::OccupationVector(std::span<const OccupationEntry> entries) {
  for (const auto& e : entries) add(e.label, e.count);
}

int OccupationVector::count(ModeLabel label) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const OccupationEntry& e, ModeLabel l) { return e.label < l; });
  return (it != entries_.end() && it->label == label) ? it->count : 0;
}

int OccupationVector::spatial_count(int spatial) const noexcept {
  int n = 0;
  for (const auto& e : entries_)
    if (e.label.spatial == spatial) n += e.count;
  return n;
}

int OccupationVector::level_count(int internal) const noexcept {
  int n = 0;
  for (const auto& e : entries_)
    if (e.label.internal == internal) n += e.count;
  return n;
}

void OccupationVector::add(ModeLabel label, int n) {
  if (n < 0) throw ParameterError("OccupationVector::add: negative photon count");
  if (n == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const OccupationEntry& e, ModeLabel l) { return e.label < l; });
  if (it != entries_.end() && it->label == label) {
    it->count += n;
  } else {
    entries_.insert(it, OccupationEntry{label, n});
  }
  total_ += n;
}

void OccupationVector::validate(int modes, int levels) const {
  for (const auto& e : entries_) {
    if (e.label.spatial < 0 || e.label.spatial >= modes || e.label.internal < 0 ||
        e.label.internal >= levels) {
      std::ostringstream msg;
      msg << "mode label (" << e.label.spatial << "," << e.label.internal
          << ") outside system (L=" << modes << ", d=" << levels << ")";
      throw DimensionError(msg.str());
    }
  }
}

double OccupationVector::factorial_product() const noexcept {
  double p = 1.0;
  for (const auto& e : entries_)
    for (int i = 2; i <= e.count; ++i) p *= i;
  return p;
}

std::string OccupationVector::to_string() const {
  if (entries_.empty()) return "vac";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) out << ' ';
    first = false;
    out << '(' << e.label.spatial << ',' << e.label.internal << ")^" << e.count;
  }
  return out.str();
}

FockState::FockState(int modes, int levels, int photon_number)
    : modes_(modes), levels_(levels), photon_number_(photon_number) {
  if (modes < 0 || levels < 1 || photon_number < 0)
    throw DimensionError("FockState: invalid system dimensions");
}

FockState FockState::from_terms(int modes, int levels, int photon_number, TermMap terms) {
  FockState s(modes, levels, photon_number);
  for (auto it = terms.begin(); it != terms.end();) {
    it->first.validate(modes, levels);
    if (it->first.total() != photon_number)
      throw DimensionError("FockState: term " + it->first.to_string() +
                           " outside photon-number sector " + std::to_string(photon_number));
    if (std::abs(it->second) < kPruneThreshold) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  s.terms_ = std::move(terms);
  return s;
}

Amplitude FockState::amplitude(const OccupationVector& occupation) const {
  auto it = terms_.find(occupation);
  return it == terms_.end() ? Amplitude{} : it->second;
}

double FockState::norm_sq() const noexcept {
  double n = 0.0;
  for (const auto& [occ, amp] : terms_) n += std::norm(amp);
  return n;
}

FockState basis_state(int modes, int levels, const OccupationVector& occupation) {
  occupation.validate(modes, levels);
  return FockState::from_terms(modes, levels, occupation.total(), {{occupation, Amplitude{1.0}}});
}

FockState vacuum(int modes, int levels) { return basis_state(modes, levels, OccupationVector{}); }

Amplitude inner_product(const FockState& a, const FockState& b) {
  require_same_system(a, b, "inner_product");
  if (a.photon_number() != b.photon_number()) return {};
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Amplitude acc{};
  for (const auto& [occ, amp] : small.terms()) {
    auto it = large.terms().find(occ);
    if (it == large.terms().end()) continue;
    // Both orders evaluate conj(a)*b.
    acc += (&small == &a) ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return acc;
}

double norm_sq(const FockState& s) { return s.norm_sq(); }

FockState normalize(const FockState& s) {
  const double n = s.norm_sq();
  if (!(n > 0.0)) throw DegenerateStateError("normalize: null state");
  return scale(s, Amplitude{1.0 / std::sqrt(n)});
}

FockState scale(const FockState& s, Amplitude c) {
  FockState::TermMap terms = s.terms();
  for (auto& [occ, amp] : terms) amp *= c;
  return FockState::from_terms(s.modes(), s.levels(), s.photon_number(), std::move(terms));
}

FockState add(const FockState& a, const FockState& b) {
  require_same_system(a, b, "add");
  if (a.photon_number() != b.photon_number())
    throw DimensionError("add: states belong to different photon-number sectors");
  FockState::TermMap terms = a.terms();
  for (const auto& [occ, amp] : b.terms()) terms[occ] += amp;
  return FockState::from_terms(a.modes(), a.levels(), a.photon_number(), std::move(terms));
}

FockState tensor(const FockState& a, const FockState& b) {
  require_same_system(a, b, "tensor");
  std::set<int> used_a;
  for (const auto& [occ, amp] : a.terms())
    for (const auto& e : occ.entries()) used_a.insert(e.label.spatial);
  for (const auto& [occ, amp] : b.terms())
    for (const auto& e : occ.entries())
      if (used_a.contains(e.label.spatial))
        throw ModeCollisionError("tensor: spatial mode " + std::to_string(e.label.spatial) +
                                 " occupied by both factors");

  FockState::TermMap terms;
  for (const auto& [occ_a, amp_a] : a.terms()) {
    for (const auto& [occ_b, amp_b] : b.terms()) {
      OccupationVector joined = occ_a;
      for (const auto& e : occ_b.entries()) joined.add(e.label, e.count);
      terms[joined] += amp_a * amp_b;
    }
  }
  return FockState::from_terms(a.modes(), a.levels(), a.photon_number() + b.photon_number(),
                               std::move(terms));
}

}  // namespace dicke
