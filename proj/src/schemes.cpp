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

#include "dicke/schemes.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

std::string describe(const SchemeSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.scheme) << " N=" << spec.n << " k=(";
  for (std::size_t i = 0; i < spec.k.size(); ++i) out << (i ? "," : "") << spec.k[i];
  out << ")";
  return out.str();
}

void check_common(const SchemeSpec& spec) {
  if (spec.n < 1) throw SpecError(describe(spec) + ": N must be positive");
  if (spec.n > kMaxSimulatedN)
    throw CapacityError(describe(spec) + ": simulation is capped at N=" +
                        std::to_string(kMaxSimulatedN));
  DickeSpec{spec.n, spec.k}.validate();
}

std::vector<int> iota_modes(int count, int first = 0) {
  std::vector<int> modes(count);
  std::iota(modes.begin(), modes.end(), first);
  return modes;
}

// Single photons in modes first, first+1, ...: k_0 of level 0, then k_1 of level 1, ...
OccupationVector single_photons_by_level(std::span<const int> k, int first = 0) {
  OccupationVector occ;
  int mode = first;
  for (int s = 0; s < static_cast<int>(k.size()); ++s)
    for (int i = 0; i < k[s]; ++i) occ.add({mode++, s});
  return occ;
}

TransferMatrix chain(std::initializer_list<TransferMatrix> stages) {
  auto it = stages.begin();
  TransferMatrix acc = *it;
  for (++it; it != stages.end(); ++it) acc = sequential(acc, *it);
  return acc;
}

BuiltScheme build_operator_all_one(const SchemeSpec& spec) {
  const int n = spec.n;
  const int d = static_cast<int>(spec.k.size());
  const auto reg = iota_modes(n);
  return {all_one(n, d),
          basis_state(n, d, single_photons_by_level(spec.k)),
          PostselectionPattern::one_per_mode(reg),
          {n, spec.k},
          1.0,
          reg,
          {},
          true};
}

BuiltScheme build_fock_single_mode(const SchemeSpec& spec) {
  const int n = spec.n;
  const int d = static_cast<int>(spec.k.size());
  OccupationVector in;
  for (int s = 0; s < d; ++s) in.add({0, s}, spec.k[s]);
  const auto reg = iota_modes(n);
  return {dft(n, d), basis_state(n, d, in), PostselectionPattern::one_per_mode(reg),
          {n, spec.k}, 1.0, reg, {}};
}

// N single photons into one N-port splitter; its port 0 feeds the
// postselection multiport, ports 1..N-1 must stay dark.
BuiltScheme build_prep_single_multiport(const SchemeSpec& spec) {
  const int n = spec.n;
  const int d = static_cast<int>(spec.k.size());
  const auto reg = iota_modes(n);
  const auto input = basis_state(n, d, single_photons_by_level(spec.k));
  if (n == 1)
    return {dft(1, d), input, PostselectionPattern::one_per_mode(reg), {n, spec.k}, 1.0, reg, {}};

  std::vector<int> targets(n);
  targets[0] = 0;
  for (int i = 1; i < n; ++i) targets[i] = n + i - 1;
  const std::vector<TransferMatrix> second{dft(n, d), identity(n - 1, d)};
  const auto circuit = chain({dft(n, d), route(2 * n - 1, targets, d), parallel(second)});
  return {circuit, input, PostselectionPattern::one_per_mode(reg), {n, spec.k}, double(n), reg,
          {}};
}

// One k_j-port splitter per level. Port 0 of every group is merged into the
// final splitter's input 0 (an ideal relabeling, levels never collide), or
// into input j when separate_inputs is set.
BuiltScheme build_prep_per_level(const SchemeSpec& spec) {
  const int n = spec.n;
  const int d = static_cast<int>(spec.k.size());
  for (int kj : spec.k)
    if (kj < 1) throw SpecError(describe(spec) + ": prep_per_level needs every k_j >= 1");

  std::vector<TransferMatrix> groups;
  for (int kj : spec.k) groups.push_back(dft(kj, d));
  const int discards = n - d;
  std::vector<int> targets;
  int next_discard = n;
  for (int s = 0; s < d; ++s) {
    targets.push_back(spec.separate_inputs ? s : 0);
    for (int i = 1; i < spec.k[s]; ++i) targets.push_back(next_discard++);
  }
  std::vector<TransferMatrix> last{dft(n, d)};
  if (discards > 0) last.push_back(identity(discards, d));
  const auto circuit = chain({parallel(groups), route(n + discards, targets, d), parallel(last)});

  const auto reg = iota_modes(n);
  BuiltScheme built{circuit,
                    basis_state(n, d, single_photons_by_level(spec.k)),
                    PostselectionPattern::one_per_mode(reg),
                    {n, spec.k},
                    double(*std::min_element(spec.k.begin(), spec.k.end())),
                    reg,
                    {}};
  if (spec.separate_inputs) {
    // Level j entered input j, picking up omega^(j l) at output l.
    for (int s = 1; s < d; ++s) {
      LevelPhases lp{s, std::vector<Amplitude>(n)};
      for (int l = 0; l < n; ++l) {
        const int e = (s * l) % n;
        lp.phases[l] = std::polar(1.0, -2.0 * std::numbers::pi * e / n);
      }
      built.corrections.push_back(std::move(lp));
    }
  }
  return built;
}

// Input layout: main photon i in mode 2i (its splitter's vacuum port is
// 2i+1), then the k_j single photons of level j on consecutive modes.
// Output layout: 0..N-1 qudit register, N..2N-1 herald multiport ports, then
// the dark ports of the k_j-port bunching splitters.
BuiltScheme build_ancilla(const SchemeSpec& spec) {
  const int n = spec.n;
  const int d = static_cast<int>(spec.k.size());
  if (d < 2) throw SpecError(describe(spec) + ": ancilla scheme needs d >= 2");
  const int big_k = n - spec.k[0];
  if (spec.k[0] < 1 || big_k < 1)
    throw SpecError(describe(spec) + ": ancilla scheme needs 1 <= K = N - k_0 <= N - 1");
  for (int s = 1; s < d; ++s)
    if (spec.k[s] < 1) throw SpecError(describe(spec) + ": ancilla levels need k_j >= 1");
  const double p = spec.p.value_or(formulas::p_opt(n, big_k));
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("ancilla: p must lie in [0, 1]");
  if (spec.herald_mode < 1 || spec.herald_mode > n)
    throw ParameterError("ancilla: herald_mode must lie in 1..N");

  std::vector<TransferMatrix> front(n, beam_splitter(p, d, spec.completion));
  for (int s = 1; s < d; ++s) front.push_back(dft(spec.k[s], d));
  const TransferMatrix stage1 = parallel(front);

  const int dark = big_k - (d - 1);
  const int outputs = 2 * n + dark;
  Eigen::MatrixXcd net = Eigen::MatrixXcd::Zero(stage1.outputs(), outputs);
  const Eigen::MatrixXcd herald = dft(n, 1).block(0);
  for (int i = 0; i < n; ++i) {
    net(2 * i, i) = 1.0;                                         // transmitted
    net.block(2 * i + 1, n, 1, n) = herald.row(i);               // reflected
  }
  int row = 2 * n;
  int next_dark = 2 * n;
  for (int s = 1; s < d; ++s) {
    // Bunched port: even fan-out over the register at level s.
    net.block(row++, 0, 1, n).setConstant(1.0 / std::sqrt(double(n)));
    for (int i = 1; i < spec.k[s]; ++i) net(row++, next_dark++) = 1.0;
  }
  const TransferMatrix circuit = sequential(stage1, TransferMatrix::uniform(net, d));

  OccupationVector in;
  for (int i = 0; i < n; ++i) in.add({2 * i, 0});
  int mode = 2 * n;
  for (int s = 1; s < d; ++s)
    for (int i = 0; i < spec.k[s]; ++i) in.add({mode++, s});

  std::vector<ModeConstraint> cons;
  for (int l = 0; l < n; ++l) cons.push_back({{l}, std::nullopt, 1});
  cons.push_back({{n + spec.herald_mode - 1}, 0, big_k});

  BuiltScheme built{circuit,
                    basis_state(circuit.inputs(), d, in),
                    PostselectionPattern(std::move(cons)),
                    {n, spec.k},
                    double(n),
                    iota_modes(n),
                    {}};
  if (spec.herald_mode != 1) built.corrections.push_back({0, phase_correction(n, spec.herald_mode)});
  return built;
}

// Four photons (H, H, V, V) each split by its own three-splitter tree. At
// detector j, one PBS merges branch j of photons 1 (H) and 3 (V), another
// merges photons 2 (H) and 4 (V), and a balanced splitter joins the two.
BuiltScheme build_appendix_d4(const SchemeSpec& spec) {
  if (spec.n != 4 || spec.k != std::vector<int>{2, 2})
    throw SpecError(describe(spec) + ": appendix_d4 is defined for N=4, k=(2,2) only");
  constexpr int d = 2;

  const std::vector<TransferMatrix> trees(4, bs_tree(4, d));
  // Tree t, branch j sits at 4t + j.
  const int pbs_slot[4] = {0, 2, 1, 3};
  std::vector<int> to_pbs(16);
  for (int t = 0; t < 4; ++t)
    for (int j = 0; j < 4; ++j) to_pbs[4 * t + j] = 4 * j + pbs_slot[t];
  const std::vector<TransferMatrix> pbss(8, pbs());

  std::vector<int> to_bs(16);
  for (int j = 0; j < 4; ++j) {
    to_bs[4 * j] = 2 * j;
    to_bs[4 * j + 2] = 2 * j + 1;
    to_bs[4 * j + 1] = 8 + 2 * j;
    to_bs[4 * j + 3] = 8 + 2 * j + 1;
  }
  std::vector<TransferMatrix> joins(4, beam_splitter(0.5, d, spec.completion));
  joins.push_back(identity(8, d));

  std::vector<int> to_out(16);
  for (int j = 0; j < 4; ++j) {
    to_out[2 * j] = j;
    to_out[2 * j + 1] = 4 + j;
  }
  for (int m = 8; m < 16; ++m) to_out[m] = m;

  const auto circuit = chain({parallel(trees), route(16, to_pbs, d), parallel(pbss),
                              route(16, to_bs, d), parallel(joins), route(16, to_out, d)});
  const OccupationVector in{{{0, 0}, 1}, {{4, 0}, 1}, {{8, 1}, 1}, {{12, 1}, 1}};
  const auto reg = iota_modes(4);
  return {circuit, basis_state(16, d, in), PostselectionPattern::one_per_mode(reg),
          {4, {2, 2}}, 1.0, reg, {}};
}

}  // namespace

BuiltScheme build_scheme(const SchemeSpec& spec) {
  check_common(spec);
  switch (spec.scheme) {
    case Scheme::kOperatorAllOne: return build_operator_all_one(spec);
    case Scheme::kFockSingleMode: return build_fock_single_mode(spec);
    case Scheme::kPrepSingleMultiport: return build_prep_single_multiport(spec);
    case Scheme::kPrepPerLevel: return build_prep_per_level(spec);
    case Scheme::kAncilla: return build_ancilla(spec);
    case Scheme::kAppendixD4: return build_appendix_d4(spec);
  }
  throw SpecError("build_scheme: unknown scheme");
}

RunReport run(const SchemeSpec& spec, double tolerance) {
  const auto start = std::chrono::steady_clock::now();
  const BuiltScheme built = build_scheme(spec);

  RunReport report;
  report.spec = spec;
  if (spec.scheme == Scheme::kAncilla && !report.spec.p)
    report.spec.p = formulas::p_opt(spec.n, spec.n - spec.k[0]);
  report.parallel_factor = built.parallel_factor;
  report.formula =
      formulas::scheme_probability(spec.scheme, spec.n, spec.k, report.spec.p).value;

  // Only the renormalized operator output needs the rejected terms.
  FockState out =
      built.renormalize_output
          ? normalize(apply_transfer(built.circuit, built.input))
          : apply_transfer(built.circuit, built.input,
                           slot_capacities(built.pattern, built.circuit.outputs(),
                                           built.circuit.levels()));
  const Projection proj = project(out, built.pattern);
  report.probability = proj.probability;
  report.state = FockState(out.modes(), out.levels(), out.photon_number());

  if (proj.normalized) {
    const QuditState target = dicke(built.target);
    report.uncorrected_fidelity =
        fidelity(extract_qudits(*proj.normalized, built.register_modes), target);
    FockState corrected = *proj.normalized;
    for (const auto& c : built.corrections) corrected = apply_mode_phases(corrected, c.level, c.phases);
    report.fidelity = fidelity(extract_qudits(corrected, built.register_modes), target);
    report.state = std::move(corrected);
  }

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (report.formula &&
      std::abs(report.probability * report.parallel_factor - *report.formula) > tolerance) {
    std::ostringstream msg;
    msg.precision(15);
    msg << describe(spec) << ": simulated probability x parallel factor = "
        << report.probability * report.parallel_factor << " but closed form = " << *report.formula;
    throw VerificationError(msg.str());
  }
  return report;
}

std::vector<std::vector<int>> compositions(int n, int d, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(d, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d - 1) {
      if (remaining >= min_part) {
        cur[pos] = remaining;
        out.push_back(cur);
      }
      return;
    }
    for (int v = min_part; v <= remaining - min_part * (d - 1 - pos); ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (d >= 1 && n >= 0) rec(rec, 0, n);
  return out;
}

}  // namespace dicke
