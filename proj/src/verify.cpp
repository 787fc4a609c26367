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

#include "dicke/verify.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "dicke/errors.hpp"
#include "dicke/evolve.hpp"
#include "dicke/formulas.hpp"
#include "dicke/schemes.hpp"

namespace dicke {

namespace {

constexpr double kProbabilityTolerance = 1e-10;
constexpr double kFidelityTolerance = 1e-10;
constexpr double kOracleTolerance = 1e-9;

// Tallies cases of one check and keeps the first failure for the report.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void pass() { ++cases_; }
  void fail(const std::string& why) {
    ++cases_;
    ++failures_;
    if (first_failure_.empty()) first_failure_ = why;
  }

  CheckResult result() const {
    std::ostringstream detail;
    detail << cases_ << " cases";
    if (failures_) detail << ", " << failures_ << " failed; first: " << first_failure_;
    return {name_, failures_ == 0 && cases_ > 0, detail.str()};
  }

 private:
  std::string name_;
  int cases_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

SchemeSpec make_spec(Scheme scheme, int n, std::vector<int> k, std::optional<double> p = std::nullopt,
                     int herald_mode = 1) {
  SchemeSpec spec;
  spec.scheme = scheme;
  spec.n = n;
  spec.k = std::move(k);
  spec.p = p;
  spec.herald_mode = herald_mode;
  return spec;
}

std::string label(const SchemeSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.scheme) << " N=" << spec.n << " k=(";
  for (std::size_t i = 0; i < spec.k.size(); ++i) out << (i ? "," : "") << spec.k[i];
  out << ")";
  if (spec.p) out << " p=" << *spec.p;
  if (spec.scheme == Scheme::kAncilla) out << " herald=" << spec.herald_mode;
  return out.str();
}

void check_run(Tally& tally, const SchemeSpec& spec) {
  try {
    const RunReport r = run(spec, kProbabilityTolerance);
    if (std::abs(r.fidelity - 1.0) > kFidelityTolerance) {
      std::ostringstream msg;
      msg.precision(15);
      msg << label(spec) << ": fidelity " << r.fidelity;
      tally.fail(msg.str());
      return;
    }
    if (spec.scheme == Scheme::kAncilla && spec.herald_mode != 1 && !(r.uncorrected_fidelity < 1.0 - kFidelityTolerance)) {
      std::ostringstream msg;
      msg << label(spec) << ": uncorrected fidelity " << r.uncorrected_fidelity << " is not below 1";
      tally.fail(msg.str());
      return;
    }
    tally.pass();
  } catch (const Error& e) {
    tally.fail(e.what());
  }
}

// Random occupation of `photons` photons over (modes, levels).
OccupationVector random_occupation(int photons, int modes, int levels, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mode(0, modes - 1);
  std::uniform_int_distribution<int> level(0, levels - 1);
  OccupationVector occ;
  for (int i = 0; i < photons; ++i) occ.add({mode(rng), level(rng)});
  return occ;
}

}  // namespace

Suite suite_from_string(std::string_view name) {
  if (name == "all") return Suite::kAll;
  if (name == "schemes") return Suite::kSchemes;
  if (name == "oracle") return Suite::kOracle;
  if (name == "formulas") return Suite::kFormulas;
  throw SpecError("unknown verification suite '" + std::string(name) + "'");
}

Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = {gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const auto d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

std::vector<CheckResult> verify_schemes(int max_n) {
  Tally op("schemes/operator_all_one");
  Tally fock("schemes/fock_single_mode");
  Tally single("schemes/prep_single_multiport");
  Tally per_level("schemes/prep_per_level");
  Tally ancilla("schemes/ancilla");
  Tally appendix("schemes/appendix_d4");

  for (int n = 1; n <= max_n; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for (const auto& k : compositions(n, d, 0)) {
        check_run(op, make_spec(Scheme::kOperatorAllOne, n, k));
        check_run(fock, make_spec(Scheme::kFockSingleMode, n, k));
        check_run(single, make_spec(Scheme::kPrepSingleMultiport, n, k));
      }
      for (const auto& k : compositions(n, d, 1)) {
        SchemeSpec spec = make_spec(Scheme::kPrepPerLevel, n, k);
        check_run(per_level, spec);
        spec.separate_inputs = true;
        check_run(per_level, spec);
      }
      if (d < 2) continue;
      for (const auto& k : compositions(n, d, 1)) {
        const int big_k = n - k[0];
        for (double p : {0.3, 0.5, formulas::p_opt(n, big_k)}) {
          for (int h = 1; h <= n; ++h) {
            check_run(ancilla, make_spec(Scheme::kAncilla, n, k, p, h));
          }
        }
      }
    }
  }
  check_run(appendix, make_spec(Scheme::kAppendixD4, 4, {2, 2}));
  return {op.result(), fock.result(), single.result(), per_level.result(), ancilla.result(),
          appendix.result()};
}

CheckResult verify_oracle(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> modes_dist(2, 6);
  std::uniform_int_distribution<int> photons_dist(1, 4);
  std::uniform_int_distribution<int> levels_dist(1, 2);
  double worst = 0.0;
  int compared = 0;
  for (int t = 0; t < trials; ++t) {
    const int modes = modes_dist(rng);
    const int photons = photons_dist(rng);
    const int levels = levels_dist(rng);
    std::vector<Eigen::MatrixXcd> blocks;
    for (int s = 0; s < levels; ++s) blocks.push_back(random_unitary(modes, rng));
    const TransferMatrix u(blocks);
    const auto in = random_occupation(photons, modes, levels, rng);
    const FockState out = apply_transfer(u, basis_state(modes, levels, in));
    for (const auto& [occ, amp] : out.terms()) {
      worst = std::max(worst, std::abs(amp - transition_amplitude(u, in, occ)));
      ++compared;
    }
    // Outputs the expansion pruned or never produced must have zero amplitude too.
    for (int extra = 0; extra < 3; ++extra) {
      const auto occ = random_occupation(photons, modes, levels, rng);
      worst = std::max(worst, std::abs(out.amplitude(occ) - transition_amplitude(u, in, occ)));
      ++compared;
    }
  }
  std::ostringstream detail;
  detail << trials << " random unitaries, " << compared << " amplitudes, max deviation " << worst;
  return {"oracle/expansion_vs_permanent", worst <= kOracleTolerance, detail.str()};
}

std::vector<CheckResult> verify_formulas() {
  using namespace formulas;
  std::vector<CheckResult> out;

  {
    Tally t("formulas/qubit_qutrit_specializations");
    for (int n = 2; n <= 12; ++n) {
      for (int k1 = 1; k1 < n; ++k1) {
        const std::vector<int> k{n - k1, k1};
        const double pairs[3][2] = {{qubit::p_single_multiport(n, k1), p_single_multiport(n, k)},
                                    {qubit::p_per_level(n, k1), p_per_level(n, k)},
                                    {qubit::p_ancilla_final(n, k1), p_ancilla_final(n, k)}};
        for (const auto& pr : pairs) {
          if (std::abs(pr[0] - pr[1]) <= 1e-12 * std::max(1.0, std::abs(pr[1]))) t.pass();
          else t.fail("qubit N=" + std::to_string(n) + " k1=" + std::to_string(k1));
        }
      }
      for (int k1 = 1; k1 < n; ++k1) {
        for (int k2 = 1; k1 + k2 < n; ++k2) {
          const std::vector<int> k{n - k1 - k2, k1, k2};
          const double pairs[3][2] = {
              {qutrit::p_single_multiport(n, k1, k2), p_single_multiport(n, k)},
              {qutrit::p_per_level(n, k1, k2), p_per_level(n, k)},
              {qutrit::p_ancilla_final(n, k1, k2), p_ancilla_final(n, k)}};
          for (const auto& pr : pairs) {
            if (std::abs(pr[0] - pr[1]) <= 1e-12 * std::max(1.0, std::abs(pr[1]))) t.pass();
            else t.fail("qutrit N=" + std::to_string(n));
          }
        }
      }
    }
    out.push_back(t.result());
  }

  {
    Tally t("formulas/p_opt_is_maximum");
    for (int n = 2; n <= 20; ++n) {
      for (int big_k = 1; big_k < n; ++big_k) {
        const double best = p_ancilla_optical(n, big_k, p_opt(n, big_k));
        const bool matches = std::abs(best - p_ancilla_optical_max(n, big_k)) <= 1e-12;
        bool dominant = true;
        for (double dp : {-0.01, 0.01}) {
          const double q = p_opt(n, big_k) + dp;
          if (q >= 0.0 && q <= 1.0 && !(p_ancilla_optical(n, big_k, q) < best)) dominant = false;
        }
        if (matches && dominant) t.pass();
        else t.fail("N=" + std::to_string(n) + " K=" + std::to_string(big_k));
      }
    }
    out.push_back(t.result());
  }

  {
    // Qubit K=1: first integer N where the ancilla scheme wins.
    auto first_win = [](auto other) {
      for (int n = 2; n <= 30; ++n)
        if (p_ancilla_final(n, std::vector<int>{n - 1, 1}) > other(n)) return n;
      return -1;
    };
    const int vs_level = first_win([](int n) { return p_per_level(n, std::vector<int>{n - 1, 1}); });
    const int vs_op = first_win([](int n) { return p_op(n); });
    out.push_back({"formulas/qubit_crossover_integers", vs_level == 3 && vs_op == 4,
                   "vs per-level at N=" + std::to_string(vs_level) + ", vs N!/N^N at N=" +
                       std::to_string(vs_op)});
  }

  {
    // For K=3 the ratio still rises between N=5 and N=6; the decrease is
    // strict from N=K+3 on.
    Tally t("formulas/asymptotic_boost");
    for (int big_k = 1; big_k <= 3; ++big_k) {
      double prev = INFINITY;
      for (int n = big_k + 3; n <= 30; ++n) {
        const double ratio = p_op(n) / p_ancilla_final(n, std::vector<int>{n - big_k, big_k});
        if (ratio < prev) t.pass();
        else t.fail("K=" + std::to_string(big_k) + " N=" + std::to_string(n));
        prev = ratio;
      }
    }
    out.push_back(t.result());
  }

  {
    struct Target {
      Family family;
      Contour contour;
      int k1_max;
      double slope;
      const char* name;
    };
    const Target targets[] = {{Family::kQubit, Contour::kFirst, 20, 2.41059, "qubit/first"},
                              {Family::kQubit, Contour::kSecond, 20, 6.37539, "qubit/second"},
                              {Family::kQutrit, Contour::kFirst, 10, 4.8134, "qutrit/first"},
                              {Family::kQutrit, Contour::kSecond, 10, 12.6813, "qutrit/second"}};
    for (const auto& tg : targets) {
      try {
        const auto fit = contour_fit(tg.family, tg.contour, 1, tg.k1_max);
        const double rel = std::abs(fit.slope - tg.slope) / tg.slope;
        std::ostringstream detail;
        detail << "slope " << fit.slope << " vs " << tg.slope << " (" << 100 * rel
               << "%), intercept " << fit.intercept << ", residual rms " << fit.residual_rms;
        out.push_back({std::string("formulas/contour_fit_") + tg.name, rel <= 0.10, detail.str()});
      } catch (const Error& e) {
        out.push_back({std::string("formulas/contour_fit_") + tg.name, false, e.what()});
      }
    }
  }
  return out;
}

std::vector<CheckResult> verify(Suite suite) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  if (suite == Suite::kAll || suite == Suite::kSchemes) append(verify_schemes());
  if (suite == Suite::kAll || suite == Suite::kOracle) out.push_back(verify_oracle());
  if (suite == Suite::kAll || suite == Suite::kFormulas) append(verify_formulas());
  return out;
}

}  // namespace dicke
