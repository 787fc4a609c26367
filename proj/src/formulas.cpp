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

#include "dicke/formulas.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 6> kSchemeNames{{
    {Scheme::kOperatorAllOne, "operator_all_one"},
    {Scheme::kFockSingleMode, "fock_single_mode"},
    {Scheme::kPrepSingleMultiport, "prep_single_multiport"},
    {Scheme::kPrepPerLevel, "prep_per_level"},
    {Scheme::kAncilla, "ancilla"},
    {Scheme::kAppendixD4, "appendix_d4"},
}};

}  // namespace

std::string_view to_string(Scheme scheme) {
  for (const auto& [s, name] : kSchemeNames)
    if (s == scheme) return name;
  return "unknown";
}

Scheme scheme_from_string(std::string_view name) {
  for (const auto& [s, n] : kSchemeNames)
    if (n == name) return s;
  throw SpecError("unknown scheme '" + std::string(name) + "'");
}

namespace formulas {

namespace {

// x log x with 0 log 0 = 0, i.e. log(x^x) with 0^0 = 1.
double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

// log(k!/k^k)
double log_bunching(double k) { return std::lgamma(k + 1.0) - xlogx(k); }

int check_k(int n, std::span<const int> k, const char* what) {
  if (n < 1) throw SpecError(std::string(what) + ": N must be positive");
  if (k.empty()) throw SpecError(std::string(what) + ": empty k-vector");
  int sum = 0;
  for (int kj : k) {
    if (kj < 0) throw SpecError(std::string(what) + ": negative k_j");
    sum += kj;
  }
  if (sum != n) {
    std::ostringstream msg;
    msg << what << ": sum of k (" << sum << ") differs from N (" << n << ")";
    throw SpecError(msg.str());
  }
  return sum;
}

void check_ancilla(int n, int big_k, double p, const char* what) {
  if (big_k < 1 || big_k > n) throw ParameterError(std::string(what) + ": need 1 <= K <= N");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(what) + ": p must lie in [0, 1]");
}

// N!K!/(N-K)! p^(N-K) (1-p)^K
double ancilla_core(int n, int big_k, double p) {
  const double log_c = log_factorial(n) + log_factorial(big_k) - log_factorial(n - big_k);
  return std::exp(log_c) * std::pow(p, n - big_k) * std::pow(1.0 - p, big_k);
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw ParameterError("log_factorial: negative argument");
  if (n <= 20) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return std::log(static_cast<double>(f));
  }
  return std::lgamma(n + 1.0);
}

double p_op(int n) {
  if (n < 1) throw ParameterError("p_op: N must be positive");
  return std::exp(log_factorial(n) - n * std::log(double(n)));
}

double p_single_multiport(int n, std::span<const int> k) {
  check_k(n, k, "p_single_multiport");
  double log_p = log_factorial(n) - 2.0 * n * std::log(double(n)) + std::log(double(n));
  for (int kj : k) log_p += log_factorial(kj);
  return std::exp(log_p);
}

double p_per_level(int n, std::span<const int> k) {
  check_k(n, k, "p_per_level");
  const int k_min = *std::min_element(k.begin(), k.end());
  if (k_min < 1) throw SpecError("p_per_level: every level needs k_j >= 1");
  double log_p = log_factorial(n) - n * std::log(double(n)) + std::log(double(k_min));
  for (int kj : k) log_p += log_bunching(kj);
  return std::exp(log_p);
}

double p_ancilla_operator(int n, int big_k, double p) {
  check_ancilla(n, big_k, p, "p_ancilla_operator");
  return ancilla_core(n, big_k, p) * std::exp(-big_k * std::log(double(n)));
}

double p_ancilla_optical(int n, int big_k, double p) {
  check_ancilla(n, big_k, p, "p_ancilla_optical");
  // Herald multiport: all K reflected photons in one of N ports, N^-K each.
  return ancilla_core(n, big_k, p) * std::exp((1.0 - 2.0 * big_k) * std::log(double(n)));
}

double p_opt(int n, int big_k) {
  check_ancilla(n, big_k, 0.5, "p_opt");
  return double(n - big_k) / n;
}

double p_ancilla_optical_max(int n, int big_k) {
  check_ancilla(n, big_k, 0.5, "p_ancilla_optical_max");
  const double log_p = log_factorial(n) + log_factorial(big_k) - log_factorial(n - big_k) +
                       xlogx(n - big_k) + xlogx(big_k) - (n + 2.0 * big_k) * std::log(double(n)) +
                       std::log(double(n));
  return std::exp(log_p);
}

double p_ancilla_at(int n, std::span<const int> k, double p) {
  check_k(n, k, "p_ancilla_at");
  if (k.size() < 2) throw SpecError("p_ancilla_at: need at least two levels");
  if (k[0] < 1) throw SpecError("p_ancilla_at: need k_0 = N - K >= 1");
  double log_bunch = 0.0;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (k[i] < 1) throw SpecError("p_ancilla_at: every ancilla level needs k_i >= 1");
    log_bunch += log_bunching(k[i]);
  }
  return p_ancilla_optical(n, n - k[0], p) * std::exp(log_bunch);
}

double p_ancilla_final(int n, std::span<const int> k) {
  check_k(n, k, "p_ancilla_final");
  if (k.empty() || k[0] < 1 || k[0] == n) throw SpecError("p_ancilla_final: need 1 <= K <= N-1");
  return p_ancilla_at(n, k, p_opt(n, n - k[0]));
}

double p_appendix_d4() { return 24.0 / (4.0 * 256.0); }

SchemeProbability scheme_probability(Scheme scheme, int n, std::span<const int> k,
                                     std::optional<double> p) {
  SchemeProbability r{scheme, n, std::vector<int>(k.begin(), k.end()), 0, std::nullopt, 0.0, 1.0};
  switch (scheme) {
    case Scheme::kOperatorAllOne:
    case Scheme::kFockSingleMode:
      check_k(n, k, "scheme_probability");
      r.value = p_op(n);
      break;
    case Scheme::kPrepSingleMultiport:
      r.value = p_single_multiport(n, k);
      r.parallel_factor = n;
      break;
    case Scheme::kPrepPerLevel:
      r.value = p_per_level(n, k);
      r.parallel_factor = *std::min_element(k.begin(), k.end());
      break;
    case Scheme::kAncilla: {
      check_k(n, k, "scheme_probability");
      r.big_k = n - k[0];
      r.p = p.value_or(r.big_k >= 1 && r.big_k <= n ? p_opt(n, r.big_k) : 0.0);
      r.value = p_ancilla_at(n, k, *r.p);
      r.parallel_factor = n;
      break;
    }
    case Scheme::kAppendixD4:
      if (n != 4 || k.size() != 2 || k[0] != 2 || k[1] != 2)
        throw SpecError("appendix_d4 is defined for N=4, k=(2,2) only");
      r.value = p_appendix_d4();
      break;
  }
  return r;
}

namespace qubit {

double p_single_multiport(int n, int k1) {
  const int k0 = n - k1;
  const long double num = std::tgamma(n + 1.0L) * std::tgamma(k0 + 1.0L) * std::tgamma(k1 + 1.0L);
  return static_cast<double>(num / std::pow((long double)n, 2 * n) * n);
}

double p_per_level(int n, int k1) {
  const int k0 = n - k1;
  const long double num = std::tgamma(n + 1.0L) * std::tgamma(k0 + 1.0L) * std::tgamma(k1 + 1.0L);
  const long double den = std::pow((long double)n, n) * std::pow((long double)k0, k0) *
                          std::pow((long double)k1, k1);
  return static_cast<double>(num / den * std::min(k0, k1));
}

double p_ancilla_final(int n, int k1) {
  const int k0 = n - k1;
  const long double f1 = std::tgamma(k1 + 1.0L);
  const long double lead = std::tgamma(n + 1.0L) * f1 / std::tgamma(k0 + 1.0L);
  const long double mid = std::pow((long double)k0, k0) * std::pow((long double)k1, k1) /
                          std::pow((long double)n, n + 2 * k1);
  const long double bunch = f1 / std::pow((long double)k1, k1);
  return static_cast<double>(lead * mid * bunch * n);
}

}  // namespace qubit

namespace qutrit {

double p_single_multiport(int n, int k1, int k2) {
  const int k0 = n - k1 - k2;
  const long double num = std::tgamma(n + 1.0L) * std::tgamma(k0 + 1.0L) *
                          std::tgamma(k1 + 1.0L) * std::tgamma(k2 + 1.0L);
  return static_cast<double>(num / std::pow((long double)n, 2 * n) * n);
}

double p_per_level(int n, int k1, int k2) {
  const int k0 = n - k1 - k2;
  const long double ratio =
      std::tgamma(k0 + 1.0L) * std::tgamma(k1 + 1.0L) * std::tgamma(k2 + 1.0L) /
      (std::pow((long double)k0, k0) * std::pow((long double)k1, k1) *
       std::pow((long double)k2, k2));
  const long double lead = std::tgamma(n + 1.0L) / std::pow((long double)n, n);
  return static_cast<double>(lead * ratio * std::min({k0, k1, k2}));
}

double p_ancilla_final(int n, int k1, int k2) {
  const int k0 = n - k1 - k2;
  const int big_k = k1 + k2;
  const long double lead = std::tgamma(n + 1.0L) * std::tgamma(big_k + 1.0L) /
                           std::tgamma(k0 + 1.0L);
  const long double mid = std::pow((long double)k0, k0) * std::pow((long double)big_k, big_k) /
                          std::pow((long double)n, n + 2 * big_k);
  const long double bunch = std::tgamma(k1 + 1.0L) * std::tgamma(k2 + 1.0L) /
                            (std::pow((long double)k1, k1) * std::pow((long double)k2, k2));
  return static_cast<double>(lead * mid * bunch * n);
}

}  // namespace qutrit

std::vector<int> family_k(Family family, int n, int k1) {
  if (family == Family::kQubit) return {n - k1, k1};
  return {n - 2 * k1, k1, k1};
}

std::vector<CrossoverRow> crossover_table(Family family, int k1, int n_min, int n_max) {
  if (k1 < 1) throw ParameterError("crossover_table: k1 must be positive");
  if (n_min > n_max) throw ParameterError("crossover_table: empty N range");
  std::vector<CrossoverRow> rows;
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    const auto k = family_k(family, n, k1);
    if (k[0] < 1) continue;
    CrossoverRow row;
    row.n = n;
    row.k = k;
    row.p_op = p_op(n);
    row.p_single_multiport = p_single_multiport(n, k);
    row.p_per_level = p_per_level(n, k);
    row.p_ancilla_final = p_ancilla_final(n, k);
    row.diff_per_level = row.p_ancilla_final - row.p_per_level;
    row.diff_op = row.p_ancilla_final - row.p_op;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace continuous {

double log_p_op(double n) { return std::lgamma(n + 1.0) - n * std::log(n); }

double log_p_per_level(Family family, double n, double k1) {
  const int ancilla_levels = family == Family::kQubit ? 1 : 2;
  const double k0 = n - ancilla_levels * k1;
  return log_p_op(n) + log_bunching(k0) + ancilla_levels * log_bunching(k1) +
         std::log(std::min(k0, k1));
}

double log_p_ancilla_final(Family family, double n, double k1) {
  const int ancilla_levels = family == Family::kQubit ? 1 : 2;
  const double big_k = ancilla_levels * k1;
  const double k0 = n - big_k;
  return std::lgamma(n + 1.0) + std::lgamma(big_k + 1.0) - std::lgamma(k0 + 1.0) + xlogx(k0) +
         xlogx(big_k) - (n + 2.0 * big_k) * std::log(n) + ancilla_levels * log_bunching(k1) +
         std::log(n);
}

}  // namespace continuous

double contour_root(Family family, Contour contour, int k1) {
  if (k1 < 1) throw ParameterError("contour_root: k1 must be positive");
  const int ancilla_levels = family == Family::kQubit ? 1 : 2;
  auto gap = [&](double n) {
    const double other = contour == Contour::kFirst ? continuous::log_p_per_level(family, n, k1)
                                                    : continuous::log_p_op(n);
    return continuous::log_p_ancilla_final(family, n, k1) - other;
  };

  double lo = contour == Contour::kFirst ? (ancilla_levels + 1.0) * k1 : ancilla_levels * k1 + 1.0;
  if (gap(lo) >= 0.0) {
    std::ostringstream msg;
    msg << "contour_root: ancilla scheme already ahead at lower edge N=" << lo;
    throw RootNotFoundError(msg.str());
  }
  double hi = lo + 1.0;
  while (gap(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw RootNotFoundError("contour_root: no sign change below N=1e6");
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ContourFit contour_fit(Family family, Contour contour, int k1_min, int k1_max) {
  if (k1_min < 1 || k1_max - k1_min < 2)
    throw ParameterError("contour_fit: need at least three k1 values starting at 1 or above");
  ContourFit fit;
  for (int k1 = k1_min; k1 <= k1_max; ++k1)
    fit.points.emplace_back(k1, contour_root(family, contour, k1));

  const double m = static_cast<double>(fit.points.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : fit.points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : fit.points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;

  double ssr = 0;
  for (const auto& [x, y] : fit.points) {
    const double r = y - (fit.slope * x + fit.intercept);
    ssr += r * r;
  }
  fit.residual_rms = std::sqrt(ssr / m);
  const double sigma2 = ssr / (m - 2.0);
  fit.slope_stderr = std::sqrt(sigma2 / sxx);
  fit.intercept_stderr = std::sqrt(sigma2 * (1.0 / m + mx * mx / sxx));
  return fit;
}

}  // namespace formulas
}  // namespace dicke
