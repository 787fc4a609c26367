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

// dicke-sim: run schemes, verify, and emit formula tables and contour fits.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicke/errors.hpp"
#include "dicke/formulas.hpp"
#include "dicke/schemes.hpp"
#include "dicke/verify.hpp"

namespace {

using dicke::formulas::Contour;
using dicke::formulas::Family;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kMaxFormulaN = 30;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<int> parse_k(const std::string& text) {
  std::vector<int> k;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw dicke::SpecError("--k: '" + item + "' is not an integer");
    k.push_back(v);
  }
  if (k.empty()) throw dicke::SpecError("--k: empty list");
  return k;
}

Family parse_family(const std::string& name) {
  if (name == "qubit") return Family::kQubit;
  if (name == "qutrit") return Family::kQutrit;
  throw dicke::SpecError("unknown panel '" + name + "' (expected qubit or qutrit)");
}

Contour parse_contour(const std::string& name) {
  if (name == "first") return Contour::kFirst;
  if (name == "second") return Contour::kSecond;
  throw dicke::SpecError("unknown contour '" + name + "' (expected first or second)");
}

void check_formula_range(int n_min, int n_max) {
  if (n_min < 1 || n_min > n_max) throw dicke::SpecError("empty or invalid N range");
  if (n_max > kMaxFormulaN)
    throw dicke::CapacityError("N=" + std::to_string(n_max) + " exceeds the formula cap of " +
                               std::to_string(kMaxFormulaN));
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dicke::SpecError("cannot open '" + path + "' for writing");
  out << text;
}

std::string run_json(const dicke::RunReport& r) {
  Json j;
  j["scheme"] = std::string(dicke::to_string(r.spec.scheme));
  j["n"] = r.spec.n;
  j["k"] = r.spec.k;
  j["p"] = r.spec.p ? Json(*r.spec.p) : Json(nullptr);
  j["probability"] = r.probability;
  j["parallel_factor"] = r.parallel_factor;
  j["formula"] = r.formula ? Json(*r.formula) : Json(nullptr);
  j["fidelity"] = r.fidelity;
  Json state = Json::array();
  for (const auto& [occ, amp] : r.state.terms())
    state.push_back({{"occupation", occ.to_string()}, {"re", amp.real()}, {"im", amp.imag()}});
  j["state"] = std::move(state);
  return j.dump(2) + "\n";
}

std::string run_csv(const dicke::RunReport& r) {
  std::string out = "scheme,n,k,p,probability,parallel_factor,formula,fidelity\n";
  std::string k;
  for (std::size_t i = 0; i < r.spec.k.size(); ++i) k += (i ? ";" : "") + std::to_string(r.spec.k[i]);
  out += std::string(dicke::to_string(r.spec.scheme)) + "," + std::to_string(r.spec.n) + "," + k +
         "," + (r.spec.p ? num(*r.spec.p) : "") + "," + num(r.probability) + "," +
         num(r.parallel_factor) + "," + (r.formula ? num(*r.formula) : "") + "," +
         num(r.fidelity) + "\n";
  return out;
}

std::string crossover_csv(Family family, int k1, int n_min, int n_max) {
  const bool qutrit = family == Family::kQutrit;
  std::string out = qutrit ? "n,k0,k1,k2" : "n,k0,k1";
  out += ",p_op,p_single_multiport,p_per_level,p_ancilla_final,diff_per_level,diff_op\n";
  for (const auto& row : dicke::formulas::crossover_table(family, k1, n_min, n_max)) {
    out += std::to_string(row.n);
    for (int kj : row.k) out += "," + std::to_string(kj);
    for (double v : {row.p_op, row.p_single_multiport, row.p_per_level, row.p_ancilla_final,
                     row.diff_per_level, row.diff_op})
      out += "," + num(v);
    out += "\n";
  }
  return out;
}

std::string contour_csv(Family family, int k1_max, int n_min, int n_max) {
  std::string out = "n,k1,diff_per_level,diff_op\n";
  for (int k1 = 1; k1 <= k1_max; ++k1) {
    for (const auto& row : dicke::formulas::crossover_table(family, k1, n_min, n_max))
      out += std::to_string(row.n) + "," + std::to_string(k1) + "," + num(row.diff_per_level) +
             "," + num(row.diff_op) + "\n";
  }
  return out;
}

std::string fit_json(const std::string& panel, const std::string& contour,
                     const dicke::formulas::ContourFit& fit) {
  Json j;
  j["panel"] = panel;
  j["contour"] = contour;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["slope_stderr"] = fit.slope_stderr;
  j["intercept_stderr"] = fit.intercept_stderr;
  j["residual_rms"] = fit.residual_rms;
  Json points = Json::array();
  for (const auto& [k1, n] : fit.points)
    points.push_back({{"k1", k1}, {"n", n}, {"residual", n - (fit.slope * k1 + fit.intercept)}});
  j["points"] = std::move(points);
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-optics Dicke-state postselection simulator"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;

  auto* run_cmd = app.add_subcommand("run", "Simulate one scheme end to end");
  std::string scheme_name;
  int n = 0;
  std::string k_text;
  std::optional<double> p;
  int herald_mode = 1;
  bool separate_inputs = false;
  run_cmd->add_option("--scheme", scheme_name, "Scheme name")->required();
  run_cmd->add_option("--n", n, "Photon number N")->required();
  run_cmd->add_option("--k", k_text, "Level occupations, e.g. 2,1,1")->required();
  run_cmd->add_option("--p", p, "Ancilla splitter transmissivity (default p_opt)");
  run_cmd->add_option("--herald-mode", herald_mode, "Ancilla herald port, 1-based");
  run_cmd->add_flag("--separate-inputs", separate_inputs,
                    "prep_per_level: one input of the final splitter per level");
  run_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_option("--out", out_path, "Output file");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_name = "all";
  verify_cmd->add_option("--suite", suite_name, "all|schemes|oracle|formulas");

  auto* table_cmd = app.add_subcommand("table", "Emit closed-form probability tables as CSV");
  std::string figure;
  int k1 = 1;
  int n_min = 2;
  int n_max = 10;
  int k1_max = 10;
  table_cmd->add_option("--figure", figure, "fig4a|fig4b|contour_a|contour_b")
      ->required()
      ->check(CLI::IsMember({"fig4a", "fig4b", "contour_a", "contour_b"}));
  table_cmd->add_option("--k1", k1, "k_1 for fig4a/fig4b");
  table_cmd->add_option("--n-min", n_min, "Smallest N");
  table_cmd->add_option("--n-max", n_max, "Largest N");
  table_cmd->add_option("--k1-max", k1_max, "Largest k_1 for contour tables");
  table_cmd->add_option("--out", out_path, "Output file");

  auto* fit_cmd = app.add_subcommand("fit", "Fit a crossover contour line as JSON");
  std::string panel = "qubit";
  std::string contour = "first";
  std::optional<int> fit_k1_max;
  fit_cmd->add_option("--panel", panel, "qubit|qutrit");
  fit_cmd->add_option("--contour", contour, "first|second");
  fit_cmd->add_option("--k1-max", fit_k1_max, "Largest k_1 (default 20 qubit, 10 qutrit)");
  fit_cmd->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) {
      dicke::SchemeSpec spec;
      spec.scheme = dicke::scheme_from_string(scheme_name);
      spec.n = n;
      spec.k = parse_k(k_text);
      spec.p = p;
      spec.herald_mode = herald_mode;
      spec.separate_inputs = separate_inputs;
      const auto report = dicke::run(spec);
      emit(format == "csv" ? run_csv(report) : run_json(report), out_path);
      return kExitOk;
    }
    if (*verify_cmd) {
      bool ok = true;
      for (const auto& r : dicke::verify(dicke::suite_from_string(suite_name))) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok = ok && r.passed;
      }
      return ok ? kExitOk : kExitVerification;
    }
    if (*table_cmd) {
      check_formula_range(n_min, n_max);
      const Family family =
          (figure == "fig4a" || figure == "contour_a") ? Family::kQubit : Family::kQutrit;
      const bool contour_table = figure.rfind("contour", 0) == 0;
      emit(contour_table ? contour_csv(family, k1_max, n_min, n_max)
                         : crossover_csv(family, k1, n_min, n_max),
           out_path);
      return kExitOk;
    }
    if (*fit_cmd) {
      const Family family = parse_family(panel);
      const int top = fit_k1_max.value_or(family == Family::kQubit ? 20 : 10);
      const auto fit = dicke::formulas::contour_fit(family, parse_contour(contour), 1, top);
      emit(fit_json(panel, contour, fit), out_path);
      return kExitOk;
    }
  } catch (const dicke::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const dicke::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const dicke::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
