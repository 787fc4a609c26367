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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace dicke {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { kAll, kSchemes, kOracle, kFormulas };

/// Throws SpecError for unknown names.
Suite suite_from_string(std::string_view name);

std::vector<CheckResult> verify(Suite suite);

/// Every scheme for N <= max_n against its closed form and Dicke target.
std::vector<CheckResult> verify_schemes(int max_n = 5);

/// apply_transfer vs. permanent amplitudes on random unitaries.
CheckResult verify_oracle(int trials = 200, std::uint64_t seed = 20260417);

std::vector<CheckResult> verify_formulas();

/// Haar-random unitary from the QR decomposition of a complex Ginibre matrix.
Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng);

}  // namespace dicke
