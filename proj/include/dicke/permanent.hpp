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

#include <complex>

#include <Eigen/Dense>

namespace dicke {

inline constexpr int kDefaultPermanentCap = 20;

/// Permanent by Ryser's inclusion-exclusion formula, visiting column subsets
/// in Gray-code order so each step updates the row sums with one column.
/// O(2^n n). The permanent of a 0x0 matrix is 1.
///
/// Throws CapacityError for n > cap and DimensionError for non-square input.
std::complex<double> permanent(const Eigen::MatrixXcd& m, int cap = kDefaultPermanentCap);

}  // namespace dicke
