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
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dicke {

/// Linear map of creation operators from input to output spatial modes,
/// resolved per internal level.
///
/// Rows index input modes and columns index output modes, so a photon in
/// input j with level s is sent to sum_l block(s)(j, l) b^dagger_{l,s}. The
/// internal level is never changed. Every row must have unit norm unless the
/// matrix is explicitly marked subnormalized, in which case rows may have
/// norm at most one.
class TransferMatrix {
 public:
  TransferMatrix(std::vector<Eigen::MatrixXcd> blocks, bool subnormalized = false);

  /// Same spatial matrix for every internal level.
  static TransferMatrix uniform(const Eigen::MatrixXcd& matrix, int levels,
                                bool subnormalized = false);

  int inputs() const noexcept { return static_cast<int>(blocks_.front().rows()); }
  int outputs() const noexcept { return static_cast<int>(blocks_.front().cols()); }
  int levels() const noexcept { return static_cast<int>(blocks_.size()); }
  bool is_unitary() const noexcept { return unitary_; }
  bool is_subnormalized() const noexcept { return subnormalized_; }

  const Eigen::MatrixXcd& block(int level) const { return blocks_.at(level); }
  std::complex<double> operator()(int level, int input, int output) const {
    return blocks_.at(level)(input, output);
  }

  /// Conjugate transpose of every block; only defined for unitary matrices.
  TransferMatrix adjoint() const;

 private:
  std::vector<Eigen::MatrixXcd> blocks_;
  bool subnormalized_;
  bool unitary_;
};

enum class SplitterCompletion {
  kSymmetric,  ///< [[a, b], [b, -a]]
  kRotation,   ///< [[a, b], [-b, a]]
};

TransferMatrix identity(int modes, int levels);

/// Every entry 1/sqrt(N): the non-unitary operator that spreads each photon
/// evenly over all N outputs.
TransferMatrix all_one(int n, int levels);

/// Symmetric multiport: U_jl = omega_N^{jl} / sqrt(N) with 0-based j, l.
TransferMatrix dft(int n, int levels);

/// Two-port splitter with first row (sqrt(p), sqrt(1-p)); p is the
/// transmissivity into output 0.
TransferMatrix beam_splitter(double p, int levels,
                             SplitterCompletion completion = SplitterCompletion::kSymmetric);

/// Operator-level ancilla map with N main inputs and K ancilla inputs onto
/// N main outputs plus one ancilla output (output index N).
TransferMatrix ancilla_transfer(int n, int k, double p, int levels);

/// Polarizing beam splitter on two levels: level 0 (H) is transmitted,
/// level 1 (V) swaps the two spatial modes.
TransferMatrix pbs();

/// Balanced beam-splitter tree for N a power of two. A photon entering mode 0
/// leaves through every output with amplitude 1/sqrt(N).
TransferMatrix bs_tree(int n, int levels);

/// Rewiring: input i goes to output targets[i]. Several inputs may share a
/// target, which models a lossless merge of photons with distinct levels.
TransferMatrix route(int outputs, std::span<const int> targets, int levels);

/// Photon-flow composition: first `a`, then `b`.
TransferMatrix sequential(const TransferMatrix& a, const TransferMatrix& b);

/// Direct sum over consecutive, disjoint spatial ranges.
TransferMatrix parallel(std::span<const TransferMatrix> parts);

}  // namespace dicke
