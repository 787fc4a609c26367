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

#include "dicke/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

constexpr double kRowNormTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-10;

bool block_is_unitary(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return false;
  const Eigen::MatrixXcd residual =
      m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff() <= kUnitaryTolerance;
}

// Places a 2x2 matrix on modes (i, j) of an otherwise identity matrix.
Eigen::MatrixXcd embed_two_mode(const Eigen::MatrixXcd& two, int i, int j, int modes) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(modes, modes);
  m(i, i) = two(0, 0);
  m(i, j) = two(0, 1);
  m(j, i) = two(1, 0);
  m(j, j) = two(1, 1);
  return m;
}

Eigen::MatrixXcd bs_tree_matrix(int n) {
  if (n == 1) return Eigen::MatrixXcd::Identity(1, 1);
  const int half = n / 2;
  const Eigen::MatrixXcd split = beam_splitter(0.5, 1).block(0);
  const Eigen::MatrixXcd sub = bs_tree_matrix(half);
  Eigen::MatrixXcd both = Eigen::MatrixXcd::Zero(n, n);
  both.topLeftCorner(half, half) = sub;
  both.bottomRightCorner(half, half) = sub;
  return embed_two_mode(split, 0, half, n) * both;
}

}  // namespace

TransferMatrix::TransferMatrix(std::vector<Eigen::MatrixXcd> blocks, bool subnormalized)
    : blocks_(std::move(blocks)), subnormalized_(subnormalized), unitary_(false) {
  if (blocks_.empty()) throw DimensionError("TransferMatrix: at least one internal level required");
  const auto rows = blocks_.front().rows();
  const auto cols = blocks_.front().cols();
  if (rows < 1 || cols < 1) throw DimensionError("TransferMatrix: empty block");
  for (const auto& b : blocks_)
    if (b.rows() != rows || b.cols() != cols)
      throw DimensionError("TransferMatrix: blocks of different shapes");

  for (std::size_t s = 0; s < blocks_.size(); ++s) {
    for (Eigen::Index j = 0; j < rows; ++j) {
      const double norm = blocks_[s].row(j).squaredNorm();
      const bool ok = subnormalized_ ? norm <= 1.0 + kRowNormTolerance
                                     : std::abs(norm - 1.0) <= kRowNormTolerance;
      if (!ok) {
        std::ostringstream msg;
        msg << "TransferMatrix: row " << j << " of level " << s << " has squared norm " << norm;
        throw ParameterError(msg.str());
      }
    }
  }

  unitary_ = true;
  for (const auto& b : blocks_) unitary_ = unitary_ && block_is_unitary(b);
}

TransferMatrix TransferMatrix::uniform(const Eigen::MatrixXcd& matrix, int levels,
                                       bool subnormalized) {
  if (levels < 1) throw DimensionError("TransferMatrix: levels must be positive");
  return TransferMatrix(std::vector<Eigen::MatrixXcd>(levels, matrix), subnormalized);
}

TransferMatrix TransferMatrix::adjoint() const {
  if (!unitary_) throw ParameterError("TransferMatrix::adjoint: matrix is not unitary");
  std::vector<Eigen::MatrixXcd> adj;
  adj.reserve(blocks_.size());
  for (const auto& b : blocks_) adj.push_back(b.adjoint());
  return TransferMatrix(std::move(adj));
}

TransferMatrix identity(int modes, int levels) {
  if (modes < 1) throw DimensionError("identity: modes must be positive");
  return TransferMatrix::uniform(Eigen::MatrixXcd::Identity(modes, modes), levels);
}

TransferMatrix all_one(int n, int levels) {
  if (n < 1) throw DimensionError("all_one: N must be positive");
  return TransferMatrix::uniform(
      Eigen::MatrixXcd::Constant(n, n, std::complex<double>(1.0 / std::sqrt(double(n)))),
      levels);
}

TransferMatrix dft(int n, int levels) {
  if (n < 1) throw DimensionError("dft: N must be positive");
  Eigen::MatrixXcd u(n, n);
  const double norm = 1.0 / std::sqrt(double(n));
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      // Reduce the exponent first so large j*l keeps full phase accuracy.
      const int e = (j * l) % n;
      u(j, l) = std::polar(norm, 2.0 * std::numbers::pi * e / n);
    }
  }
  // Exact values on the axes, where the phase is zero.
  u.row(0).setConstant(norm);
  u.col(0).setConstant(norm);
  return TransferMatrix::uniform(u, levels);
}

TransferMatrix beam_splitter(double p, int levels, SplitterCompletion completion) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("beam_splitter: p must lie in [0, 1]");
  const double a = std::sqrt(p);
  const double b = std::sqrt(1.0 - p);
  Eigen::MatrixXcd m(2, 2);
  if (completion == SplitterCompletion::kSymmetric) {
    m << a, b, b, -a;
  } else {
    m << a, b, -b, a;
  }
  return TransferMatrix::uniform(m, levels);
}

TransferMatrix ancilla_transfer(int n, int k, double p, int levels) {
  if (k < 1 || k > n) throw ParameterError("ancilla_transfer: need 1 <= K <= N");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("ancilla_transfer: p must lie in [0, 1]");
  const double alpha = std::sqrt(p);
  const double beta = std::sqrt(1.0 - p);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n + k, n + 1);
  for (int j = 0; j < n; ++j) {
    m(j, j) = alpha;
    m(j, n) = beta;
  }
  m.bottomLeftCorner(k, n).setConstant(1.0 / std::sqrt(double(n)));
  return TransferMatrix::uniform(m, levels);
}

TransferMatrix pbs() {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd v(2, 2);
  v << 0, 1, 1, 0;
  return TransferMatrix({h, v});
}

TransferMatrix bs_tree(int n, int levels) {
  if (n < 2 || (n & (n - 1)) != 0)
    throw ParameterError("bs_tree: N must be a power of two >= 2");
  return TransferMatrix::uniform(bs_tree_matrix(n), levels);
}

TransferMatrix route(int outputs, std::span<const int> targets, int levels) {
  if (targets.empty() || outputs < 1) throw DimensionError("route: empty routing");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(targets.size()), outputs);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= outputs)
      throw DimensionError("route: target " + std::to_string(targets[i]) + " out of range");
    m(static_cast<Eigen::Index>(i), targets[i]) = 1.0;
  }
  return TransferMatrix::uniform(m, levels);
}

TransferMatrix sequential(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.outputs() != b.inputs() || a.levels() != b.levels()) {
    std::ostringstream msg;
    msg << "sequential: cannot feed " << a.outputs() << " outputs (d=" << a.levels() << ") into "
        << b.inputs() << " inputs (d=" << b.levels() << ")";
    throw DimensionError(msg.str());
  }
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(a.levels());
  for (int s = 0; s < a.levels(); ++s) blocks.push_back(a.block(s) * b.block(s));
  return TransferMatrix(std::move(blocks), a.is_subnormalized() || b.is_subnormalized());
}

TransferMatrix parallel(std::span<const TransferMatrix> parts) {
  if (parts.empty()) throw DimensionError("parallel: no parts");
  const int levels = parts.front().levels();
  int rows = 0;
  int cols = 0;
  bool sub = false;
  for (const auto& p : parts) {
    if (p.levels() != levels) throw DimensionError("parallel: parts differ in internal dimension");
    rows += p.inputs();
    cols += p.outputs();
    sub = sub || p.is_subnormalized();
  }
  std::vector<Eigen::MatrixXcd> blocks(levels, Eigen::MatrixXcd::Zero(rows, cols));
  int r = 0;
  int c = 0;
  for (const auto& p : parts) {
    for (int s = 0; s < levels; ++s) blocks[s].block(r, c, p.inputs(), p.outputs()) = p.block(s);
    r += p.inputs();
    c += p.outputs();
  }
  return TransferMatrix(std::move(blocks), sub);
}

}  // namespace dicke
