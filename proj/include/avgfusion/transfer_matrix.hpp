// Copyright 2026 The avgfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace avgfusion {

template <typename RealScalar>
using ComplexMatrix =
    Eigen::Matrix<std::complex<RealScalar>, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kUnitaryTolerance = 1e-12;

// Looser for scalars coarser than double.
template <typename RealScalar>
constexpr RealScalar unitary_tolerance() {
  return std::max(RealScalar(kUnitaryTolerance),
                  RealScalar(64) * std::numeric_limits<RealScalar>::epsilon());
}

// Largest entry of |A^dagger A - I|.
template <typename Derived>
typename Derived::RealScalar unitarity_defect(
    const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("unitarity_defect: matrix is not square");
  }
  const Plain gram = m.adjoint() * m;
  return (gram - Plain::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

/// Single-particle mode map of a passive linear-optical network.
///
/// Column j holds the image of mode j: a creation operator on mode j is
/// replaced by sum_l T(l, j) a_l^dagger. The unitary flag is an asserted
/// property; `unitary()` refuses matrices that fail the check, while
/// `general()` accepts anything square (e.g. averaged, non-unitary maps).
template <typename RealScalar>
class BasicTransferMatrix {
 public:
  using Real = RealScalar;
  using Scalar = std::complex<RealScalar>;
  using Matrix = ComplexMatrix<RealScalar>;

  BasicTransferMatrix() = default;

  static BasicTransferMatrix unitary(Matrix m) {
    require_square(m);
    if (unitarity_defect(m) > unitary_tolerance<RealScalar>()) {
      throw std::invalid_argument(
          "TransferMatrix::unitary: matrix fails the unitarity check");
    }
    return BasicTransferMatrix(std::move(m), true);
  }

  static BasicTransferMatrix general(Matrix m) {
    require_square(m);
    return BasicTransferMatrix(std::move(m), false);
  }

  static BasicTransferMatrix identity(Eigen::Index dim) {
    return BasicTransferMatrix(Matrix::Identity(dim, dim), true);
  }

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  bool unitary_flag() const { return unitary_; }
  Scalar operator()(Eigen::Index row, Eigen::Index col) const {
    return m_(row, col);
  }

  /// Re-runs the unitarity test regardless of the flag.
  bool is_unitary(RealScalar tol = unitary_tolerance<RealScalar>()) const {
    return unitarity_defect(m_) <= tol;
  }

  BasicTransferMatrix adjoint() const {
    return BasicTransferMatrix(m_.adjoint(), unitary_);
  }

  friend BasicTransferMatrix operator*(const BasicTransferMatrix& a,
                                       const BasicTransferMatrix& b) {
    if (a.dim() != b.dim()) {
      throw std::invalid_argument("TransferMatrix product: dimension mismatch");
    }
    return BasicTransferMatrix(a.m_ * b.m_, a.unitary_ && b.unitary_);
  }

 private:
  BasicTransferMatrix(Matrix m, bool unitary)
      : m_(std::move(m)), unitary_(unitary) {}

  static void require_square(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
      throw std::invalid_argument(
          "TransferMatrix: matrix must be square and non-empty");
    }
  }

  Matrix m_;
  bool unitary_ = false;
};

using TransferMatrix = BasicTransferMatrix<double>;
using Complex = std::complex<double>;

}  // namespace avgfusion
