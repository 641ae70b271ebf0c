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

// Single-particle matrices for the dual-rail gates, all in the
// (H1, V1, H2, V2) mode order.

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "avgfusion/transfer_matrix.hpp"

namespace avgfusion {

/// Beam-splitter reflectivities of one fusion gate (x, y) or one BSM (h, v).
struct GateParams {
  double eta_x = 0.5;
  double eta_y = 0.5;
  double eta_h = 0.5;
  double eta_v = 0.5;
};

inline void check_reflectivity(double eta, const char* name) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error(std::string("reflectivity ") + name + " = " +
                            std::to_string(eta) + " is outside [0, 1]");
  }
}

inline void check_params(const GateParams& p) {
  check_reflectivity(p.eta_x, "eta_x");
  check_reflectivity(p.eta_y, "eta_y");
  check_reflectivity(p.eta_h, "eta_h");
  check_reflectivity(p.eta_v, "eta_v");
}

namespace detail {

// exp(-2 pi i k / n), exact on quarter turns.
template <typename R>
std::complex<R> root_of_unity(long k, long n) {
  k %= n;
  if ((4 * k) % n == 0) {
    switch (4 * k / n) {
      case 0: return {R(1), R(0)};
      case 1: return {R(0), R(-1)};
      case 2: return {R(-1), R(0)};
      default: return {R(0), R(1)};
    }
  }
  const R angle = -R(2) * std::numbers::pi_v<R> * R(k) / R(n);
  return {std::cos(angle), std::sin(angle)};
}

// Real 2x2 beam-splitter [[sqrt(eta), sqrt(1-eta)], [-sqrt(1-eta), sqrt(eta)]]
// placed on modes (p, q) of `m`.
template <typename R>
void place_beamsplitter(ComplexMatrix<R>& m, Eigen::Index p, Eigen::Index q,
                        double eta) {
  const R t = std::sqrt(R(eta));
  const R r = std::sqrt(R(1) - R(eta));
  m(p, p) = t;
  m(p, q) = r;
  m(q, p) = -r;
  m(q, q) = t;
}

}  // namespace detail

/// Unitary DFT, entry (r, k) = w^(r k) / sqrt(n) with w = exp(-2 pi i / n).
template <typename R = double>
BasicTransferMatrix<R> dft_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dft_matrix: N must be >= 1");
  ComplexMatrix<R> m(n, n);
  const R scale = R(1) / std::sqrt(R(n));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      m(r, k) = detail::root_of_unity<R>(static_cast<long>(r) * k, n) * scale;
    }
  }
  return BasicTransferMatrix<R>::unitary(std::move(m));
}

/// One layer of the fusion gate: a beam-splitter on (H1, V1) with eta_x and
/// one on (H2, V2) with eta_y.
template <typename R = double>
BasicTransferMatrix<R> beamsplitter_layer(double eta_x, double eta_y) {
  check_reflectivity(eta_x, "eta_x");
  check_reflectivity(eta_y, "eta_y");
  ComplexMatrix<R> m = ComplexMatrix<R>::Zero(4, 4);
  detail::place_beamsplitter<R>(m, 0, 1, eta_x);
  detail::place_beamsplitter<R>(m, 2, 3, eta_y);
  return BasicTransferMatrix<R>::unitary(std::move(m));
}

/// Exchanges V1 and V2.
template <typename R = double>
BasicTransferMatrix<R> swap_matrix() {
  ComplexMatrix<R> m = ComplexMatrix<R>::Zero(4, 4);
  m(0, 0) = m(1, 3) = m(2, 2) = m(3, 1) = R(1);
  return BasicTransferMatrix<R>::unitary(std::move(m));
}

/// Dual-rail Type-II fusion gate B * SWAP * B, both layers sharing
/// (eta_x, eta_y).
template <typename R = double>
BasicTransferMatrix<R> fusion_gate(double eta_x, double eta_y) {
  const auto b = beamsplitter_layer<R>(eta_x, eta_y);
  return b * swap_matrix<R>() * b;
}

/// Bell-state measurement network: beam-splitters on (H1, H2) with eta_h and
/// on (V1, V2) with eta_v.
template <typename R = double>
BasicTransferMatrix<R> bsm_matrix(double eta_h, double eta_v) {
  check_reflectivity(eta_h, "eta_h");
  check_reflectivity(eta_v, "eta_v");
  ComplexMatrix<R> m = ComplexMatrix<R>::Zero(4, 4);
  detail::place_beamsplitter<R>(m, 0, 2, eta_h);
  detail::place_beamsplitter<R>(m, 1, 3, eta_v);
  return BasicTransferMatrix<R>::unitary(std::move(m));
}

/// Sends mode j to mode perm[j].
template <typename R = double>
BasicTransferMatrix<R> permutation_matrix(std::span<const int> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  if (n == 0) throw std::invalid_argument("permutation_matrix: empty");
  std::vector<bool> hit(perm.size(), false);
  ComplexMatrix<R> m = ComplexMatrix<R>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const int target = perm[static_cast<std::size_t>(j)];
    if (target < 0 || target >= n || hit[static_cast<std::size_t>(target)]) {
      throw std::invalid_argument("permutation_matrix: not a bijection");
    }
    hit[static_cast<std::size_t>(target)] = true;
    m(target, j) = R(1);
  }
  return BasicTransferMatrix<R>::unitary(std::move(m));
}

template <typename R = double>
BasicTransferMatrix<R> permutation_matrix(std::initializer_list<int> perm) {
  return permutation_matrix<R>(std::span<const int>(perm.begin(), perm.size()));
}

/// Block-diagonal concatenation; unitary iff every block is flagged unitary.
template <typename R = double>
BasicTransferMatrix<R> direct_sum(const std::vector<BasicTransferMatrix<R>>& blocks) {
  Eigen::Index dim = 0;
  bool unitary = true;
  for (const auto& b : blocks) {
    dim += b.dim();
    unitary = unitary && b.unitary_flag();
  }
  if (dim == 0) throw std::invalid_argument("direct_sum: no blocks");
  ComplexMatrix<R> m = ComplexMatrix<R>::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    m.block(offset, offset, b.dim(), b.dim()) = b.matrix();
    offset += b.dim();
  }
  return unitary ? BasicTransferMatrix<R>::unitary(std::move(m))
                 : BasicTransferMatrix<R>::general(std::move(m));
}

template <typename R>
BasicTransferMatrix<R> direct_sum(const BasicTransferMatrix<R>& a,
                                  const BasicTransferMatrix<R>& b) {
  return direct_sum<R>(std::vector<BasicTransferMatrix<R>>{a, b});
}

/// Entrywise mean (1/N) sum_k U_k. Flagged general (non-unitary).
template <typename R = double>
BasicTransferMatrix<R> effective_average(
    const std::vector<BasicTransferMatrix<R>>& copies) {
  if (copies.empty()) {
    throw std::invalid_argument("effective_average: no copies");
  }
  ComplexMatrix<R> sum = ComplexMatrix<R>::Zero(copies[0].dim(), copies[0].dim());
  for (const auto& c : copies) {
    if (c.dim() != copies[0].dim()) {
      throw std::invalid_argument("effective_average: dimension mismatch");
    }
    sum += c.matrix();
  }
  sum /= R(copies.size());
  return BasicTransferMatrix<R>::general(std::move(sum));
}

}  // namespace avgfusion
