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

#include <array>
#include <string>

#include <Eigen/SVD>

#include "avgfusion/fock.hpp"
#include "avgfusion/transfer_matrix.hpp"

namespace avgfusion {

enum class BellLabel { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels{
    BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus,
    BellLabel::PhiMinus};

std::string to_string(BellLabel label);
/// Accepts "psi+", "psi-", "phi+", "phi-".
BellLabel parse_bell_label(const std::string& text);

/// Dual-rail Bell state on (H1, V1, H2, V2):
///   psi+- = (|1001> +- |0110>) / sqrt(2),  phi+- = (|1010> +- |0101>) / sqrt(2).
StateVec bell_state(BellLabel label);

/// |<unnormalized|target>|^2 for a normalized target.
double fidelity(const StateVec& unnormalized, const StateVec& target);

struct NormalizedFidelity {
  double value;
  /// Raw ratio exceeded 1 by more than 1e-9 and was clamped.
  bool anomalous;
};

/// F / P, clamped to 1. Throws std::domain_error when P <= 0.
NormalizedFidelity normalized_fidelity(double f, double p);

/// Half the nuclear norm of (a - b): 0.5 * sum of singular values.
template <typename R>
R trace_distance(const BasicTransferMatrix<R>& a, const BasicTransferMatrix<R>& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  const ComplexMatrix<R> diff = a.matrix() - b.matrix();
  Eigen::JacobiSVD<ComplexMatrix<R>> svd(diff);
  return R(0.5) * svd.singularValues().sum();
}

}  // namespace avgfusion
