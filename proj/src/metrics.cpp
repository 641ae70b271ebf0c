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

#include "avgfusion/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace avgfusion {

std::string to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PsiPlus: return "psi+";
    case BellLabel::PsiMinus: return "psi-";
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PhiMinus: return "phi-";
  }
  throw std::invalid_argument("unknown BellLabel");
}

BellLabel parse_bell_label(const std::string& text) {
  for (BellLabel label : kBellLabels) {
    if (to_string(label) == text) return label;
  }
  throw std::invalid_argument("unknown Bell label '" + text + "'");
}

StateVec bell_state(BellLabel label) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (label) {
    case BellLabel::PsiPlus:
      return StateVec(4, {{FockKet{1, 0, 0, 1}, r}, {FockKet{0, 1, 1, 0}, r}});
    case BellLabel::PsiMinus:
      return StateVec(4, {{FockKet{1, 0, 0, 1}, r}, {FockKet{0, 1, 1, 0}, -r}});
    case BellLabel::PhiPlus:
      return StateVec(4, {{FockKet{1, 0, 1, 0}, r}, {FockKet{0, 1, 0, 1}, r}});
    case BellLabel::PhiMinus:
      return StateVec(4, {{FockKet{1, 0, 1, 0}, r}, {FockKet{0, 1, 0, 1}, -r}});
  }
  throw std::invalid_argument("unknown BellLabel");
}

double fidelity(const StateVec& unnormalized, const StateVec& target) {
  return std::norm(inner_product(unnormalized, target));
}

NormalizedFidelity normalized_fidelity(double f, double p) {
  if (!(p > 0.0)) {
    throw std::domain_error("normalized_fidelity: probability must be > 0");
  }
  const double ratio = f / p;
  if (ratio > 1.0) return {1.0, ratio > 1.0 + 1e-9};
  return {ratio, false};
}

}  // namespace avgfusion
