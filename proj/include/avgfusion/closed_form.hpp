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

#include <vector>

namespace avgfusion {

/// Per-copy BSM reflectivities of an N-copy averaged Bell measurement.
struct ReflectivityDraw {
  std::vector<double> eta_h;
  std::vector<double> eta_v;

  int n_copies() const { return static_cast<int>(eta_h.size()); }
};

/// Throws std::invalid_argument on empty/unequal lists and
/// std::domain_error on reflectivities outside [0, 1].
void validate(const ReflectivityDraw& d);

// With S(x) = sum_i sqrt(x_i) and C(x) = sum_i sqrt(1 - x_i), the averaged
// BSM acting on psi+ gives
//   F         = [S(h) C(v) + C(h) S(v)]^2 / N^4
//   P_success = [S(h)^2 + C(h)^2] [S(v)^2 + C(v)^2] / N^4
// where F is the unnormalized overlap with (|0011> - |1100>)/sqrt(2) and
// P_success the vacuum-ancilla post-selection probability.

double bsm_fidelity_closed(const ReflectivityDraw& d);
double bsm_psuccess_closed(const ReflectivityDraw& d);
/// F / P_success (clamped to 1).
double bsm_fnorm_closed(const ReflectivityDraw& d);

}  // namespace avgfusion
