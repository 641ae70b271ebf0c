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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "avgfusion/fock.hpp"
#include "avgfusion/metrics.hpp"

namespace avgfusion {

/// Photon counts demanded on a subset of modes.
struct DetectionPattern {
  std::vector<int> measured_modes;
  std::vector<int> counts;
};

struct Projection {
  /// Unnormalized state on the unmeasured modes (original order kept).
  StateVec residual;
  double probability;
};

/// Conditions `s` on `pattern` and removes the measured modes.
Projection project_pattern(const StateVec& s, const DetectionPattern& pattern);

/// Probability of every occupation pattern seen on `measured_modes`.
std::map<std::vector<int>, double> pattern_distribution(
    const StateVec& s, const std::vector<int>& measured_modes);

enum class FusionLabel { HH, HV, VH, VV };

inline constexpr std::array<FusionLabel, 4> kFusionLabels{
    FusionLabel::HH, FusionLabel::HV, FusionLabel::VH, FusionLabel::VV};

std::string to_string(FusionLabel label);
inline bool is_even(FusionLabel label) {
  return label == FusionLabel::HH || label == FusionLabel::VV;
}

/// Mode indices of the two measured dual-rail qubits.
struct FusionRails {
  int h1 = 0;
  int v1 = 1;
  int h2 = 2;
  int v2 = 3;
};

struct FusionOutcome {
  FusionLabel label;
  double probability;
  StateVec residual;
};

/// The four single-photon coincidences (one photon on qubit 1's rails, one
/// on qubit 2's), in the order HH, HV, VH, VV.
std::array<FusionOutcome, 4> fusion_outcomes(const StateVec& s,
                                             const FusionRails& rails = {});

/// Two-photon click patterns on the BSM outputs a, b, c, d = H1, V1, H2, V2.
enum class TwoPhotonPattern { AA, BB, CC, DD, AB, AC, AD, BC, BD, CD };

inline constexpr std::array<TwoPhotonPattern, 10> kTwoPhotonPatterns{
    TwoPhotonPattern::AA, TwoPhotonPattern::BB, TwoPhotonPattern::CC,
    TwoPhotonPattern::DD, TwoPhotonPattern::AB, TwoPhotonPattern::AC,
    TwoPhotonPattern::AD, TwoPhotonPattern::BC, TwoPhotonPattern::BD,
    TwoPhotonPattern::CD};

/// "a²", "ab", ...
std::string to_string(TwoPhotonPattern p);
FockKet pattern_ket(TwoPhotonPattern p);

/// Probability of each two-photon pattern after sending `label` through
/// bsm_matrix(eta_h, eta_v).
std::map<TwoPhotonPattern, double> bsm_pattern_probabilities(BellLabel label,
                                                             double eta_h,
                                                             double eta_v);

inline constexpr double kSupportThreshold = 1e-12;

/// Patterns with probability above kSupportThreshold.
std::set<TwoPhotonPattern> pattern_support(BellLabel label, double eta_h,
                                           double eta_v);

}  // namespace avgfusion
