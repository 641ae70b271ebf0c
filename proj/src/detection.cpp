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

#include "avgfusion/detection.hpp"

#include <stdexcept>

#include "avgfusion/interferometry.hpp"

namespace avgfusion {

namespace {

void validate(const DetectionPattern& pattern, int mode_count) {
  if (pattern.measured_modes.size() != pattern.counts.size()) {
    throw std::invalid_argument(
        "DetectionPattern: modes and counts differ in length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(mode_count), false);
  for (std::size_t i = 0; i < pattern.measured_modes.size(); ++i) {
    const int mode = pattern.measured_modes[i];
    if (mode < 0 || mode >= mode_count) {
      throw std::out_of_range("DetectionPattern: mode index out of range");
    }
    if (seen[static_cast<std::size_t>(mode)]) {
      throw std::invalid_argument("DetectionPattern: repeated mode index");
    }
    seen[static_cast<std::size_t>(mode)] = true;
    if (pattern.counts[i] < 0) {
      throw std::invalid_argument("DetectionPattern: negative count");
    }
  }
}

std::vector<int> unmeasured_modes(const std::vector<int>& measured, int mode_count) {
  std::vector<bool> is_measured(static_cast<std::size_t>(mode_count), false);
  for (int m : measured) is_measured[static_cast<std::size_t>(m)] = true;
  std::vector<int> rest;
  for (int i = 0; i < mode_count; ++i) {
    if (!is_measured[static_cast<std::size_t>(i)]) rest.push_back(i);
  }
  return rest;
}

}  // namespace

Projection project_pattern(const StateVec& s, const DetectionPattern& pattern) {
  validate(pattern, s.mode_count());
  const std::vector<int> rest = unmeasured_modes(pattern.measured_modes, s.mode_count());
  StateVec residual(static_cast<int>(rest.size()));
  for (const auto& [ket, amp] : s.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < pattern.measured_modes.size() && match; ++i) {
      match = ket[pattern.measured_modes[i]] == pattern.counts[i];
    }
    if (!match) continue;
    std::vector<int> occ;
    occ.reserve(rest.size());
    for (int mode : rest) occ.push_back(ket[mode]);
    residual.add(FockKet(std::move(occ)), amp);
  }
  residual.prune();
  const double p = norm_sq(residual);
  return {std::move(residual), p};
}

std::map<std::vector<int>, double> pattern_distribution(
    const StateVec& s, const std::vector<int>& measured_modes) {
  validate({measured_modes, std::vector<int>(measured_modes.size(), 0)},
           s.mode_count());
  std::map<std::vector<int>, double> dist;
  for (const auto& [ket, amp] : s.terms()) {
    std::vector<int> key;
    key.reserve(measured_modes.size());
    for (int mode : measured_modes) key.push_back(ket[mode]);
    dist[std::move(key)] += std::norm(amp);
  }
  return dist;
}

std::string to_string(FusionLabel label) {
  switch (label) {
    case FusionLabel::HH: return "HH";
    case FusionLabel::HV: return "HV";
    case FusionLabel::VH: return "VH";
    case FusionLabel::VV: return "VV";
  }
  throw std::invalid_argument("unknown FusionLabel");
}

std::array<FusionOutcome, 4> fusion_outcomes(const StateVec& s,
                                             const FusionRails& rails) {
  const std::vector<int> modes{rails.h1, rails.v1, rails.h2, rails.v2};
  auto outcome = [&](FusionLabel label, std::vector<int> counts) {
    auto [residual, p] = project_pattern(s, {modes, std::move(counts)});
    return FusionOutcome{label, p, std::move(residual)};
  };
  return {outcome(FusionLabel::HH, {1, 0, 1, 0}),
          outcome(FusionLabel::HV, {1, 0, 0, 1}),
          outcome(FusionLabel::VH, {0, 1, 1, 0}),
          outcome(FusionLabel::VV, {0, 1, 0, 1})};
}

std::string to_string(TwoPhotonPattern p) {
  switch (p) {
    case TwoPhotonPattern::AA: return "a²";
    case TwoPhotonPattern::BB: return "b²";
    case TwoPhotonPattern::CC: return "c²";
    case TwoPhotonPattern::DD: return "d²";
    case TwoPhotonPattern::AB: return "ab";
    case TwoPhotonPattern::AC: return "ac";
    case TwoPhotonPattern::AD: return "ad";
    case TwoPhotonPattern::BC: return "bc";
    case TwoPhotonPattern::BD: return "bd";
    case TwoPhotonPattern::CD: return "cd";
  }
  throw std::invalid_argument("unknown TwoPhotonPattern");
}

FockKet pattern_ket(TwoPhotonPattern p) {
  switch (p) {
    case TwoPhotonPattern::AA: return {2, 0, 0, 0};
    case TwoPhotonPattern::BB: return {0, 2, 0, 0};
    case TwoPhotonPattern::CC: return {0, 0, 2, 0};
    case TwoPhotonPattern::DD: return {0, 0, 0, 2};
    case TwoPhotonPattern::AB: return {1, 1, 0, 0};
    case TwoPhotonPattern::AC: return {1, 0, 1, 0};
    case TwoPhotonPattern::AD: return {1, 0, 0, 1};
    case TwoPhotonPattern::BC: return {0, 1, 1, 0};
    case TwoPhotonPattern::BD: return {0, 1, 0, 1};
    case TwoPhotonPattern::CD: return {0, 0, 1, 1};
  }
  throw std::invalid_argument("unknown TwoPhotonPattern");
}

std::map<TwoPhotonPattern, double> bsm_pattern_probabilities(BellLabel label,
                                                             double eta_h,
                                                             double eta_v) {
  const StateVec out = apply_transfer(bsm_matrix(eta_h, eta_v), bell_state(label));
  std::map<TwoPhotonPattern, double> probs;
  for (TwoPhotonPattern p : kTwoPhotonPatterns) {
    probs[p] = std::norm(out.amplitude(pattern_ket(p)));
  }
  return probs;
}

std::set<TwoPhotonPattern> pattern_support(BellLabel label, double eta_h,
                                           double eta_v) {
  std::set<TwoPhotonPattern> support;
  for (const auto& [p, prob] : bsm_pattern_probabilities(label, eta_h, eta_v)) {
    if (prob > kSupportThreshold) support.insert(p);
  }
  return support;
}

}  // namespace avgfusion
