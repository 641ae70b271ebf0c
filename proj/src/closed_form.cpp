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

#include "avgfusion/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "avgfusion/interferometry.hpp"
#include "avgfusion/metrics.hpp"

namespace avgfusion {

namespace {

struct RootSums {
  double transmitted = 0.0;  // sum sqrt(eta)
  double reflected = 0.0;    // sum sqrt(1 - eta)
};

RootSums root_sums(const std::vector<double>& etas) {
  RootSums s;
  for (double eta : etas) {
    s.transmitted += std::sqrt(eta);
    s.reflected += std::sqrt(1.0 - eta);
  }
  return s;
}

double n4(const ReflectivityDraw& d) {
  const double n = d.n_copies();
  return n * n * n * n;
}

}  // namespace

void validate(const ReflectivityDraw& d) {
  if (d.eta_h.empty() || d.eta_h.size() != d.eta_v.size()) {
    throw std::invalid_argument(
        "ReflectivityDraw: need N >= 1 and equal-length eta lists");
  }
  for (double eta : d.eta_h) check_reflectivity(eta, "eta_h");
  for (double eta : d.eta_v) check_reflectivity(eta, "eta_v");
}

double bsm_fidelity_closed(const ReflectivityDraw& d) {
  validate(d);
  const RootSums h = root_sums(d.eta_h);
  const RootSums v = root_sums(d.eta_v);
  const double bracket = h.transmitted * v.reflected + h.reflected * v.transmitted;
  return bracket * bracket / n4(d);
}

double bsm_psuccess_closed(const ReflectivityDraw& d) {
  validate(d);
  const RootSums h = root_sums(d.eta_h);
  const RootSums v = root_sums(d.eta_v);
  const double h_factor = h.transmitted * h.transmitted + h.reflected * h.reflected;
  const double v_factor = v.transmitted * v.transmitted + v.reflected * v.reflected;
  return h_factor * v_factor / n4(d);
}

double bsm_fnorm_closed(const ReflectivityDraw& d) {
  const double p = bsm_psuccess_closed(d);
  if (!(p > 0.0)) {
    throw std::domain_error("bsm_fnorm_closed: zero success probability");
  }
  return normalized_fidelity(bsm_fidelity_closed(d), p).value;
}

}  // namespace avgfusion
