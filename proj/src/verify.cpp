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

#include "avgfusion/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "avgfusion/averaging_network.hpp"
#include "avgfusion/closed_form.hpp"
#include "avgfusion/detection.hpp"
#include "avgfusion/interferometry.hpp"
#include "avgfusion/metrics.hpp"
#include "avgfusion/sweep.hpp"

namespace avgfusion {

namespace {

using Support = std::set<TwoPhotonPattern>;

Support perfect_support(BellLabel label) {
  using P = TwoPhotonPattern;
  switch (label) {
    case BellLabel::PsiPlus: return {P::AB, P::CD};
    case BellLabel::PsiMinus: return {P::AD, P::BC};
    default: return {P::AA, P::BB, P::CC, P::DD};
  }
}

Support imperfect_support(BellLabel label) {
  using P = TwoPhotonPattern;
  Support s = perfect_support(label);
  switch (label) {
    case BellLabel::PsiPlus: s.insert({P::AD, P::BC}); break;
    case BellLabel::PsiMinus: break;
    default: s.insert({P::AC, P::BD}); break;
  }
  return s;
}

StateVec bsm_expected_output(BellLabel label) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (label) {
    case BellLabel::PsiPlus:
      return StateVec(4, {{FockKet{1, 1, 0, 0}, -r}, {FockKet{0, 0, 1, 1}, r}});
    case BellLabel::PsiMinus:
      return StateVec(4, {{FockKet{1, 0, 0, 1}, r}, {FockKet{0, 1, 1, 0}, -r}});
    case BellLabel::PhiPlus:
      return StateVec(4, {{FockKet{2, 0, 0, 0}, -0.5}, {FockKet{0, 2, 0, 0}, -0.5},
                          {FockKet{0, 0, 2, 0}, 0.5}, {FockKet{0, 0, 0, 2}, 0.5}});
    case BellLabel::PhiMinus:
      return StateVec(4, {{FockKet{2, 0, 0, 0}, -0.5}, {FockKet{0, 2, 0, 0}, 0.5},
                          {FockKet{0, 0, 2, 0}, 0.5}, {FockKet{0, 0, 0, 2}, -0.5}});
  }
  throw std::invalid_argument("unknown BellLabel");
}

SuiteResult bsm_state_maps(const VerifyOptions& opt) {
  double dev = 0.0;
  for (BellLabel label : kBellLabels) {
    const StateVec out = apply_transfer(bsm_matrix(0.5, 0.5), bell_state(label));
    dev = std::max(dev, max_deviation_up_to_phase(bsm_expected_output(label), out));
  }
  TrialStream rng(opt.seed);
  const StateVec psi_minus = bell_state(BellLabel::PsiMinus);
  for (int i = 0; i < opt.samples; ++i) {
    const double eta = rng.uniform01();
    const StateVec out = apply_transfer(bsm_matrix(eta, eta), psi_minus);
    dev = std::max(dev, max_deviation_up_to_phase(psi_minus, out));
  }
  return {"BSM-state-maps", dev <= 1e-12, dev, 1e-12};
}

SuiteResult table_two(const VerifyOptions&) {
  bool ok = true;
  double dev = 0.0;
  for (BellLabel label : kBellLabels) {
    for (double eta : {0.5, 0.3}) {
      const Support expected = eta == 0.5 ? perfect_support(label) : imperfect_support(label);
      ok = ok && pattern_support(label, eta, eta) == expected;
      for (const auto& [p, prob] : bsm_pattern_probabilities(label, eta, eta)) {
        if (!expected.contains(p)) dev = std::max(dev, prob);
      }
    }
  }
  return {"pattern-support", ok && dev < 1e-12, dev, 1e-12};
}

SuiteResult perfect_fusion(const VerifyOptions& opt) {
  double dev = 0.0;
  for (int n : {1, 2, 3}) {
    TrialStream rng(opt.seed);
    const TrialRecord rec = run_fusion_trial(n, 0.0, rng);
    const auto& fm = std::get<FusionMetrics>(rec.metrics);
    dev = std::max({dev, std::abs(fm.p_hh - 0.125), std::abs(fm.p_single - 0.5),
                    std::abs(fm.f_hh_norm - 1.0), std::abs(fm.trace_distance)});
  }
  return {"perfect-fusion", dev <= 1e-10, dev, 1e-10};
}

SuiteResult parity_sum(const VerifyOptions&) {
  double dev = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double ex = 0.05 + 0.1 * i;
      const double ey = 0.05 + 0.1 * j;
      TransferMatrix t = direct_sum(fusion_gate(ex, ey), TransferMatrix::identity(4));
      const auto o = fusion_outcomes(apply_transfer(t, fusion_input_state()));
      const double total = o[0].probability + o[1].probability + o[2].probability +
                           o[3].probability;
      dev = std::max({dev, std::abs(total - 0.5),
                      std::abs(o[0].probability - o[3].probability),
                      std::abs(o[1].probability - o[2].probability)});
    }
  }
  return {"parity-sum-law", dev <= 1e-12, dev, 1e-12};
}

SuiteResult mn_equivalence(const VerifyOptions& opt) {
  double dev = 0.0;
  TrialStream rng(opt.seed + 1);
  for (int n : {2, 3, 4}) {
    for (int s = 0; s < opt.samples; ++s) {
      std::vector<TransferMatrix> copies;
      for (int k = 0; k < n; ++k) {
        copies.push_back(fusion_gate(sample_reflectivity(rng, 0.3),
                                     sample_reflectivity(rng, 0.3)));
      }
      const AveragedNetwork net = build_averaged_network(copies, 4);
      const StateVec via_network = postselect_vacuum_ancilla(
          run_averaged(net, fusion_input_state()), net.layout);
      const TransferMatrix mean =
          direct_sum(effective_average(copies), TransferMatrix::identity(4));
      const StateVec via_matrix = apply_transfer(mean, fusion_input_state());
      dev = std::max(dev, max_amplitude_deviation(via_network, via_matrix));
    }
  }
  return {"M_N-equivalence", dev <= 1e-10, dev, 1e-10};
}

SuiteResult closed_form_bsm(const VerifyOptions& opt) {
  double dev = 0.0;
  TrialStream rng(opt.seed + 2);
  for (int n = 1; n <= 5; ++n) {
    for (int s = 0; s < opt.samples; ++s) {
      const TrialRecord rec = run_bsm_trial(n, 0.5, rng);
      const auto& bm = std::get<BsmMetrics>(rec.metrics);
      dev = std::max({dev, std::abs(bm.f - bm.f_closed),
                      std::abs(bm.p_success - bm.p_success_closed),
                      std::abs(bm.f_norm - bm.f_norm_closed)});
    }
  }
  return {"closed-form-BSM", dev <= 1e-10, dev, 1e-10};
}

SuiteResult network_unitarity(const VerifyOptions& opt) {
  double dev = 0.0;
  TrialStream rng(opt.seed + 3);
  for (int n = 1; n <= 4; ++n) {
    std::vector<TransferMatrix> copies;
    for (int k = 0; k < n; ++k) {
      copies.push_back(fusion_gate(rng.uniform01(), rng.uniform01()));
    }
    dev = std::max(dev, unitarity_defect(build_averaged_network(copies, 4).total.matrix()));
  }
  return {"network-unitarity", dev <= 1e-12, dev, 1e-12};
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  if (options.samples < 1) {
    throw std::invalid_argument("verify: samples must be >= 1");
  }
  return {mn_equivalence(options), closed_form_bsm(options), perfect_fusion(options),
          parity_sum(options),     bsm_state_maps(options),  table_two(options),
          network_unitarity(options)};
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::string out;
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%s: %s (max dev %.3g %s %.0e)\n", r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", r.max_deviation,
                  r.passed ? "<=" : ">", r.tolerance);
    out += line;
  }
  return out;
}

}  // namespace avgfusion
