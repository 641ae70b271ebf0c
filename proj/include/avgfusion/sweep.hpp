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

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "avgfusion/fock.hpp"

namespace avgfusion {

enum class Experiment { Fusion, Bsm, TraceDistance };

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& text);

struct SweepConfig {
  Experiment experiment = Experiment::Fusion;
  std::vector<int> n_copies_list{1, 2, 3};
  std::vector<double> m_grid{0.0};
  int samples = 200;
  std::uint64_t master_seed = 0;
  std::string output_path;
};

/// Throws std::invalid_argument / std::domain_error on a bad config.
void validate(const SweepConfig& cfg);

/// "start:stop:step" (inclusive, snapped to 1e-12) or "a,b,c".
std::vector<double> parse_m_grid(const std::string& text);

/// Independent random stream for one trial.
///
/// The seed is a SplitMix64 hash chain over (master seed, experiment,
/// N, m index, trial index), so every trial draws the same numbers no
/// matter which worker runs it or in what order.
class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, Experiment experiment, int n_copies,
              std::size_t m_index, std::size_t trial);
  explicit TrialStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

/// Uniform on [0.5 - m, 0.5 + m]; exactly 0.5 at m = 0.
double sample_reflectivity(TrialStream& rng, double m);

struct FusionMetrics {
  double f_hh;
  double p_hh;
  double f_hh_norm;
  double p_single;
  double trace_distance;
};

struct BsmMetrics {
  double f;
  double p_success;
  double f_norm;
  double f_closed;
  double p_success_closed;
  double f_norm_closed;
};

struct TraceDistanceMetrics {
  double trace_distance;
};

struct TrialRecord {
  Experiment experiment;
  int n_copies;
  double m;
  std::size_t trial = 0;
  /// eta_x (fusion, trace-distance) or eta_h (bsm), one per copy.
  std::vector<double> eta_first;
  /// eta_y or eta_v.
  std::vector<double> eta_second;
  std::variant<FusionMetrics, BsmMetrics, TraceDistanceMetrics> metrics;
};

std::vector<std::string> metric_names(Experiment e);
std::vector<double> metric_values(const TrialRecord& r);

/// Bell x Bell input of the fusion experiment on 8 modes: the fused qubits'
/// rails (H1, V1, H2, V2) first, then the outer qubits' rails.
StateVec fusion_input_state();
/// (|HH> + |VV>) / sqrt(2) on the two outer qubits.
StateVec fusion_even_target();
/// (|0011> - |1100>) / sqrt(2), the BSM image of psi+.
StateVec bsm_target();

TrialRecord run_fusion_trial(int n_copies, double m, TrialStream& rng);
TrialRecord run_bsm_trial(int n_copies, double m, TrialStream& rng);
/// Matrix-level only: trace distance of the averaged fusion gate.
TrialRecord run_trace_distance_trial(int n_copies, double m, TrialStream& rng);
TrialRecord run_trial(Experiment e, int n_copies, double m, TrialStream& rng);

struct CellSummary {
  int n_copies;
  double m;
  std::vector<TrialRecord> trials;
  std::vector<double> mean;
  /// Sample standard deviation (n - 1); 0 for a single trial.
  std::vector<double> stddev;
};

struct SweepResult {
  SweepConfig config;
  /// N-major, then m-grid order.
  std::vector<CellSummary> cells;

  const CellSummary& cell(int n_copies, double m) const;
};

/// Worker count from AVGFUSION_THREADS, else the hardware concurrency.
unsigned default_worker_count();

/// Runs every (N, m, trial) and aggregates in trial order. `workers` = 0
/// picks default_worker_count(). Output does not depend on `workers`.
SweepResult run_sweep(const SweepConfig& cfg, unsigned workers = 0);

/// Round-trip (17 significant digit) formatting.
std::string format_double(double v);

void write_csv(const SweepResult& result, std::ostream& out);

}  // namespace avgfusion
