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

#include "avgfusion/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "avgfusion/averaging_network.hpp"
#include "avgfusion/closed_form.hpp"
#include "avgfusion/detection.hpp"
#include "avgfusion/interferometry.hpp"
#include "avgfusion/metrics.hpp"

namespace avgfusion {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t experiment_tag(Experiment e) {
  switch (e) {
    case Experiment::Fusion: return 0x66757369ULL;         // "fusi"
    case Experiment::Bsm: return 0x62736d00ULL;            // "bsm"
    case Experiment::TraceDistance: return 0x74726163ULL;  // "trac"
  }
  return 0;
}

void check_m(double m) {
  if (!(m >= 0.0 && m <= 0.5)) {
    throw std::domain_error("m = " + std::to_string(m) + " is outside [0, 0.5]");
  }
}

std::vector<double> sample_list(TrialStream& rng, int n, double m) {
  std::vector<double> etas(static_cast<std::size_t>(n));
  for (double& eta : etas) eta = sample_reflectivity(rng, m);
  return etas;
}

double snap(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::Fusion: return "fusion";
    case Experiment::Bsm: return "bsm";
    case Experiment::TraceDistance: return "trace-distance";
  }
  throw std::invalid_argument("unknown Experiment");
}

Experiment parse_experiment(const std::string& text) {
  for (Experiment e : {Experiment::Fusion, Experiment::Bsm, Experiment::TraceDistance}) {
    if (to_string(e) == text) return e;
  }
  throw std::invalid_argument("unknown experiment '" + text + "'");
}

void validate(const SweepConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (cfg.n_copies_list.empty()) throw std::invalid_argument("no N values given");
  for (int n : cfg.n_copies_list) {
    if (n < 1) throw std::invalid_argument("N must be >= 1");
  }
  if (cfg.m_grid.empty()) throw std::invalid_argument("empty m grid");
  for (double m : cfg.m_grid) check_m(m);
}

std::vector<double> parse_m_grid(const std::string& text) {
  std::vector<double> grid;
  auto parse_number = [&](const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw std::invalid_argument("bad number '" + token + "' in m grid");
    }
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) {
      throw std::invalid_argument("m grid range must be start:stop:step");
    }
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || stop < start) {
      throw std::invalid_argument("m grid range needs step > 0 and stop >= start");
    }
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) grid.push_back(snap(start + static_cast<double>(i) * step));
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) grid.push_back(parse_number(part));
  }
  if (grid.empty()) throw std::invalid_argument("empty m grid");
  for (double m : grid) check_m(m);
  return grid;
}

TrialStream::TrialStream(std::uint64_t master_seed, Experiment experiment,
                         int n_copies, std::size_t m_index, std::size_t trial) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ experiment_tag(experiment));
  h = splitmix64(h ^ static_cast<std::uint64_t>(n_copies));
  h = splitmix64(h ^ static_cast<std::uint64_t>(m_index));
  h = splitmix64(h ^ static_cast<std::uint64_t>(trial));
  engine_.seed(h);
}

double TrialStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double sample_reflectivity(TrialStream& rng, double m) {
  check_m(m);
  const double u = rng.uniform01();
  return (0.5 - m) + 2.0 * m * u;
}

std::vector<std::string> metric_names(Experiment e) {
  switch (e) {
    case Experiment::Fusion:
      return {"F_HH", "P_HH", "F_HH_norm", "P_single", "trace_distance"};
    case Experiment::Bsm:
      return {"F", "P_success", "F_norm", "F_closed", "P_success_closed",
              "F_norm_closed"};
    case Experiment::TraceDistance:
      return {"trace_distance"};
  }
  throw std::invalid_argument("unknown Experiment");
}

std::vector<double> metric_values(const TrialRecord& r) {
  struct Visitor {
    std::vector<double> operator()(const FusionMetrics& m) const {
      return {m.f_hh, m.p_hh, m.f_hh_norm, m.p_single, m.trace_distance};
    }
    std::vector<double> operator()(const BsmMetrics& m) const {
      return {m.f, m.p_success, m.f_norm, m.f_closed, m.p_success_closed,
              m.f_norm_closed};
    }
    std::vector<double> operator()(const TraceDistanceMetrics& m) const {
      return {m.trace_distance};
    }
  };
  return std::visit(Visitor{}, r.metrics);
}

StateVec fusion_input_state() {
  // Bell pairs (q1, q2) and (q3, q4), each (|HH> + |VV>)/sqrt(2); q2 and q3
  // enter the gate.
  StateVec s(8);
  const int h[2] = {1, 0};
  const int v[2] = {0, 1};
  for (const int* a : {h, v}) {
    for (const int* b : {h, v}) {
      s.add(FockKet{a[0], a[1], b[0], b[1], a[0], a[1], b[0], b[1]}, 0.5);
    }
  }
  return s;
}

StateVec fusion_even_target() { return bell_state(BellLabel::PhiPlus); }

StateVec bsm_target() {
  const double r = 1.0 / std::sqrt(2.0);
  return StateVec(4, {{FockKet{0, 0, 1, 1}, r}, {FockKet{1, 1, 0, 0}, -r}});
}

TrialRecord run_fusion_trial(int n_copies, double m, TrialStream& rng) {
  TrialRecord rec{Experiment::Fusion, n_copies, m, 0, {}, {}, FusionMetrics{}};
  rec.eta_first = sample_list(rng, n_copies, m);
  rec.eta_second = sample_list(rng, n_copies, m);

  std::vector<TransferMatrix> copies;
  for (int i = 0; i < n_copies; ++i) {
    copies.push_back(fusion_gate(rec.eta_first[i], rec.eta_second[i]));
  }
  const AveragedNetwork net = build_averaged_network(copies, 4);
  const StateVec kept =
      postselect_vacuum_ancilla(run_averaged(net, fusion_input_state()), net.layout);
  const auto outcomes = fusion_outcomes(kept);

  FusionMetrics fm{};
  const FusionOutcome& hh = outcomes[0];
  fm.f_hh = fidelity(hh.residual, fusion_even_target());
  fm.p_hh = hh.probability;
  fm.f_hh_norm = normalized_fidelity(fm.f_hh, fm.p_hh).value;
  fm.p_single = 0.0;
  for (const auto& o : outcomes) fm.p_single += o.probability;
  fm.trace_distance = trace_distance(effective_average(copies), fusion_gate(0.5, 0.5));
  rec.metrics = fm;
  return rec;
}

TrialRecord run_bsm_trial(int n_copies, double m, TrialStream& rng) {
  TrialRecord rec{Experiment::Bsm, n_copies, m, 0, {}, {}, BsmMetrics{}};
  rec.eta_first = sample_list(rng, n_copies, m);
  rec.eta_second = sample_list(rng, n_copies, m);

  std::vector<TransferMatrix> copies;
  for (int i = 0; i < n_copies; ++i) {
    copies.push_back(bsm_matrix(rec.eta_first[i], rec.eta_second[i]));
  }
  const AveragedNetwork net = build_averaged_network(copies, 0);
  const StateVec kept = postselect_vacuum_ancilla(
      run_averaged(net, bell_state(BellLabel::PsiPlus)), net.layout);

  BsmMetrics bm{};
  bm.f = fidelity(kept, bsm_target());
  bm.p_success = norm_sq(kept);
  bm.f_norm = normalized_fidelity(bm.f, bm.p_success).value;
  const ReflectivityDraw draw{rec.eta_first, rec.eta_second};
  bm.f_closed = bsm_fidelity_closed(draw);
  bm.p_success_closed = bsm_psuccess_closed(draw);
  bm.f_norm_closed = bsm_fnorm_closed(draw);
  rec.metrics = bm;
  return rec;
}

TrialRecord run_trace_distance_trial(int n_copies, double m, TrialStream& rng) {
  TrialRecord rec{Experiment::TraceDistance, n_copies, m, 0, {}, {},
                  TraceDistanceMetrics{}};
  rec.eta_first = sample_list(rng, n_copies, m);
  rec.eta_second = sample_list(rng, n_copies, m);
  std::vector<TransferMatrix> copies;
  for (int i = 0; i < n_copies; ++i) {
    copies.push_back(fusion_gate(rec.eta_first[i], rec.eta_second[i]));
  }
  rec.metrics = TraceDistanceMetrics{
      trace_distance(effective_average(copies), fusion_gate(0.5, 0.5))};
  return rec;
}

TrialRecord run_trial(Experiment e, int n_copies, double m, TrialStream& rng) {
  if (n_copies < 1) throw std::invalid_argument("run_trial: N must be >= 1");
  switch (e) {
    case Experiment::Fusion: return run_fusion_trial(n_copies, m, rng);
    case Experiment::Bsm: return run_bsm_trial(n_copies, m, rng);
    case Experiment::TraceDistance: return run_trace_distance_trial(n_copies, m, rng);
  }
  throw std::invalid_argument("unknown Experiment");
}

const CellSummary& SweepResult::cell(int n_copies, double m) const {
  for (const auto& c : cells) {
    if (c.n_copies == n_copies && c.m == m) return c;
  }
  throw std::out_of_range("SweepResult::cell: no such (N, m) cell");
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("AVGFUSION_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SweepResult run_sweep(const SweepConfig& cfg, unsigned workers) {
  validate(cfg);
  if (workers == 0) workers = default_worker_count();

  struct Job {
    std::size_t cell;
    int n_copies;
    std::size_t m_index;
    std::size_t trial;
  };
  const auto samples = static_cast<std::size_t>(cfg.samples);
  SweepResult result{cfg, {}};
  std::vector<Job> jobs;
  for (int n : cfg.n_copies_list) {
    for (std::size_t mi = 0; mi < cfg.m_grid.size(); ++mi) {
      const std::size_t cell = result.cells.size();
      result.cells.push_back(CellSummary{n, cfg.m_grid[mi], {}, {}, {}});
      result.cells.back().trials.resize(samples);
      for (std::size_t t = 0; t < samples; ++t) jobs.push_back({cell, n, mi, t});
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size() && !failed; i = next++) {
      const Job& job = jobs[i];
      try {
        TrialStream rng(cfg.master_seed, cfg.experiment, job.n_copies, job.m_index,
                        job.trial);
        TrialRecord rec =
            run_trial(cfg.experiment, job.n_copies, cfg.m_grid[job.m_index], rng);
        rec.trial = job.trial;
        result.cells[job.cell].trials[job.trial] = std::move(rec);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t n_metrics = metric_names(cfg.experiment).size();
  for (auto& cell : result.cells) {
    cell.mean.assign(n_metrics, 0.0);
    cell.stddev.assign(n_metrics, 0.0);
    for (const auto& rec : cell.trials) {
      const auto values = metric_values(rec);
      for (std::size_t k = 0; k < n_metrics; ++k) cell.mean[k] += values[k];
    }
    for (double& v : cell.mean) v /= static_cast<double>(samples);
    if (samples > 1) {
      for (const auto& rec : cell.trials) {
        const auto values = metric_values(rec);
        for (std::size_t k = 0; k < n_metrics; ++k) {
          const double d = values[k] - cell.mean[k];
          cell.stddev[k] += d * d;
        }
      }
      for (double& v : cell.stddev) v = std::sqrt(v / static_cast<double>(samples - 1));
    }
  }
  return result;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  const Experiment e = result.config.experiment;
  const bool bsm = e == Experiment::Bsm;
  const auto names = metric_names(e);
  out << "experiment,N,m,row_kind,trial," << (bsm ? "eta_h,eta_v" : "eta_x,eta_y");
  for (const auto& name : names) out << ',' << name;
  out << '\n';

  auto join = [](const std::vector<double>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ';';
      s += format_double(xs[i]);
    }
    return s;
  };
  auto row_prefix = [&](const CellSummary& c, const char* kind) {
    out << to_string(e) << ',' << c.n_copies << ',' << format_double(c.m) << ','
        << kind << ',';
  };
  auto metrics = [&](const std::vector<double>& values) {
    for (double v : values) out << ',' << format_double(v);
    out << '\n';
  };

  for (const auto& c : result.cells) {
    for (const auto& rec : c.trials) {
      row_prefix(c, "trial");
      out << rec.trial << ',' << join(rec.eta_first) << ',' << join(rec.eta_second);
      metrics(metric_values(rec));
    }
    row_prefix(c, "mean");
    out << ",,";
    metrics(c.mean);
    row_prefix(c, "std");
    out << ",,";
    metrics(c.stddev);
  }
}

}  // namespace avgfusion
