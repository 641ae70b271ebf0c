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

// Command-line driver: Monte-Carlo sweeps, verification suites and the
// BSM pattern table.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "avgfusion/detection.hpp"
#include "avgfusion/svg_plot.hpp"
#include "avgfusion/sweep.hpp"
#include "avgfusion/verify.hpp"

namespace {

constexpr const char* kVersion = "avgfusion 0.1.0";

struct SweepFlags {
  std::vector<int> n_copies;
  std::string m_grid;
  double m = 0.2;
  int samples = 200;
  std::uint64_t seed = 0;
  std::string out;
  std::string svg;
  std::string svg_metric;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_config_option(CLI::App* sub) {
  sub->add_option("--config", "Flat key=value file; each key names a flag (without "
                              "dashes), flags on the command line take precedence");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Expands `--config <path>` into ordinary flags inserted right after the
// subcommand, skipping keys already given on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty() || args.size() < 2) return args;

  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  auto given = [&](const std::string& key) {
    for (const auto& a : args) {
      if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> extra;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ConversionError("config line " + std::to_string(line_no) +
                                 " is not key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key == "config") continue;
    if (!given(key)) {
      extra.push_back("--" + key);
      extra.push_back(trim(line.substr(eq + 1)));
    }
  }
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

CLI::App* add_sweep_command(CLI::App& app, const std::string& name,
                            const std::string& description, SweepFlags& f,
                            bool single_m) {
  CLI::App* sub = app.add_subcommand(name, description);
  add_config_option(sub);
  sub->add_option("--n-copies", f.n_copies, "Comma-separated encoding levels N")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  if (single_m) {
    sub->add_option("--m", f.m, "Reflectivity spread m in [0, 0.5]")
        ->check(CLI::Range(0.0, 0.5))
        ->capture_default_str();
  } else {
    sub->add_option("--m-grid", f.m_grid, "m values as start:stop:step or a,b,c")
        ->capture_default_str();
  }
  sub->add_option("--samples", f.samples, "Trials per (N, m) cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  sub->add_option("--out", f.out, "CSV output path")->required();
  sub->add_option("--svg", f.svg, "Also write an SVG plot to this path");
  sub->add_option("--svg-metric", f.svg_metric,
                  "Metric column to plot (defaults per experiment)");
  return sub;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  return os;
}

void write_all(std::ofstream& os, const std::string& path, const std::string& text) {
  os << text;
  os.flush();
  if (!os) throw IoError("failed writing '" + path + "'");
}

int run_sweep_command(avgfusion::Experiment experiment, const SweepFlags& f,
                      bool single_m) {
  avgfusion::SweepConfig cfg;
  cfg.experiment = experiment;
  cfg.n_copies_list = f.n_copies;
  try {
    cfg.m_grid = single_m ? std::vector<double>{f.m} : avgfusion::parse_m_grid(f.m_grid);
    cfg.samples = f.samples;
    cfg.master_seed = f.seed;
    cfg.output_path = f.out;
    avgfusion::validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const std::string metric = f.svg_metric.empty()
                                 ? avgfusion::default_plot_metric(experiment)
                                 : f.svg_metric;
  const auto names = avgfusion::metric_names(experiment);
  if (std::find(names.begin(), names.end(), metric) == names.end()) {
    std::cerr << "error: unknown --svg-metric '" << metric << "'\n";
    return 2;
  }

  try {
    std::ofstream csv = open_output(f.out);
    std::ofstream svg;
    if (!f.svg.empty()) svg = open_output(f.svg);

    const avgfusion::SweepResult result = avgfusion::run_sweep(cfg);
    std::ostringstream text;
    avgfusion::write_csv(result, text);
    write_all(csv, f.out, text.str());
    if (!f.svg.empty()) {
      write_all(svg, f.svg,
                avgfusion::render_svg(avgfusion::sweep_plot(result, metric)));
    }

    const auto k = static_cast<std::size_t>(
        std::find(names.begin(), names.end(), metric) - names.begin());
    std::cout << "N,m,mean_" << metric << ",std_" << metric << '\n';
    for (const auto& c : result.cells) {
      std::cout << c.n_copies << ',' << avgfusion::format_double(c.m) << ','
                << avgfusion::format_double(c.mean[k]) << ','
                << avgfusion::format_double(c.stddev[k]) << '\n';
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run_table2(double eta_h, double eta_v) {
  using avgfusion::BellLabel;
  std::cout << "eta_h = " << eta_h << ", eta_v = " << eta_v << '\n';
  std::cout << "pattern  psi+  psi-  phi+  phi-\n";
  for (auto pattern : avgfusion::kTwoPhotonPatterns) {
    const std::string name = avgfusion::to_string(pattern);
    std::cout << name << std::string(pattern <= avgfusion::TwoPhotonPattern::DD ? 8 : 7, ' ');
    for (BellLabel label : avgfusion::kBellLabels) {
      const bool here = avgfusion::pattern_support(label, eta_h, eta_v).contains(pattern);
      const bool perfect = avgfusion::pattern_support(label, 0.5, 0.5).contains(pattern);
      const char* mark = here ? (perfect ? "✓" : "×") : " ";
      std::cout << mark << (label == BellLabel::PhiMinus ? "" : "     ");
    }
    std::cout << '\n';
  }
  std::cout << "✓ possible at eta = 1/2 and here; × possible only away from 1/2\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary-averaged fusion gate and Bell-measurement simulator"};
  app.require_subcommand(1);

  SweepFlags fusion{{1, 2, 3}, "0:0.45:0.05", 0.2, 200, 0, "", "", ""};
  SweepFlags bsm{{1, 2, 3}, "0:0.4:0.1", 0.2, 200, 0, "", "", ""};
  SweepFlags trace{{1, 2, 3, 4, 5, 6}, "", 0.2, 50, 0, "", "", ""};
  CLI::App* fusion_cmd = add_sweep_command(
      app, "fusion-sweep", "Averaged Type-II fusion: F_HH, P_HH, P_single vs m", fusion,
      false);
  CLI::App* bsm_cmd = add_sweep_command(
      app, "bsm-sweep", "Averaged Bell measurement: F, P_success, F_norm vs m", bsm,
      false);
  CLI::App* trace_cmd = add_sweep_command(
      app, "trace-distance", "Trace distance of the averaged fusion gate vs N", trace,
      true);

  int verify_samples = 20;
  std::uint64_t verify_seed = 1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the oracle cross-check suites");
  add_config_option(verify_cmd);
  verify_cmd->add_option("--samples", verify_samples, "Random instances per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Seed")->capture_default_str();

  double eta_h = 0.5;
  double eta_v = 0.5;
  CLI::App* table_cmd =
      app.add_subcommand("table2", "Two-photon pattern support of the four Bell states");
  add_config_option(table_cmd);
  table_cmd->add_option("--eta-h", eta_h, "Reflectivity of the H beam-splitter")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  table_cmd->add_option("--eta-v", eta_v, "Reflectivity of the V beam-splitter")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  CLI::App* version_cmd = app.add_subcommand("version", "Print the version");

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*fusion_cmd) return run_sweep_command(avgfusion::Experiment::Fusion, fusion, false);
    if (*bsm_cmd) return run_sweep_command(avgfusion::Experiment::Bsm, bsm, false);
    if (*trace_cmd) {
      return run_sweep_command(avgfusion::Experiment::TraceDistance, trace, true);
    }
    if (*verify_cmd) {
      const auto results = avgfusion::run_verification({verify_samples, verify_seed});
      std::cout << avgfusion::format_report(results);
      for (const auto& r : results) {
        if (!r.passed) return 1;
      }
      return 0;
    }
    if (*table_cmd) return run_table2(eta_h, eta_v);
    if (*version_cmd) {
      std::cout << kVersion << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
