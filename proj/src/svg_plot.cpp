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

#include "avgfusion/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace avgfusion {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : spec.series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double e = i < s.err.size() ? s.err[i] : 0.0;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i] - e);
      ymax = std::max(ymax, s.y[i] + e);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (xmax - xmin < 1e-12) xmin -= 0.5, xmax += 0.5;
  if (ymax - ymin < 1e-12) ymin -= 0.5, ymax += 0.5;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
     << escape(spec.title) << "</text>\n"
     << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
     << num(plot_w) << "\" height=\"" << num(plot_h)
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4.0;
    const double yv = ymin + (ymax - ymin) * i / 4.0;
    os << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kTop + plot_h + 18)
       << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n"
       << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(yv) + 4)
       << "\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
  }
  os << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 12)
     << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n"
     << "<text x=\"16\" y=\"" << num(kTop + plot_h / 2)
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << num(kTop + plot_h / 2) << ")\">" << escape(spec.y_label) << "</text>\n";

  for (std::size_t k = 0; k < spec.series.size(); ++k) {
    const auto& s = spec.series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    os << "<g stroke=\"" << color << "\" fill=\"" << color << "\">\n";
    if (!s.x.empty()) {
      os << "<polyline fill=\"none\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        os << (i ? " " : "") << num(px(s.x[i])) << ',' << num(py(s.y[i]));
      }
      os << "\"/>\n";
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double e = i < s.err.size() ? s.err[i] : 0.0;
      if (e > 0.0) {
        os << "<line x1=\"" << num(px(s.x[i])) << "\" y1=\"" << num(py(s.y[i] - e))
           << "\" x2=\"" << num(px(s.x[i])) << "\" y2=\"" << num(py(s.y[i] + e))
           << "\"/>\n";
      }
      os << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i]))
         << "\" r=\"3\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(k);
    os << "<line x1=\"" << num(kWidth - kRight + 12) << "\" y1=\"" << num(ly)
       << "\" x2=\"" << num(kWidth - kRight + 36) << "\" y2=\"" << num(ly) << "\"/>\n"
       << "<text stroke=\"none\" fill=\"black\" x=\"" << num(kWidth - kRight + 42)
       << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label) << "</text>\n"
       << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string default_plot_metric(Experiment e) {
  switch (e) {
    case Experiment::Fusion: return "F_HH_norm";
    case Experiment::Bsm: return "F_norm";
    case Experiment::TraceDistance: return "trace_distance";
  }
  throw std::invalid_argument("unknown Experiment");
}

PlotSpec sweep_plot(const SweepResult& result, const std::string& metric) {
  const auto names = metric_names(result.config.experiment);
  const auto it = std::find(names.begin(), names.end(), metric);
  if (it == names.end()) {
    throw std::invalid_argument("metric '" + metric + "' is not produced by the " +
                                to_string(result.config.experiment) + " sweep");
  }
  const auto k = static_cast<std::size_t>(it - names.begin());

  PlotSpec spec;
  spec.y_label = metric;
  if (result.config.m_grid.size() == 1) {
    spec.title = to_string(result.config.experiment) + " sweep, m = " +
                 tick(result.config.m_grid.front());
    spec.x_label = "N";
    PlotSeries s{metric, {}, {}, {}};
    for (const auto& c : result.cells) {
      s.x.push_back(c.n_copies);
      s.y.push_back(c.mean[k]);
      s.err.push_back(c.stddev[k]);
    }
    spec.series.push_back(std::move(s));
    return spec;
  }
  spec.title = to_string(result.config.experiment) + " sweep";
  spec.x_label = "m";
  for (int n : result.config.n_copies_list) {
    PlotSeries s{"N = " + std::to_string(n), {}, {}, {}};
    for (const auto& c : result.cells) {
      if (c.n_copies != n) continue;
      s.x.push_back(c.m);
      s.y.push_back(c.mean[k]);
      s.err.push_back(c.stddev[k]);
    }
    spec.series.push_back(std::move(s));
  }
  return spec;
}

}  // namespace avgfusion
