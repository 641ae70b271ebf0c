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

#include <string>
#include <vector>

#include "avgfusion/sweep.hpp"

namespace avgfusion {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  /// Half-height of the error bar at each point (may be empty).
  std::vector<double> err;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Standalone SVG line plot with error bars.
std::string render_svg(const PlotSpec& spec);

/// Mean +- std of `metric` against m, one series per N. When the sweep has
/// a single m value, plots against N instead.
PlotSpec sweep_plot(const SweepResult& result, const std::string& metric);

/// Metric plotted by default for each experiment.
std::string default_plot_metric(Experiment e);

}  // namespace avgfusion
