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
#include <string>
#include <vector>

namespace avgfusion {

struct SuiteResult {
  std::string name;
  bool passed;
  double max_deviation;
  double tolerance;
};

struct VerifyOptions {
  /// Random instances per suite (copy sets, draws, reflectivities).
  int samples = 20;
  std::uint64_t seed = 1;
};

/// Runs the built-in oracle suites: network vs averaged-matrix evolution,
/// closed forms vs simulation, the fusion outcome table, the BSM state maps
/// and pattern table.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// One "name: PASS (max dev X < tol)" line per suite.
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace avgfusion
