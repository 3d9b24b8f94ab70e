// Copyright 2026 The rdqsim Authors
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

#include "rdq/config.hpp"

namespace rdq {

/// One output row: sample time, one value per column, and (for quantum
/// engines) the cumulative post-selection success probability in log space.
struct TimeSeriesRecord {
  double t = 0.0;
  std::vector<double> values;
  double log_success = 0.0;
  bool has_success = false;
};

struct ExperimentResult {
  /// Column names after `t` (and `success_prob` when present); for
  /// engine=both each observable contributes `<name>,<name>_oracle`.
  std::vector<std::string> columns;
  std::vector<TimeSeriesRecord> records;
  bool has_success = false;

  std::string to_csv() const;
  /// Index into columns/values, -1 when absent.
  int column_index(const std::string& name) const;
};

/// Runs the configured pipeline on the shared time grid. Quantum path:
/// encode, then one synthesized Trotter step per dt with decoding only at
/// sample points (the statevector carries through in between). Oracle path:
/// exact propagation at the sample points. Fully deterministic.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Prints a positive decimal for exp(log_success) even far below the
/// double underflow threshold.
std::string format_success(double log_success);

struct PresetJob {
  std::string name;
  std::string config_text;  // parseable INI
};

struct Preset {
  std::string name;
  std::string summary;
  std::vector<PresetJob> jobs;
};

/// The shipped experiment catalog. Stable order and parameters.
const std::vector<Preset>& preset_catalog();
const Preset* find_preset(const std::string& name);

/// Catalog as text: `# preset <name> job <job>` banners followed by each
/// job's config, separated by blank lines.
std::string list_presets_text();

}  // namespace rdq
