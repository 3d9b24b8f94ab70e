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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rdq/model.hpp"
#include "rdq/probability.hpp"

namespace rdq {

/// Configuration index of a `*`/`o` site pattern, site 0 leftmost,
/// `*` occupied (bit 0).
std::uint64_t parse_pattern(std::string_view pattern, int n_sites);
std::string pattern_string(int n_sites, std::uint64_t config);

/// Initial distribution: a basis pattern or a weighted mixture
/// `w1:pattern1;w2:pattern2` with weights summing to 1.
struct InitialSpec {
  struct Component {
    double weight;
    std::uint64_t config;
    bool operator==(const Component&) const = default;
  };
  std::vector<Component> components;

  static InitialSpec parse(std::string_view text, int n_sites);
  ProbabilityState to_state(int n_sites) const;
  std::string str(int n_sites) const;

  bool operator==(const InitialSpec&) const = default;
};

enum class ObservableKind { TotalParticles, StateProb, FullDistribution };

struct ObservableSpec {
  ObservableKind kind;
  std::uint64_t config = 0;  // StateProb only
  bool operator==(const ObservableSpec&) const = default;
};

enum class Engine { Quantum, Oracle, Both };

/// One fully deterministic experiment: model, initial distribution, Trotter
/// grid, output cadence and observables.
struct ExperimentConfig {
  ModelSpec model;
  InitialSpec initial;
  double dt = 0.0;
  double t_max = 0.0;
  int sample_every = 1;
  std::vector<ObservableSpec> observables;
  Engine engine = Engine::Both;
};

/// Parses the flat INI-style text ([model] / [run] / [observables]
/// sections). Malformed input raises ConfigError carrying the line number.
ExperimentConfig parse_config(const std::string& text);

/// Canonical INI text; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ExperimentConfig& config);

/// Applies one `section.key=value` override to config text, replacing the
/// first matching key or appending to the section.
std::string apply_config_override(const std::string& config_text,
                                  const std::string& override_spec);

}  // namespace rdq
