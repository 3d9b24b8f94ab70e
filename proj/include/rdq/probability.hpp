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

#include <Eigen/Dense>

namespace rdq {

/// Classical distribution over lattice configurations: a nonnegative real
/// vector of length 2^n_sites summing to one. Configuration index bit k
/// (site 0 most significant) is 0 when site k is occupied.
class ProbabilityState {
 public:
  ProbabilityState(int n_sites, Eigen::VectorXd probs);

  static ProbabilityState point_mass(int n_sites, std::uint64_t config);

  int n_sites() const { return n_sites_; }
  const Eigen::VectorXd& probs() const { return probs_; }
  double prob(std::uint64_t config) const {
    return probs_(static_cast<Eigen::Index>(config));
  }

 private:
  int n_sites_;
  Eigen::VectorXd probs_;
};

/// Value of a configuration-diagonal observable on each basis configuration.
struct DiagonalObservable {
  Eigen::VectorXd values;

  /// Total particle count of each configuration (number of zero bits).
  static DiagonalObservable total_particles(int n_sites);
  /// Indicator of a single configuration.
  static DiagonalObservable state_indicator(int n_sites, std::uint64_t config);
};

/// Number of occupied sites in a configuration.
int occupation_count(int n_sites, std::uint64_t config);

}  // namespace rdq
