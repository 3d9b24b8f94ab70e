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

#include "rdq/probability.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rdq {

namespace {
constexpr double kNegativeTol = 1e-12;
constexpr double kSumTol = 1e-9;
}  // namespace

ProbabilityState::ProbabilityState(int n_sites, Eigen::VectorXd probs)
    : n_sites_(n_sites), probs_(std::move(probs)) {
  if (n_sites < 1)
    throw std::invalid_argument("ProbabilityState needs at least one site");
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  if (probs_.size() != dim)
    throw std::invalid_argument("ProbabilityState: expected " +
                                std::to_string(dim) + " entries, got " +
                                std::to_string(probs_.size()));
  if (probs_.minCoeff() < -kNegativeTol)
    throw std::invalid_argument("ProbabilityState: component " +
                                std::to_string(probs_.minCoeff()) +
                                " below tolerance");
  const double sum = probs_.sum();
  if (std::abs(sum - 1.0) > kSumTol)
    throw std::invalid_argument("ProbabilityState: sum " +
                                std::to_string(sum) + " is not 1");
}

ProbabilityState ProbabilityState::point_mass(int n_sites,
                                              std::uint64_t config) {
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  if (config >= static_cast<std::uint64_t>(dim))
    throw std::invalid_argument("point_mass: configuration out of range");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
  p(static_cast<Eigen::Index>(config)) = 1.0;
  return ProbabilityState(n_sites, std::move(p));
}

int occupation_count(int n_sites, std::uint64_t config) {
  // Occupied sites are the zero bits of the configuration index.
  return n_sites - std::popcount(config & ((std::uint64_t{1} << n_sites) - 1));
}

DiagonalObservable DiagonalObservable::total_particles(int n_sites) {
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v(i) = occupation_count(n_sites, static_cast<std::uint64_t>(i));
  return {std::move(v)};
}

DiagonalObservable DiagonalObservable::state_indicator(int n_sites,
                                                       std::uint64_t config) {
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(static_cast<Eigen::Index>(config)) = 1.0;
  return {std::move(v)};
}

}  // namespace rdq
