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

#include "rdq/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "rdq/errors.hpp"
#include "rdq/hamiltonian.hpp"

namespace rdq {

namespace {

// e^{-Ht} P, no renormalization. Scaling-and-squaring Pade exponential.
Eigen::VectorXd propagate_raw(const Eigen::MatrixXd& generator, double t,
                              const Eigen::VectorXd& p) {
  const Eigen::MatrixXd u = (-t * generator).exp();
  return u * p;
}

ProbabilityState renormalize(int n_sites, Eigen::VectorXd v) {
  const double sum = v.sum();
  if (std::abs(sum - 1.0) > 1e-6)
    throw ConservationError("exact propagation: probability sum drifted to " +
                            std::to_string(sum));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0.0 && v(i) > -1e-12) v(i) = 0.0;
  v /= v.sum();
  return ProbabilityState(n_sites, std::move(v));
}

}  // namespace

ProbabilityState evolve_exact(const ProbabilityState& p0,
                              const ModelSpec& model, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve_exact: negative time");
  if (model.lattice.n_sites != p0.n_sites())
    throw ShapeError("evolve_exact: state has " +
                     std::to_string(p0.n_sites()) + " sites, model has " +
                     std::to_string(model.lattice.n_sites));
  const Eigen::MatrixXd generator = build_generator(model);
  return renormalize(p0.n_sites(),
                     propagate_raw(generator, t, p0.probs()));
}

double expectation(const ProbabilityState& p, const DiagonalObservable& o) {
  if (o.values.size() != p.probs().size())
    throw ShapeError("expectation: observable dimension " +
                     std::to_string(o.values.size()) + " vs state " +
                     std::to_string(p.probs().size()));
  return o.values.dot(p.probs());
}

double two_point(const ProbabilityState& p0, const ModelSpec& model,
                 const DiagonalObservable& o, double t1, double t2) {
  if (t1 < 0.0 || t2 < t1)
    throw std::invalid_argument("two_point: requires 0 <= t1 <= t2");
  if (o.values.size() != p0.probs().size())
    throw ShapeError("two_point: observable dimension mismatch");
  const Eigen::MatrixXd generator = build_generator(model);
  Eigen::VectorXd v = propagate_raw(generator, t1, p0.probs());
  v = o.values.cwiseProduct(v);
  v = propagate_raw(generator, t2 - t1, v);
  v = o.values.cwiseProduct(v);
  // <P| is the all-ones row.
  return v.sum();
}

ExactPropagator::ExactPropagator(const ModelSpec& model, double dt)
    : n_sites_(model.lattice.n_sites) {
  if (dt < 0.0) throw std::invalid_argument("ExactPropagator: negative step");
  step_matrix_ = (-dt * build_generator(model)).exp();
}

ProbabilityState ExactPropagator::step(const ProbabilityState& p) const {
  if (p.n_sites() != n_sites_)
    throw ShapeError("ExactPropagator: state width mismatch");
  return renormalize(n_sites_, step_matrix_ * p.probs());
}

}  // namespace rdq
