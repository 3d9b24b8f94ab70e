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

#include "rdq/model.hpp"
#include "rdq/probability.hpp"

namespace rdq {

/// Propagates P0 by the exact matrix exponential e^{-Ht} of the full
/// generator (constants included). The result is renormalized only by
/// clipping floating-point-noise negatives and rescaling by the true sum;
/// a sum off by more than 1e-6 indicates a generator bug and throws.
ProbabilityState evolve_exact(const ProbabilityState& p0,
                              const ModelSpec& model, double t);

/// Sum_i O_i P_i.
double expectation(const ProbabilityState& p, const DiagonalObservable& o);

/// Two-point correlator <P| O e^{-H(t2-t1)} O e^{-H t1} |P0> with O the
/// diagonal matrix of the observable. Requires 0 <= t1 <= t2.
double two_point(const ProbabilityState& p0, const ModelSpec& model,
                 const DiagonalObservable& o, double t1, double t2);

/// Precomputed fixed-stride propagator for repeated sampling on a time
/// grid; each step() applies e^{-H dt} with the same renormalization rules
/// as evolve_exact.
class ExactPropagator {
 public:
  ExactPropagator(const ModelSpec& model, double dt);

  ProbabilityState step(const ProbabilityState& p) const;

 private:
  int n_sites_;
  Eigen::MatrixXd step_matrix_;
};

}  // namespace rdq
