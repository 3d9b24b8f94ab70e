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

#include "rdq/probability.hpp"
#include "rdq/statevector.hpp"

namespace rdq {

/// A probability distribution loaded into the quantum register: amplitudes
/// P_i / sqrt(sum P_j^2) on the system qubits, ancilla in |0>.
struct EncodedState {
  SimState state;
  double l1_norm;   // original probability sum, 1 by construction
  double l2_scale;  // sqrt(sum P_i^2), the amplitude rescale factor
};

EncodedState encode(const ProbabilityState& p);

/// Normalization factor <P|psi> = sqrt(2^n) <0...0| H^(x)n |psi>, computed
/// by actually applying the Hadamard layer to the system qubits and reading
/// the all-zeros amplitude, cross-checked against the direct amplitude sum.
/// Requires the ancilla resolved to |0>; a non-real overlap beyond
/// tolerance is a decoding-validity error.
double projection_overlap(const SimState& state);

/// Recovers the probability distribution: P_i = Re(psi_i) / overlap, with
/// the imaginary residue guarded, negatives in [-1e-6, 0) clipped, and the
/// result rescaled by its true sum.
ProbabilityState decode(const SimState& state);

/// Mean total particle number of a distribution (occupied = zero bit).
double particle_number(const ProbabilityState& p);

}  // namespace rdq
