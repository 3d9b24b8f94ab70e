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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rdq/circuit.hpp"

namespace rdq {

/// Post-selection weights below this are treated as a dead trajectory.
inline constexpr double kExtinctionTol = 1e-14;

/// Dense complex statevector over n_system qubits plus the ancilla (least
/// significant bit; qubit 0 is the most significant). Amplitudes stay
/// 2-normalized; the cumulative post-selection success probability is
/// tracked in log space since it decays exponentially with the number of
/// non-unitary factors.
class SimState {
 public:
  /// Basis state |sys_index> (x) |0>_ancilla.
  static SimState basis(int n_system, std::uint64_t sys_index);
  /// Full-register amplitudes (length 2^(n_system+1)); normalizes, rejects
  /// the zero vector.
  static SimState from_amplitudes(int n_system,
                                  std::vector<std::complex<double>> amps);

  int n_system() const { return n_system_; }
  int n_total() const { return n_system_ + 1; }
  int ancilla_index() const { return n_system_; }

  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::uint64_t index) const {
    return amps_[index];
  }
  /// Amplitude of |sys_index> (x) |0>_ancilla.
  std::complex<double> system_amplitude(std::uint64_t sys_index) const {
    return amps_[sys_index << 1];
  }
  /// Probability mass currently on ancilla = 1.
  double ancilla_one_weight() const;

  double log_success() const { return log_success_; }
  /// exp(log_success) in extended precision; underflows double for long
  /// non-unitary circuits, hence the log-space bookkeeping.
  long double success_prob() const;

  double norm() const;

  /// One `<index> <re> <im>` line per amplitude, for debugging.
  std::string dump() const;

  friend void apply_gate(SimState& state, const Gate& gate);

 private:
  SimState(int n_system, std::vector<std::complex<double>> amps)
      : n_system_(n_system), amps_(std::move(amps)) {}

  int n_system_;
  std::vector<std::complex<double>> amps_;
  double log_success_ = 0.0;
};

/// In-place gate kernel. PostSelectZero zeroes the one-branch of its qubit,
/// renormalizes and multiplies the success probability by the projected
/// weight; a weight under kExtinctionTol throws ExtinctionError.
void apply_gate(SimState& state, const Gate& gate);

/// Applies the gates in order. An extinction is rethrown with the offending
/// gate index attached.
SimState run_circuit(const Circuit& circuit, SimState initial);

}  // namespace rdq
