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

#include "rdq/pauli.hpp"

namespace rdq {

enum class GateKind {
  Hadamard,
  SPhase,
  SPhaseDagger,
  PauliX,
  CNOT,
  RotZ,
  CRotX,
  PostSelectZero,
};

struct Gate {
  GateKind kind;
  int q0 = -1;         // sole target, or control for CNOT/CRotX
  int q1 = -1;         // target for CNOT/CRotX
  double angle = 0.0;  // RotZ/CRotX, radians

  static Gate hadamard(int q) { return {GateKind::Hadamard, q}; }
  static Gate s_phase(int q) { return {GateKind::SPhase, q}; }
  static Gate s_phase_dagger(int q) { return {GateKind::SPhaseDagger, q}; }
  static Gate pauli_x(int q) { return {GateKind::PauliX, q}; }
  static Gate cnot(int control, int target) {
    return {GateKind::CNOT, control, target};
  }
  static Gate rot_z(int q, double angle) {
    return {GateKind::RotZ, q, -1, angle};
  }
  static Gate crot_x(int control, int target, double angle) {
    return {GateKind::CRotX, control, target, angle};
  }
  static Gate post_select_zero(int q) { return {GateKind::PostSelectZero, q}; }

  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over n_system qubits plus one reusable ancilla at
/// index n_system. Every CRotX is followed by PostSelectZero on the ancilla
/// before the ancilla is used again.
struct Circuit {
  int n_system = 0;
  std::vector<Gate> gates;

  int ancilla_index() const { return n_system; }
  int n_total() const { return n_system + 1; }
  std::size_t postselect_count() const;

  void append(const Circuit& other);

  /// Header `QUBITS <n_total>`, then one gate per line
  /// (`GATE <kind> q0 [q1] [angle]` or `POSTSEL q`).
  std::string serialize() const;
};

/// Deterministic per-step factorization of a pseudo-Hamiltonian.
struct TrotterPlan {
  double dt = 0.0;
  long n_steps = 0;
  std::vector<PauliTerm> factor_order;
};

/// Splits total time into round(t_total/dt) steps and fixes the factor
/// order: lexicographic in (support sites, letter sequence). Emits a
/// warning to stderr when t_total is not an integer multiple of dt.
TrotterPlan make_trotter_plan(const PseudoHamiltonian& h, double t_total,
                              double dt);

/// Gate fragment implementing e^{-c P dt} for one Pauli term. An imaginary
/// coefficient c = i*a gives the unitary gadget (basis change, CNOT ladder,
/// RotZ(2 a dt)); a real coefficient routes the ladder target through the
/// ancilla: CRotX(2 arccos(e^{-2|alpha|})) with alpha = c*dt, post-selected
/// on ancilla 0, conjugated by PauliX on the target when alpha > 0.
Circuit synthesize_factor(const PauliTerm& term, double dt, int n_system);

/// One Trotter step: the plan's factors synthesized in order.
Circuit synthesize_step(const PseudoHamiltonian& h, double dt);

/// Full first-order Trotter circuit for e^{-Ht}; the constant term is never
/// synthesized. An empty Hamiltonian (or t_total = 0) gives an empty
/// circuit.
Circuit trotterize(const PseudoHamiltonian& h, double t_total, double dt);

}  // namespace rdq
