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

#include "rdq/statevector.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rdq/errors.hpp"

namespace rdq {

namespace {

using Complex = std::complex<double>;

constexpr Complex kImag{0.0, 1.0};

std::uint64_t qubit_mask(int n_total, int q) {
  return std::uint64_t{1} << (n_total - 1 - q);
}

}  // namespace

SimState SimState::basis(int n_system, std::uint64_t sys_index) {
  if (n_system < 1 || n_system + 1 > 24)
    throw CapacityError("SimState limited to 23 system qubits");
  if (sys_index >= (std::uint64_t{1} << n_system))
    throw std::invalid_argument("SimState::basis: index out of range");
  std::vector<Complex> amps(std::size_t{1} << (n_system + 1), Complex{0.0});
  amps[sys_index << 1] = 1.0;
  return SimState(n_system, std::move(amps));
}

SimState SimState::from_amplitudes(int n_system, std::vector<Complex> amps) {
  if (amps.size() != (std::size_t{1} << (n_system + 1)))
    throw ShapeError("SimState: expected " +
                     std::to_string(std::size_t{1} << (n_system + 1)) +
                     " amplitudes, got " + std::to_string(amps.size()));
  double norm_sq = 0.0;
  for (const Complex& a : amps) norm_sq += std::norm(a);
  if (norm_sq < kExtinctionTol)
    throw std::invalid_argument("SimState: zero amplitude vector");
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (Complex& a : amps) a *= inv;
  return SimState(n_system, std::move(amps));
}

double SimState::norm() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double SimState::ancilla_one_weight() const {
  double w = 0.0;
  for (std::size_t i = 1; i < amps_.size(); i += 2) w += std::norm(amps_[i]);
  return w;
}

long double SimState::success_prob() const {
  return std::exp(static_cast<long double>(log_success_));
}

std::string SimState::dump() const {
  std::ostringstream os;
  char buf[96];
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", i, amps_[i].real(),
                  amps_[i].imag());
    os << buf;
  }
  return os.str();
}

namespace {

// 2x2 kernel on qubit q: iterate pairs (i, i|mask) with bit q clear in i.
template <typename Body>
void for_each_pair(std::vector<Complex>& amps, std::uint64_t mask, Body body) {
  const std::uint64_t size = amps.size();
  const std::uint64_t low = mask - 1;  // bits below the target bit
  for (std::uint64_t k = 0; k < size / 2; ++k) {
    const std::uint64_t i = ((k & ~low) << 1) | (k & low);
    body(amps[i], amps[i | mask]);
  }
}

}  // namespace

void apply_gate(SimState& state, const Gate& gate) {
  auto& amps = state.amps_;
  const int n_total = state.n_total();
  auto check_q = [&](int q) {
    if (q < 0 || q >= n_total)
      throw std::invalid_argument("gate targets qubit " + std::to_string(q) +
                                  " outside register of " +
                                  std::to_string(n_total));
  };
  check_q(gate.q0);

  switch (gate.kind) {
    case GateKind::Hadamard: {
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for_each_pair(amps, qubit_mask(n_total, gate.q0),
                    [&](Complex& a, Complex& b) {
                      const Complex u = inv_sqrt2 * (a + b);
                      const Complex v = inv_sqrt2 * (a - b);
                      a = u;
                      b = v;
                    });
      break;
    }
    case GateKind::SPhase:
      for_each_pair(amps, qubit_mask(n_total, gate.q0),
                    [&](Complex&, Complex& b) { b *= kImag; });
      break;
    case GateKind::SPhaseDagger:
      for_each_pair(amps, qubit_mask(n_total, gate.q0),
                    [&](Complex&, Complex& b) { b *= -kImag; });
      break;
    case GateKind::PauliX:
      for_each_pair(amps, qubit_mask(n_total, gate.q0),
                    [&](Complex& a, Complex& b) { std::swap(a, b); });
      break;
    case GateKind::RotZ: {
      const Complex phase0 = std::exp(-kImag * (gate.angle / 2.0));
      const Complex phase1 = std::exp(kImag * (gate.angle / 2.0));
      for_each_pair(amps, qubit_mask(n_total, gate.q0),
                    [&](Complex& a, Complex& b) {
                      a *= phase0;
                      b *= phase1;
                    });
      break;
    }
    case GateKind::CNOT: {
      check_q(gate.q1);
      if (gate.q0 == gate.q1)
        throw std::invalid_argument("CNOT control equals target");
      const std::uint64_t cmask = qubit_mask(n_total, gate.q0);
      const std::uint64_t tmask = qubit_mask(n_total, gate.q1);
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
      break;
    }
    case GateKind::CRotX: {
      check_q(gate.q1);
      if (gate.q0 == gate.q1)
        throw std::invalid_argument("CRotX control equals target");
      const std::uint64_t cmask = qubit_mask(n_total, gate.q0);
      const std::uint64_t tmask = qubit_mask(n_total, gate.q1);
      const double c = std::cos(gate.angle / 2.0);
      const Complex ms = -kImag * std::sin(gate.angle / 2.0);
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
          const Complex a = amps[i];
          const Complex b = amps[i | tmask];
          amps[i] = c * a + ms * b;
          amps[i | tmask] = ms * a + c * b;
        }
      }
      break;
    }
    case GateKind::PostSelectZero: {
      const std::uint64_t mask = qubit_mask(n_total, gate.q0);
      double weight = 0.0;
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (!(i & mask)) weight += std::norm(amps[i]);
      // norm drift can push the measured weight a few ulp past 1
      weight = std::min(weight, 1.0);
      if (weight < kExtinctionTol)
        throw ExtinctionError("post-selection weight " +
                              std::to_string(weight) +
                              " below extinction threshold");
      const double inv = 1.0 / std::sqrt(weight);
      for (std::uint64_t i = 0; i < amps.size(); ++i)
        amps[i] = (i & mask) ? Complex{0.0} : amps[i] * inv;
      state.log_success_ += std::log(weight);
      break;
    }
  }
}

SimState run_circuit(const Circuit& circuit, SimState initial) {
  if (circuit.n_system != initial.n_system())
    throw ShapeError("run_circuit: circuit width " +
                     std::to_string(circuit.n_system) + " vs state width " +
                     std::to_string(initial.n_system()));
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    try {
      apply_gate(initial, circuit.gates[g]);
    } catch (const ExtinctionError& e) {
      throw ExtinctionError(std::string(e.what()) + " (gate " +
                                std::to_string(g) + ")",
                            g);
    }
  }
  return initial;
}

}  // namespace rdq
