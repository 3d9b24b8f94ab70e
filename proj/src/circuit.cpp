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

#include "rdq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "rdq/errors.hpp"

namespace rdq {

std::size_t Circuit::postselect_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
        return g.kind == GateKind::PostSelectZero;
      }));
}

void Circuit::append(const Circuit& other) {
  if (other.n_system != n_system)
    throw ShapeError("Circuit::append: width mismatch");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

namespace {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::Hadamard: return "H";
    case GateKind::SPhase: return "S";
    case GateKind::SPhaseDagger: return "SDG";
    case GateKind::PauliX: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::RotZ: return "RZ";
    case GateKind::CRotX: return "CRX";
    case GateKind::PostSelectZero: return "POSTSEL";
  }
  throw std::logic_error("invalid gate kind");
}

std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

}  // namespace

std::string Circuit::serialize() const {
  std::ostringstream os;
  os << "QUBITS " << n_total() << '\n';
  for (const Gate& g : gates) {
    if (g.kind == GateKind::PostSelectZero) {
      os << "POSTSEL " << g.q0 << '\n';
      continue;
    }
    os << "GATE " << gate_name(g.kind) << ' ' << g.q0;
    if (g.kind == GateKind::CNOT || g.kind == GateKind::CRotX)
      os << ' ' << g.q1;
    if (g.kind == GateKind::RotZ || g.kind == GateKind::CRotX)
      os << ' ' << format_angle(g.angle);
    os << '\n';
  }
  return os.str();
}

namespace {

// Coefficient split into its pure-real or pure-imaginary value.
struct PureCoefficient {
  bool is_imaginary;
  double value;  // a with c = a (real) or c = i*a (imaginary)
};

PureCoefficient split_coefficient(const PauliTerm& term) {
  const double re = term.coefficient.real();
  const double im = term.coefficient.imag();
  if (std::abs(re) > kCoefficientPurityTol &&
      std::abs(im) > kCoefficientPurityTol)
    throw std::invalid_argument(
        "synthesize_factor: mixed coefficient on term " + term.string.str());
  if (std::abs(im) > std::abs(re)) return {true, im};
  return {false, re};
}

void emit_basis_entry(Circuit& c, const PauliString& s,
                      const std::vector<int>& support) {
  for (int q : support) {
    switch (s.letter(q)) {
      case Pauli::X:
        c.gates.push_back(Gate::hadamard(q));
        break;
      case Pauli::Y:
        c.gates.push_back(Gate::s_phase_dagger(q));
        c.gates.push_back(Gate::hadamard(q));
        break;
      default:
        break;
    }
  }
}

void emit_basis_exit(Circuit& c, const PauliString& s,
                     const std::vector<int>& support) {
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    switch (s.letter(*it)) {
      case Pauli::X:
        c.gates.push_back(Gate::hadamard(*it));
        break;
      case Pauli::Y:
        c.gates.push_back(Gate::hadamard(*it));
        c.gates.push_back(Gate::s_phase(*it));
        break;
      default:
        break;
    }
  }
}

}  // namespace

Circuit synthesize_factor(const PauliTerm& term, double dt, int n_system) {
  if (term.string.width() != n_system)
    throw ShapeError("synthesize_factor: term width " +
                     std::to_string(term.string.width()) + " vs n_system " +
                     std::to_string(n_system));
  if (term.string.is_identity())
    throw std::invalid_argument(
        "synthesize_factor: constants are never synthesized");

  Circuit c{n_system, {}};
  const PureCoefficient coeff = split_coefficient(term);
  if (coeff.value * dt == 0.0) return c;

  const std::vector<int> support = term.string.support();
  const int target = support.back();

  emit_basis_entry(c, term.string, support);
  for (std::size_t k = 0; k + 1 < support.size(); ++k)
    c.gates.push_back(Gate::cnot(support[k], support[k + 1]));

  if (coeff.is_imaginary) {
    c.gates.push_back(Gate::rot_z(target, 2.0 * coeff.value * dt));
  } else {
    const double alpha = coeff.value * dt;
    // Clamp absorbs rounding in exp() before the arccos.
    const double e = std::min(1.0, std::exp(-2.0 * std::abs(alpha)));
    const double theta = 2.0 * std::acos(e);
    const bool conjugate = alpha > 0.0;
    if (conjugate) c.gates.push_back(Gate::pauli_x(target));
    c.gates.push_back(Gate::crot_x(target, c.ancilla_index(), theta));
    if (conjugate) c.gates.push_back(Gate::pauli_x(target));
    c.gates.push_back(Gate::post_select_zero(c.ancilla_index()));
  }

  for (std::size_t k = support.size() - 1; k >= 1; --k)
    c.gates.push_back(Gate::cnot(support[k - 1], support[k]));
  emit_basis_exit(c, term.string, support);
  return c;
}

TrotterPlan make_trotter_plan(const PseudoHamiltonian& h, double t_total,
                              double dt) {
  if (dt <= 0.0) throw std::invalid_argument("trotterize: dt must be > 0");
  if (t_total < 0.0)
    throw std::invalid_argument("trotterize: t_total must be >= 0");
  const double ratio = t_total / dt;
  const long n_steps = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(n_steps)) >
      1e-9 * std::max(1.0, ratio))
    std::cerr << "warning: t_total/dt = " << ratio << " rounded to "
              << n_steps << " steps\n";

  TrotterPlan plan{dt, n_steps, h.terms()};
  std::sort(plan.factor_order.begin(), plan.factor_order.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              const auto sa = a.string.support();
              const auto sb = b.string.support();
              if (sa != sb) return sa < sb;
              return a.string.letters() < b.string.letters();
            });
  return plan;
}

Circuit synthesize_step(const PseudoHamiltonian& h, double dt) {
  const TrotterPlan plan = make_trotter_plan(h, dt, dt);
  Circuit step{h.width(), {}};
  for (const PauliTerm& term : plan.factor_order)
    step.append(synthesize_factor(term, dt, h.width()));
  return step;
}

Circuit trotterize(const PseudoHamiltonian& h, double t_total, double dt) {
  const TrotterPlan plan = make_trotter_plan(h, t_total, dt);
  Circuit full{h.width(), {}};
  if (plan.n_steps == 0 || h.terms().empty()) return full;
  const Circuit step = synthesize_step(h, dt);
  full.gates.reserve(step.gates.size() * static_cast<std::size_t>(plan.n_steps));
  for (long k = 0; k < plan.n_steps; ++k) full.append(step);
  return full;
}

}  // namespace rdq
