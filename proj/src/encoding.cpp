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

#include "rdq/encoding.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdq/errors.hpp"

namespace rdq {

namespace {
constexpr double kOverlapImagTol = 1e-8;
constexpr double kAmplitudeImagTol = 1e-8;
constexpr double kOverlapPathTol = 1e-10;
constexpr double kOverlapMinimum = 1e-12;
// Trotter error drives near-zero components slightly negative; at the
// shipped step sizes the residue reaches the 1e-5 scale.
constexpr double kNegativeClipWindow = 1e-4;
}  // namespace

EncodedState encode(const ProbabilityState& p) {
  const int n = p.n_sites();
  const double l2 = p.probs().norm();
  if (l2 <= 0.0)
    throw std::invalid_argument("encode: degenerate zero distribution");
  std::vector<std::complex<double>> amps(std::size_t{1} << (n + 1),
                                         std::complex<double>{0.0});
  for (Eigen::Index i = 0; i < p.probs().size(); ++i)
    amps[static_cast<std::size_t>(i) << 1] = p.probs()(i) / l2;
  return {SimState::from_amplitudes(n, std::move(amps)), p.probs().sum(), l2};
}

double projection_overlap(const SimState& state) {
  if (state.ancilla_one_weight() > 1e-10)
    throw std::logic_error(
        "projection_overlap: ancilla not resolved to |0>, weight " +
        std::to_string(state.ancilla_one_weight()));

  // Circuit-faithful path: Hadamard every system qubit, read <0...0|.
  SimState rotated = state;
  for (int q = 0; q < state.n_system(); ++q)
    apply_gate(rotated, Gate::hadamard(q));
  const double scale = std::sqrt(std::pow(2.0, state.n_system()));
  const std::complex<double> overlap = scale * rotated.amplitude(0);

  // Cross-check: <P|psi> is also the plain amplitude sum.
  std::complex<double> direct{0.0};
  const std::uint64_t sys_dim = std::uint64_t{1} << state.n_system();
  for (std::uint64_t i = 0; i < sys_dim; ++i)
    direct += state.system_amplitude(i);
  if (std::abs(overlap - direct) > kOverlapPathTol)
    throw std::logic_error(
        "projection_overlap: Hadamard-layer path and amplitude sum disagree "
        "by " +
        std::to_string(std::abs(overlap - direct)));

  if (std::abs(overlap.imag()) > kOverlapImagTol)
    throw DecodeError("projection_overlap: imaginary part " +
                      std::to_string(overlap.imag()) + " beyond tolerance");
  return overlap.real();
}

ProbabilityState decode(const SimState& state) {
  const double overlap = projection_overlap(state);
  if (overlap <= kOverlapMinimum)
    throw DecodeError("decode: overlap " + std::to_string(overlap) +
                      " too small");
  const std::uint64_t sys_dim = std::uint64_t{1} << state.n_system();
  Eigen::VectorXd p(static_cast<Eigen::Index>(sys_dim));
  for (std::uint64_t i = 0; i < sys_dim; ++i) {
    const std::complex<double> amp = state.system_amplitude(i);
    if (std::abs(amp.imag()) > kAmplitudeImagTol)
      throw DecodeError("decode: amplitude " + std::to_string(i) +
                        " has imaginary residue " +
                        std::to_string(amp.imag()));
    p(static_cast<Eigen::Index>(i)) = amp.real() / overlap;
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < -kNegativeClipWindow)
      throw DecodeError("decode: component " + std::to_string(p(i)) +
                        " below the negative-clip window");
    if (p(i) < 0.0) p(i) = 0.0;
    sum += p(i);
  }
  if (std::abs(sum - 1.0) > 1e-3)
    throw DecodeError("decode: clipped sum " + std::to_string(sum) +
                      " too far from 1");
  p /= sum;
  return ProbabilityState(state.n_system(), std::move(p));
}

double particle_number(const ProbabilityState& p) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < p.probs().size(); ++i)
    total += p.probs()(i) *
             occupation_count(p.n_sites(), static_cast<std::uint64_t>(i));
  return total;
}

}  // namespace rdq
