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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "rdq/circuit.hpp"
#include "rdq/statevector.hpp"

namespace rdq::test {

/// Un-normalized linear map of a circuit on the system register (ancilla
/// |0> in, post-selected |0> out), reconstructed column by column. The
/// engine keeps states normalized, so each column is rescaled by
/// sqrt(success probability).
inline Eigen::MatrixXcd extract_system_operator(const Circuit& circuit) {
  const int n = circuit.n_system;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const SimState out = run_circuit(
        circuit, SimState::basis(n, static_cast<std::uint64_t>(col)));
    const double scale = std::exp(out.log_success() / 2.0);
    for (Eigen::Index row = 0; row < dim; ++row)
      m(row, col) =
          scale * out.system_amplitude(static_cast<std::uint64_t>(row));
  }
  return m;
}

inline double operator_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

/// Max-abs entry difference after normalizing both operators to unit
/// operator norm.
inline double aligned_deviation(const Eigen::MatrixXcd& a,
                                const Eigen::MatrixXcd& b) {
  return (a / operator_norm(a) - b / operator_norm(b)).cwiseAbs().maxCoeff();
}

/// Occupied-site mean of the single-site decay(lambda)/generation(nu)
/// system started from an occupied site.
inline double single_site_density(double lambda, double nu, double t) {
  const double stationary = nu / (lambda + nu);
  return stationary + (1.0 - stationary) * std::exp(-(lambda + nu) * t);
}

/// Least-squares slope of ln(y) against ln(x).
inline double loglog_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline PauliString random_string(std::mt19937& rng, int width) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Pauli> letters(width, Pauli::I);
  do {
    for (int q = 0; q < width; ++q)
      letters[q] = static_cast<Pauli>(letter(rng));
  } while (PauliString(letters).is_identity());
  return PauliString(letters);
}

/// Random pure-real or pure-imaginary coefficient with |c| in [lo, hi].
inline std::complex<double> random_pure_coefficient(std::mt19937& rng,
                                                    double lo, double hi) {
  std::uniform_real_distribution<double> mag(lo, hi);
  std::bernoulli_distribution flip(0.5);
  const double v = flip(rng) ? mag(rng) : -mag(rng);
  return flip(rng) ? std::complex<double>{v, 0.0}
                   : std::complex<double>{0.0, v};
}

}  // namespace rdq::test
