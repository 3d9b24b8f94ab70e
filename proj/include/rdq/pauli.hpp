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
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace rdq {

/// Widest operator that is still materialized as a dense matrix.
inline constexpr int kMaxDenseQubits = 12;

/// Coefficients below this magnitude are treated as zero and dropped.
inline constexpr double kCoefficientPruneTol = 1e-14;

/// A term coefficient must be purely real or purely imaginary; the smaller
/// part is snapped to zero when below this tolerance, otherwise the term is
/// rejected as mixed.
inline constexpr double kCoefficientPurityTol = 1e-12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Dense 2x2 matrix of a single Pauli letter.
const Eigen::Matrix2cd& pauli_matrix(Pauli p);

/// A tensor product of single-site Pauli letters, one per qubit. Qubit 0 is
/// the most significant position of the basis index. Immutable after
/// construction.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters)
      : letters_(std::move(letters)) {}

  /// Parses e.g. "IXYZ" (leftmost letter = qubit 0).
  static PauliString parse(std::string_view text);

  int width() const { return static_cast<int>(letters_.size()); }
  Pauli letter(int qubit) const { return letters_.at(qubit); }
  const std::vector<Pauli>& letters() const { return letters_; }

  bool is_identity() const;
  /// Qubit indices carrying a non-identity letter, in increasing order.
  std::vector<int> support() const;

  std::string str() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> letters_;
};

/// A complex-weighted Pauli string. After builder normalization the
/// coefficient is purely real (Hermitian term, non-unitary Trotter factor)
/// or purely imaginary (anti-Hermitian term, unitary factor).
struct PauliTerm {
  std::complex<double> coefficient;
  PauliString string;
};

/// Merges identical strings, drops vanishing coefficients, returns terms in
/// lexicographic letter order. All inputs must share one width.
std::vector<PauliTerm> simplify(const std::vector<PauliTerm>& terms);

Eigen::MatrixXcd to_matrix(const PauliString& s);
Eigen::MatrixXcd to_matrix(const PauliTerm& t);

/// A weighted Pauli-term sum plus the tracked constant offset (the dropped
/// identity coefficient). Generator of e^{-Ht}. Construction merges
/// duplicate strings, absorbs all-identity terms into the constant, prunes
/// vanishing coefficients and rejects mixed real/imaginary coefficients.
class PseudoHamiltonian {
 public:
  PseudoHamiltonian(int width, std::vector<PauliTerm> terms,
                    double constant = 0.0);

  int width() const { return width_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  double constant() const { return constant_; }

  /// One line per term `<re>,<im> <letters>`, then `CONST <value>`.
  std::string dump() const;

 private:
  int width_;
  std::vector<PauliTerm> terms_;
  double constant_;
};

Eigen::MatrixXcd to_matrix(const PseudoHamiltonian& h, bool include_constant);

}  // namespace rdq
