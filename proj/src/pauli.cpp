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

#include "rdq/pauli.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "rdq/errors.hpp"

namespace rdq {

namespace {

void check_dense_width(int width) {
  if (width < 1) throw ShapeError("operator width must be positive");
  if (width > kMaxDenseQubits)
    throw CapacityError("dense materialization limited to " +
                        std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(width));
}

// Formats a real number, keeping a decimal point so integral values read as
// e.g. "0.0" rather than "0".
std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s(buf);
  if (s.find_first_of(".einf") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("invalid Pauli letter");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "'");
  }
}

const Eigen::Matrix2cd& pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  static const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix2cd x = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd y =
      (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
  static const Eigen::Matrix2cd z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  switch (p) {
    case Pauli::I: return id;
    case Pauli::X: return x;
    case Pauli::Y: return y;
    case Pauli::Z: return z;
  }
  throw std::logic_error("invalid Pauli letter");
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(pauli_from_char(c));
  return PauliString(std::move(letters));
}

bool PauliString::is_identity() const {
  for (Pauli p : letters_)
    if (p != Pauli::I) return false;
  return true;
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 0; q < width(); ++q)
    if (letters_[q] != Pauli::I) out.push_back(q);
  return out;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s += pauli_char(p);
  return s;
}

std::vector<PauliTerm> simplify(const std::vector<PauliTerm>& terms) {
  if (terms.empty()) return {};
  const int width = terms.front().string.width();
  // std::map keys iterate in lexicographic letter order, which fixes the
  // output order.
  std::map<PauliString, std::complex<double>> merged;
  for (const PauliTerm& t : terms) {
    if (t.string.width() != width)
      throw ShapeError("simplify: terms of width " +
                       std::to_string(t.string.width()) + " and " +
                       std::to_string(width) + " mixed");
    merged[t.string] += t.coefficient;
  }
  std::vector<PauliTerm> out;
  out.reserve(merged.size());
  for (auto& [s, c] : merged) {
    if (std::abs(c) < kCoefficientPruneTol) continue;
    out.push_back({c, s});
  }
  return out;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::Matrix2cd& b) {
  Eigen::MatrixXcd out(a.rows() * 2, a.cols() * 2);
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

}  // namespace

Eigen::MatrixXcd to_matrix(const PauliString& s) {
  check_dense_width(s.width());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  // Qubit 0 is the leftmost Kronecker factor, i.e. the most significant
  // index position.
  for (int q = 0; q < s.width(); ++q) m = kron(m, pauli_matrix(s.letter(q)));
  return m;
}

Eigen::MatrixXcd to_matrix(const PauliTerm& t) {
  return t.coefficient * to_matrix(t.string);
}

PseudoHamiltonian::PseudoHamiltonian(int width, std::vector<PauliTerm> terms,
                                     double constant)
    : width_(width), constant_(constant) {
  if (width < 1) throw ShapeError("PseudoHamiltonian width must be positive");
  for (const PauliTerm& t : terms)
    if (t.string.width() != width)
      throw ShapeError("PseudoHamiltonian: term width " +
                       std::to_string(t.string.width()) +
                       " does not match declared width " +
                       std::to_string(width));
  std::vector<PauliTerm> merged = simplify(terms);
  terms_.reserve(merged.size());
  for (PauliTerm& t : merged) {
    if (t.string.is_identity()) {
      if (std::abs(t.coefficient.imag()) > kCoefficientPurityTol)
        throw std::logic_error(
            "PseudoHamiltonian: identity term has imaginary coefficient");
      constant_ += t.coefficient.real();
      continue;
    }
    double re = t.coefficient.real();
    double im = t.coefficient.imag();
    if (std::abs(re) > kCoefficientPurityTol &&
        std::abs(im) > kCoefficientPurityTol)
      throw std::logic_error("PseudoHamiltonian: mixed coefficient (" +
                             std::to_string(re) + "," + std::to_string(im) +
                             ") on term " + t.string.str());
    // Snap the sub-tolerance part to exactly zero.
    if (std::abs(re) <= kCoefficientPurityTol) re = 0.0;
    if (std::abs(im) <= kCoefficientPurityTol) im = 0.0;
    t.coefficient = {re, im};
    if (std::abs(t.coefficient) < kCoefficientPruneTol) continue;
    terms_.push_back(std::move(t));
  }
}

std::string PseudoHamiltonian::dump() const {
  std::ostringstream os;
  for (const PauliTerm& t : terms_)
    os << format_real(t.coefficient.real()) << ','
       << format_real(t.coefficient.imag()) << ' ' << t.string.str() << '\n';
  os << "CONST " << format_real(constant_) << '\n';
  return os.str();
}

Eigen::MatrixXcd to_matrix(const PseudoHamiltonian& h, bool include_constant) {
  check_dense_width(h.width());
  const Eigen::Index dim = Eigen::Index{1} << h.width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliTerm& t : h.terms()) m += to_matrix(t);
  if (include_constant)
    m += h.constant() * Eigen::MatrixXcd::Identity(dim, dim);
  return m;
}

}  // namespace rdq
