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

#include <doctest.h>

#include <random>

#include "rdq/errors.hpp"
#include "rdq/pauli.hpp"
#include "test_helpers.hpp"

using namespace rdq;
using Complex = std::complex<double>;

namespace {

// Generation/annihilation primitives, built by hand so the checks here do
// not depend on the hamiltonian module.
Eigen::Matrix2cd sigma_minus() {
  return (Eigen::Matrix2cd() << 0, 0, 1, 0).finished();
}
Eigen::Matrix2cd sigma_plus() {
  return (Eigen::Matrix2cd() << 0, 1, 0, 0).finished();
}
Eigen::Matrix2cd number_op() {
  return (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
}

Eigen::MatrixXcd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::MatrixXcd out(4, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

}  // namespace

TEST_CASE("single-letter matrices") {
  Eigen::MatrixXcd z = to_matrix(PauliString::parse("Z"));
  CHECK(z(0, 0) == Complex{1.0});
  CHECK(z(1, 1) == Complex{-1.0});
  CHECK(z(0, 1) == Complex{0.0});

  // coefficient -i on X
  Eigen::MatrixXcd m =
      to_matrix(PauliTerm{{0.0, -1.0}, PauliString::parse("X")});
  CHECK(m(0, 1) == Complex{0.0, -1.0});
  CHECK(m(1, 0) == Complex{0.0, -1.0});
  CHECK(m(0, 0) == Complex{0.0});
}

TEST_CASE("qubit 0 is the most significant index position") {
  // Z on qubit 0 of 2: diag(+1,+1,-1,-1)
  Eigen::MatrixXcd m = to_matrix(PauliString::parse("ZI"));
  CHECK(m(0, 0).real() == doctest::Approx(1.0));
  CHECK(m(1, 1).real() == doctest::Approx(1.0));
  CHECK(m(2, 2).real() == doctest::Approx(-1.0));
  CHECK(m(3, 3).real() == doctest::Approx(-1.0));
}

TEST_CASE("two-site hopping term sum equals the sigma+- construction") {
  // D [ (s+_0 - s+_1)(s-_0 - s-_1) - 2 n_0 n_1 ] built from raw 2x2 blocks.
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::MatrixXcd raise_diff =
      kron2(sigma_plus(), id) - kron2(id, sigma_plus());
  const Eigen::MatrixXcd lower_diff =
      kron2(sigma_minus(), id) - kron2(id, sigma_minus());
  const Eigen::MatrixXcd ga =
      raise_diff * lower_diff - 2.0 * kron2(number_op(), number_op());

  // Pauli form: -1/2 (XX + YY + ZZ) with constant 1/2.
  PseudoHamiltonian h(2,
                      {{-0.5, PauliString::parse("XX")},
                       {-0.5, PauliString::parse("YY")},
                       {-0.5, PauliString::parse("ZZ")}},
                      0.5);
  const Eigen::MatrixXcd expanded = to_matrix(h, true);
  CHECK((expanded - ga).cwiseAbs().maxCoeff() < 1e-12);

  // and the expected single-particle block
  CHECK(ga(1, 1).real() == doctest::Approx(1.0));
  CHECK(ga(1, 2).real() == doctest::Approx(-1.0));
  CHECK(ga(2, 1).real() == doctest::Approx(-1.0));
  CHECK(ga(2, 2).real() == doctest::Approx(1.0));
  CHECK(ga(0, 0) == Complex{0.0});
  CHECK(ga(3, 3) == Complex{0.0});
}

TEST_CASE("simplify merges, cancels and orders") {
  const PauliString xx = PauliString::parse("XX");
  const PauliString xy = PauliString::parse("XY");

  auto merged = simplify({{1.0, xx}, {0.5, xx}});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].coefficient == Complex{1.5});

  CHECK(simplify({{1.0, xy}, {-1.0, xy}}).empty());

  // output is ordered lexicographically in the letters
  auto ordered = simplify({{1.0, PauliString::parse("ZI")},
                           {1.0, PauliString::parse("IX")},
                           {1.0, PauliString::parse("YY")}});
  REQUIRE(ordered.size() == 3);
  CHECK(ordered[0].string.str() == "IX");
  CHECK(ordered[1].string.str() == "YY");
  CHECK(ordered[2].string.str() == "ZI");

  CHECK_THROWS_AS(simplify({{1.0, xx}, {1.0, PauliString::parse("X")}}),
                  ShapeError);
}

TEST_CASE("duplicated term lists double their coefficients") {
  // pair-annihilation Pauli terms for one pair, twice
  std::vector<PauliTerm> once = {{0.25, PauliString::parse("ZZ")},
                                 {-0.25, PauliString::parse("XX")},
                                 {0.25, PauliString::parse("YY")},
                                 {{0, 0.25}, PauliString::parse("XY")},
                                 {{0, 0.25}, PauliString::parse("YX")}};
  std::vector<PauliTerm> twice = once;
  twice.insert(twice.end(), once.begin(), once.end());
  const auto merged = simplify(twice);
  REQUIRE(merged.size() == once.size());
  for (const auto& t : merged) {
    bool found = false;
    for (const auto& o : once)
      if (o.string == t.string) {
        CHECK(t.coefficient == 2.0 * o.coefficient);
        found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("to_matrix is linear over simplify") {
  std::mt19937 rng(117);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PauliTerm> a, b;
    for (int i = 0; i < 4; ++i) {
      a.push_back({{coeff(rng), coeff(rng)}, test::random_string(rng, 3)});
      b.push_back({{coeff(rng), coeff(rng)}, test::random_string(rng, 3)});
    }
    Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(8, 8);
    for (const auto& t : a) lhs += to_matrix(t);
    for (const auto& t : b) lhs += to_matrix(t);
    std::vector<PauliTerm> joined = a;
    joined.insert(joined.end(), b.begin(), b.end());
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(8, 8);
    for (const auto& t : simplify(joined)) rhs += to_matrix(t);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Pauli strings square to the identity") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const PauliString s = test::random_string(rng, 3);
    const Eigen::MatrixXcd m = to_matrix(s);
    CHECK((m * m - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("simplify is idempotent") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<PauliTerm> terms;
  for (int i = 0; i < 12; ++i)
    terms.push_back({{coeff(rng), 0.0}, test::random_string(rng, 2)});
  const auto once = simplify(terms);
  const auto again = simplify(once);
  REQUIRE(once.size() == again.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].string == again[i].string);
    CHECK(once[i].coefficient == again[i].coefficient);
  }
}

TEST_CASE("PseudoHamiltonian construction normalizes") {
  // identity terms are absorbed into the constant
  PseudoHamiltonian h(2,
                      {{0.75, PauliString::parse("II")},
                       {1.0, PauliString::parse("XX")},
                       {1e-15, PauliString::parse("YY")}},
                      0.25);
  CHECK(h.constant() == doctest::Approx(1.0));
  REQUIRE(h.terms().size() == 1);
  CHECK(h.terms()[0].string.str() == "XX");

  // mixed coefficients are rejected, not split
  CHECK_THROWS_AS(PseudoHamiltonian(1, {{{0.5, 0.5}, PauliString::parse("X")}}),
                  std::logic_error);

  // a sub-tolerance imaginary part is snapped to zero
  PseudoHamiltonian snapped(1, {{{1.0, 1e-13}, PauliString::parse("Z")}});
  CHECK(snapped.terms()[0].coefficient.imag() == 0.0);
}

TEST_CASE("capacity guard") {
  CHECK_THROWS_AS(to_matrix(PauliString(std::vector<Pauli>(13, Pauli::Z))),
                  CapacityError);
}

TEST_CASE("text dump format") {
  PseudoHamiltonian h(2,
                      {{-0.5, PauliString::parse("XX")},
                       {{0.0, 0.25}, PauliString::parse("XY")}},
                      0.5);
  CHECK(h.dump() ==
        "-0.5,0.0 XX\n"
        "0.0,0.25 XY\n"
        "CONST 0.5\n");
}
