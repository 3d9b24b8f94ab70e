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

#include "rdq/hamiltonian.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "rdq/errors.hpp"

namespace rdq {

std::vector<std::pair<int, int>> Lattice1D::neighbor_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  if (n_sites < 2) return pairs;
  for (int i = 0; i + 1 < n_sites; ++i) pairs.emplace_back(i, i + 1);
  // The wrap-around pair exists only when it is distinct from the open-chain
  // ones, i.e. from 3 sites up.
  if (boundary == Boundary::Periodic && n_sites >= 3)
    pairs.emplace_back(0, n_sites - 1);
  return pairs;
}

const char* reaction_name(ReactionKind kind) {
  switch (kind) {
    case ReactionKind::Hopping: return "hopping";
    case ReactionKind::PairAnnihilation: return "pair_annihilation";
    case ReactionKind::PairCoagulation: return "coagulation";
    case ReactionKind::Decay: return "decay";
    case ReactionKind::Generation: return "generation";
    case ReactionKind::Branching: return "branching";
  }
  throw std::logic_error("invalid reaction kind");
}

void ModelSpec::validate() const {
  if (lattice.n_sites < 1)
    throw std::invalid_argument("lattice needs at least one site");
  bool seen[6] = {};
  for (const ReactionSpec& r : reactions) {
    if (r.rate < 0.0)
      throw std::invalid_argument(std::string("negative rate for ") +
                                  reaction_name(r.kind));
    auto idx = static_cast<std::size_t>(r.kind);
    if (seen[idx])
      throw std::invalid_argument(std::string("duplicate reaction ") +
                                  reaction_name(r.kind) +
                                  " (pre-sum the rates)");
    seen[idx] = true;
  }
}

namespace {

// Single-site operators in the generation/annihilation basis. Occupied is
// bit 0, so Lower (annihilation) flips 0 -> 1 and Raise flips 1 -> 0.
enum class LocalOp : std::uint8_t { Number, Hole, Raise, Lower };

struct GaTerm {
  double coeff;
  // (site, op) factors on distinct sites; at most two entries.
  std::array<std::pair<int, LocalOp>, 2> factors;
  int n_factors;
};

GaTerm site_term(double c, int i, LocalOp a) {
  return {c, {{{i, a}, {0, LocalOp::Number}}}, 1};
}

GaTerm pair_term(double c, int i, LocalOp a, int j, LocalOp b) {
  return {c, {{{i, a}, {j, b}}}, 2};
}

// The reaction written as a sum of local-operator products, one list entry
// per product, already expanded over a single site or pair.
void append_reaction_terms(const ReactionSpec& r, const Lattice1D& lattice,
                           std::vector<GaTerm>& out) {
  const double rate = r.rate;
  if (rate == 0.0) return;
  const auto pairs = lattice.neighbor_pairs();
  using Op = LocalOp;
  switch (r.kind) {
    case ReactionKind::Hopping:
      // (s+_i - s+_j)(s-_i - s-_j) - 2 n_i n_j
      for (auto [i, j] : pairs) {
        out.push_back(site_term(rate, i, Op::Number));
        out.push_back(site_term(rate, j, Op::Number));
        out.push_back(pair_term(-2 * rate, i, Op::Number, j, Op::Number));
        out.push_back(pair_term(-rate, i, Op::Raise, j, Op::Lower));
        out.push_back(pair_term(-rate, i, Op::Lower, j, Op::Raise));
      }
      break;
    case ReactionKind::PairAnnihilation:
      // n_i n_j - s-_i s-_j
      for (auto [i, j] : pairs) {
        out.push_back(pair_term(rate, i, Op::Number, j, Op::Number));
        out.push_back(pair_term(-rate, i, Op::Lower, j, Op::Lower));
      }
      break;
    case ReactionKind::PairCoagulation:
      // n_i n_j - (1/2) n_i s-_j - (1/2) n_j s-_i
      for (auto [i, j] : pairs) {
        out.push_back(pair_term(rate, i, Op::Number, j, Op::Number));
        out.push_back(pair_term(-rate / 2, i, Op::Number, j, Op::Lower));
        out.push_back(pair_term(-rate / 2, i, Op::Lower, j, Op::Number));
      }
      break;
    case ReactionKind::Decay:
      // n_i - s-_i
      for (int i = 0; i < lattice.n_sites; ++i) {
        out.push_back(site_term(rate, i, Op::Number));
        out.push_back(site_term(-rate, i, Op::Lower));
      }
      break;
    case ReactionKind::Generation:
      // (1 - n_i) - s+_i
      for (int i = 0; i < lattice.n_sites; ++i) {
        out.push_back(site_term(rate, i, Op::Hole));
        out.push_back(site_term(-rate, i, Op::Raise));
      }
      break;
    case ReactionKind::Branching:
      // n_i + n_j - 2 n_i n_j - n_i s+_j - n_j s+_i
      for (auto [i, j] : pairs) {
        out.push_back(site_term(rate, i, Op::Number));
        out.push_back(site_term(rate, j, Op::Number));
        out.push_back(pair_term(-2 * rate, i, Op::Number, j, Op::Number));
        out.push_back(pair_term(-rate, i, Op::Number, j, Op::Raise));
        out.push_back(pair_term(-rate, i, Op::Raise, j, Op::Number));
      }
      break;
  }
}

std::vector<GaTerm> model_ga_terms(const ModelSpec& model) {
  model.validate();
  std::vector<GaTerm> terms;
  for (const ReactionSpec& r : model.reactions)
    append_reaction_terms(r, model.lattice, terms);
  return terms;
}

}  // namespace

Eigen::MatrixXd build_generator(const ModelSpec& model) {
  const int n = model.lattice.n_sites;
  if (n > kMaxDenseQubits)
    throw CapacityError("generator limited to " +
                        std::to_string(kMaxDenseQubits) + " sites, got " +
                        std::to_string(n));
  const auto terms = model_ga_terms(model);
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (const GaTerm& term : terms) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t row = col;
      bool vanishes = false;
      for (int f = 0; f < term.n_factors; ++f) {
        auto [site, op] = term.factors[f];
        const std::uint64_t mask = std::uint64_t{1} << (n - 1 - site);
        const bool occupied = (col & mask) == 0;
        switch (op) {
          case LocalOp::Number:
            if (!occupied) vanishes = true;
            break;
          case LocalOp::Hole:
            if (occupied) vanishes = true;
            break;
          case LocalOp::Lower:  // occupied -> empty
            if (!occupied) vanishes = true;
            row |= mask;
            break;
          case LocalOp::Raise:  // empty -> occupied
            if (occupied) vanishes = true;
            row &= ~mask;
            break;
        }
        if (vanishes) break;
      }
      if (!vanishes) h(row, col) += term.coeff;
    }
  }
  return h;
}

namespace {

// Pauli-basis decomposition of each single-site operator.
struct LetterWeight {
  std::complex<double> coeff;
  Pauli letter;
};

const std::array<LetterWeight, 2>& pauli_parts(LocalOp op) {
  using namespace std::complex_literals;
  static const std::array<LetterWeight, 2> number = {
      {{0.5, Pauli::I}, {0.5, Pauli::Z}}};
  static const std::array<LetterWeight, 2> hole = {
      {{0.5, Pauli::I}, {-0.5, Pauli::Z}}};
  static const std::array<LetterWeight, 2> raise_op = {
      {{0.5, Pauli::X}, {0.5i, Pauli::Y}}};
  static const std::array<LetterWeight, 2> lower_op = {
      {{0.5, Pauli::X}, {-0.5i, Pauli::Y}}};
  switch (op) {
    case LocalOp::Number: return number;
    case LocalOp::Hole: return hole;
    case LocalOp::Raise: return raise_op;
    case LocalOp::Lower: return lower_op;
  }
  throw std::logic_error("invalid local operator");
}

}  // namespace

PseudoHamiltonian build_pauli(const ModelSpec& model, bool validate) {
  const int n = model.lattice.n_sites;
  const auto ga = model_ga_terms(model);
  std::vector<PauliTerm> terms;
  for (const GaTerm& term : ga) {
    // Distribute the product of per-site (I,X,Y,Z) decompositions.
    std::vector<std::pair<std::complex<double>, std::vector<Pauli>>> partial;
    partial.push_back({term.coeff, std::vector<Pauli>(n, Pauli::I)});
    for (int f = 0; f < term.n_factors; ++f) {
      auto [site, op] = term.factors[f];
      std::vector<std::pair<std::complex<double>, std::vector<Pauli>>> next;
      next.reserve(partial.size() * 2);
      for (const auto& [c, letters] : partial) {
        for (const LetterWeight& part : pauli_parts(op)) {
          auto combined = letters;
          combined[site] = part.letter;
          next.push_back({c * part.coeff, std::move(combined)});
        }
      }
      partial = std::move(next);
    }
    for (auto& [c, letters] : partial)
      terms.push_back({c, PauliString(std::move(letters))});
  }
  PseudoHamiltonian h(n, std::move(terms));

  if (validate && n <= 6) {
    const Eigen::MatrixXd gen = build_generator(model);
    const Eigen::MatrixXcd expanded = to_matrix(h, /*include_constant=*/true);
    const double err = (expanded - gen.cast<std::complex<double>>())
                           .cwiseAbs()
                           .maxCoeff();
    if (err > 1e-10)
      throw std::logic_error(
          "Pauli expansion disagrees with the generation/annihilation "
          "generator, max deviation " +
          std::to_string(err));
  }
  return h;
}

}  // namespace rdq
