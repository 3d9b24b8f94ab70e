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

#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "rdq/errors.hpp"
#include "rdq/hamiltonian.hpp"
#include "rdq/oracle.hpp"
#include "test_helpers.hpp"

using namespace rdq;

namespace {

const ModelSpec kSingleSite{{1, Boundary::Open},
                            {{ReactionKind::Decay, 1.0},
                             {ReactionKind::Generation, 0.5}}};

ProbabilityState occupied(int n) { return ProbabilityState::point_mass(n, 0); }

}  // namespace

TEST_CASE("zero time is the identity") {
  const ProbabilityState p0(2, (Eigen::VectorXd(4) << 0.3, 0.2, 0.4, 0.1).finished());
  const ModelSpec m{{2, Boundary::Open}, {{ReactionKind::Hopping, 1.0}}};
  const ProbabilityState p = evolve_exact(p0, m, 0.0);
  CHECK((p.probs() - p0.probs()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("single-site decay/generation matches the analytic solution") {
  const ProbabilityState p = evolve_exact(occupied(1), kSingleSite, 2.0);
  const DiagonalObservable n = DiagonalObservable::total_particles(1);
  CHECK(expectation(p, n) ==
        doctest::Approx(test::single_site_density(1.0, 0.5, 2.0))
            .epsilon(1e-10));
  // 1/3 + (2/3) e^{-3}
  CHECK(expectation(p, n) ==
        doctest::Approx(1.0 / 3.0 + (2.0 / 3.0) * std::exp(-3.0))
            .epsilon(1e-10));
}

TEST_CASE("hopping on the 4-site ring equilibrates to 1/4") {
  const ModelSpec m{{4, Boundary::Periodic}, {{ReactionKind::Hopping, 1.0}}};
  // single particle at site 0 = pattern *ooo = index 0111
  const ProbabilityState p0 = ProbabilityState::point_mass(4, 0b0111);
  const ProbabilityState p = evolve_exact(p0, m, 40.0);
  const std::uint64_t single[4] = {0b0111, 0b1011, 0b1101, 0b1110};
  for (std::uint64_t config : single)
    CHECK(p.prob(config) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("expectation basics") {
  const ProbabilityState uniform(1, (Eigen::VectorXd(2) << 0.5, 0.5).finished());
  CHECK(expectation(uniform, DiagonalObservable::total_particles(1)) ==
        doctest::Approx(0.5));
  CHECK(expectation(occupied(6), DiagonalObservable::total_particles(6)) ==
        doctest::Approx(6.0));
  CHECK_THROWS_AS(
      expectation(uniform, DiagonalObservable::total_particles(2)),
      ShapeError);
}

TEST_CASE("pair annihilation on 7 sites leaves one particle") {
  const ModelSpec m{{7, Boundary::Periodic},
                    {{ReactionKind::Hopping, 1.0},
                     {ReactionKind::PairAnnihilation, 1.0}}};
  const ProbabilityState p = evolve_exact(occupied(7), m, 20.0);
  CHECK(expectation(p, DiagonalObservable::total_particles(7)) ==
        doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("two-point correlator") {
  const DiagonalObservable n = DiagonalObservable::total_particles(1);

  SUBCASE("equal times give the second moment") {
    const double t = 0.8;
    const double got = two_point(occupied(1), kSingleSite, n, t, t);
    // n^2 = n for a single site, so this is just <n(t)>
    CHECK(got == doctest::Approx(test::single_site_density(1.0, 0.5, t))
                     .epsilon(1e-10));
  }

  SUBCASE("decay-only survival") {
    const ModelSpec decay{{1, Boundary::Open}, {{ReactionKind::Decay, 1.0}}};
    CHECK(two_point(occupied(1), decay, n, 1.0, 2.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
  }

  SUBCASE("stationary initial state factorizes at large separation") {
    const double lambda = 0.7, nu = 0.3;
    const ModelSpec m{{1, Boundary::Open},
                      {{ReactionKind::Decay, lambda},
                       {ReactionKind::Generation, nu}}};
    const double n_inf = nu / (lambda + nu);
    const ProbabilityState stationary(
        1, (Eigen::VectorXd(2) << n_inf, 1.0 - n_inf).finished());
    CHECK(two_point(stationary, m, n, 0.5, 60.0) ==
          doctest::Approx(n_inf * n_inf).epsilon(1e-8));
  }

  SUBCASE("ordering error") {
    CHECK_THROWS_AS(two_point(occupied(1), kSingleSite, n, 2.0, 1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("conservation and positivity over random models") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> rate(0.1, 2.0);
  const ReactionKind kinds[] = {ReactionKind::Hopping, ReactionKind::Decay,
                                ReactionKind::Generation,
                                ReactionKind::PairAnnihilation,
                                ReactionKind::Branching,
                                ReactionKind::PairCoagulation};
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<ReactionSpec> reactions;
    for (ReactionKind k : kinds)
      if (rng() % 2) reactions.push_back({k, rate(rng)});
    if (reactions.empty()) reactions.push_back({ReactionKind::Hopping, 1.0});
    const ModelSpec m{{4, Boundary::Periodic}, reactions};
    const ProbabilityState p0 = ProbabilityState::point_mass(4, 0b0101);
    for (double t : {0.5, 5.0, 50.0}) {
      const ProbabilityState p = evolve_exact(p0, m, t);
      CHECK(std::abs(p.probs().sum() - 1.0) <= 1e-9);
      CHECK(p.probs().minCoeff() >= -1e-10);
    }
  }
}

TEST_CASE("semigroup property") {
  const ModelSpec m{{3, Boundary::Periodic},
                    {{ReactionKind::Hopping, 0.8},
                     {ReactionKind::Decay, 0.3},
                     {ReactionKind::Branching, 0.5}}};
  const ProbabilityState p0 = ProbabilityState::point_mass(3, 0b010);
  const ProbabilityState two_hops =
      evolve_exact(evolve_exact(p0, m, 0.7), m, 1.9);
  const ProbabilityState direct = evolve_exact(p0, m, 2.6);
  CHECK((two_hops.probs() - direct.probs()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("dropping the constant and renormalizing changes nothing") {
  const ModelSpec m{{3, Boundary::Periodic},
                    {{ReactionKind::Hopping, 1.0},
                     {ReactionKind::PairAnnihilation, 0.6}}};
  const double t = 3.0;
  const ProbabilityState p0 = ProbabilityState::point_mass(3, 0);
  const ProbabilityState full = evolve_exact(p0, m, t);

  const Eigen::MatrixXcd h_nc = to_matrix(build_pauli(m), false);
  Eigen::VectorXcd v = (-t * h_nc).exp() * p0.probs().cast<std::complex<double>>();
  const Eigen::VectorXd renorm = v.real() / v.real().sum();
  CHECK((renorm - full.probs()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("propagator stepping agrees with direct evolution") {
  const ModelSpec m{{3, Boundary::Periodic},
                    {{ReactionKind::Hopping, 1.0},
                     {ReactionKind::Decay, 0.5}}};
  const ExactPropagator prop(m, 0.25);
  ProbabilityState p = ProbabilityState::point_mass(3, 0);
  for (int k = 0; k < 8; ++k) p = prop.step(p);
  const ProbabilityState direct =
      evolve_exact(ProbabilityState::point_mass(3, 0), m, 2.0);
  CHECK((p.probs() - direct.probs()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(evolve_exact(occupied(1), kSingleSite, -1.0),
                  std::invalid_argument);
  const ModelSpec wrong{{2, Boundary::Open}, {{ReactionKind::Decay, 1.0}}};
  CHECK_THROWS_AS(evolve_exact(occupied(1), wrong, 1.0), ShapeError);
}
