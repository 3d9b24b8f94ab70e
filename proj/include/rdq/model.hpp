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
#include <utility>
#include <vector>

namespace rdq {

enum class Boundary { Periodic, Open };

/// One-dimensional chain of two-state sites.
struct Lattice1D {
  int n_sites = 1;
  Boundary boundary = Boundary::Open;

  /// Distinct unordered nearest-neighbor pairs (i < j). A periodic 2-site
  /// chain has the single pair {0,1}; a single site has none.
  std::vector<std::pair<int, int>> neighbor_pairs() const;
};

enum class ReactionKind {
  Hopping,
  PairAnnihilation,
  PairCoagulation,
  Decay,
  Generation,
  Branching,
};

const char* reaction_name(ReactionKind kind);

struct ReactionSpec {
  ReactionKind kind;
  double rate = 0.0;  // 1/time, nonnegative
};

/// A lattice plus the set of reactions acting on it, at most one spec per
/// reaction kind (duplicate rates must be pre-summed).
struct ModelSpec {
  Lattice1D lattice;
  std::vector<ReactionSpec> reactions;

  void validate() const;
};

}  // namespace rdq
