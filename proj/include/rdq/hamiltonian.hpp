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

#include <Eigen/Dense>

#include "rdq/model.hpp"
#include "rdq/pauli.hpp"

namespace rdq {

/// Full master-equation generator of the model as a dense real matrix,
/// built from generation/annihilation operator products. Every column sums
/// to zero and off-diagonal entries are nonpositive. Basis convention: site
/// k is bit k of the index with site 0 most significant; an occupied site
/// is bit 0.
Eigen::MatrixXd build_generator(const ModelSpec& model);

/// The same generator as a Pauli-term sum with the identity coefficient
/// tracked separately. Produced by substituting sigma+- = (X +- iY)/2 and
/// n = (Z+1)/2 into the generation/annihilation forms and simplifying.
/// With `validate` set (and <= 6 sites) the expansion is checked entrywise
/// against build_generator.
PseudoHamiltonian build_pauli(const ModelSpec& model, bool validate = false);

}  // namespace rdq
