// Copyright 2026 The stabmat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random instance generation for tests and benchmarks. Not part of the
// conversion API proper.

#ifndef STABMAT_TESTING_HPP
#define STABMAT_TESTING_HPP

#include <random>

#include "stabmat/model.hpp"

namespace stabmat::testing {

using Rng = std::mt19937_64;

CliffordTableau identity_tableau(int n);

// Conjugate every row of the tableau by one generator gate (1-based qubits).
void apply_h(CliffordTableau& tab, int t);
void apply_s(CliffordTableau& tab, int t);
void apply_cnot(CliffordTableau& tab, int control, int target);

/// Tableau of a random word of length 10*n over {H, S, CNOT}.
CliffordTableau random_tableau(int n, Rng& rng);

/// Check matrix obtained by conjugating {Z_t} with a random gate word.
CheckMatrix random_check(int n, Rng& rng);

/// Uniform description: random shift and phase data, basis completed to
/// independence by rejection.
QuadraticFormDesc random_qf(int n, int k, Rng& rng);

DenseState random_state(int n, Rng& rng);

PauliOp random_pauli(int n, Rng& rng);

}  // namespace stabmat::testing

#endif
