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

#ifndef STABMAT_REDUCTION_HPP
#define STABMAT_REDUCTION_HPP

#include "stabmat/model.hpp"

namespace stabmat {

/// Check row -> Pauli operator. The letter Y carries an i relative to the
/// X(w)Z(u) ordering, so omega = (-1)^sigma * i^popcount(w & u).
PauliOp check_row_to_pauli(const CheckRow& row, int n);

/// Inverse of check_row_to_pauli; requires a Hermitian operator.
CheckRow pauli_to_check_row(const PauliOp& p);

/// Symplectic Gaussian elimination from a check matrix to quadratic-form
/// data in O(n^3). Canonical output: basis vectors in reduced row echelon
/// form with pivot columns ascending, h zero on the pivot columns, and
/// gamma = 2^(-k/2) so the amplitude at h is positive real.
QuadraticFormDesc check_to_qf(const CheckMatrix& cm);

/// max over rows r of the infinity norm of G_r psi - psi. Zero (up to float
/// noise) iff psi is the stabilizer state of cm.
double stabilizer_eigencheck(const CheckMatrix& cm, const DenseState& psi);

}  // namespace stabmat

#endif
