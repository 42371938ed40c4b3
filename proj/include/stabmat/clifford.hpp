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

#ifndef STABMAT_CLIFFORD_HPP
#define STABMAT_CLIFFORD_HPP

#include <span>

#include "stabmat/model.hpp"

namespace stabmat {

/// Default guardrail for dense matrix outputs (4^13 complex doubles = 1 GB).
inline constexpr int kDefaultMaxMatrixQubits = 13;

/// c_0 = C|0...0>: the U rows form a check matrix stabilizing c_0, which is
/// then expanded; the phase convention makes the amplitude at the support
/// shift positive real.
DenseState first_column(const CliffordTableau& tab);

/// Column Gray walk: each step applies the V of the flipped coordinate to
/// the previous column. Requires c0 = C|0...0>.
DenseMatrix tableau_to_matrix(const CliffordTableau& tab, const DenseState& c0,
                              int max_n = kDefaultMaxMatrixQubits);

/// Same, writing the column-major 4^n entries into a caller-provided buffer
/// (no allocation).
void tableau_to_matrix_into(const CliffordTableau& tab, const DenseState& c0,
                            std::span<Amplitude> out);

/// tableau_to_matrix(tab, first_column(tab)).
DenseMatrix expand_tableau(const CliffordTableau& tab, int max_n = kDefaultMaxMatrixQubits);

/// max over t of |M Z_t M^dag - U_t|_inf and |M X_t M^dag - V_t|_inf, plus
/// |M^dag M - I|_inf. Brute-force dense arithmetic; small n only.
double conjugation_oracle(const DenseMatrix& M, const CliffordTableau& tab, int max_n = 8);

}  // namespace stabmat

#endif
