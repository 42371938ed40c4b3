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

#ifndef STABMAT_PAULI_HPP
#define STABMAT_PAULI_HPP

#include <span>
#include <vector>

#include "stabmat/model.hpp"

namespace stabmat {

enum class ApplyMode {
    direct,   // test (u & f) != 0 against the Z-pattern word
    one_hot,  // one-hot lookup table of length 2^n, as a fidelity reference
};

/// phi[x ^ w] = omega * (-1)^(u.x) * psi[x] via a Gray walk with one cached
/// parity bit.
DenseState apply_pauli(const DenseState& psi, const PauliOp& p, ApplyMode mode = ApplyMode::direct);

/// Same, reading `in` and writing `out` (both length 2^n, distinct).
void apply_pauli_into(std::span<const Amplitude> in, std::span<Amplitude> out, const PauliOp& p,
                      ApplyMode mode = ApplyMode::direct);

/// Per-entry reference with an independent popcount per basis label.
DenseState apply_pauli_naive(const DenseState& psi, const PauliOp& p);

/// Dense 2^n x 2^n matrix of the operator; small n only.
DenseMatrix pauli_dense(const PauliOp& p, int max_n = 8);

/// Internal state of the Pauli Gray walk after each write, for debug checks.
struct PauliWalkState {
    BitWord x = 0;       // current Gray word
    BitWord z = 0;       // current output index x ^ w
    std::uint8_t s = 0;  // cached parity u.x
};

std::vector<PauliWalkState> apply_pauli_trace(const PauliOp& p);

}  // namespace stabmat

#endif
