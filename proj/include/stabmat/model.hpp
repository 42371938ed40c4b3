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

#ifndef STABMAT_MODEL_HPP
#define STABMAT_MODEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "stabmat/errors.hpp"
#include "stabmat/words.hpp"

namespace stabmat {

using Amplitude = std::complex<double>;

/// Multiply by i^q without touching floating point rounding: component
/// swap / negate only, so the result is exact.
inline Amplitude mul_i_pow(Amplitude v, unsigned q) noexcept {
    switch (q & 3u) {
        case 0:
            return v;
        case 1:
            return {-v.imag(), v.real()};
        case 2:
            return {-v.real(), -v.imag()};
        default:
            return {v.imag(), -v.real()};
    }
}

/// Compact description of an n-qubit stabilizer state: nonzero amplitudes
/// gamma * i^(d.y) * (-1)^(y^T J y) on the affine support h + span{v_t}.
struct QuadraticFormDesc {
    int n = 0;                  // qubit count
    int k = 0;                  // support dimension, 0 <= k <= n
    BitWord h = 0;              // shift vector, n bits
    std::vector<BitWord> v;     // k basis vectors, n bits each, independent
    BitWord d = 0;              // linear phase bits, k bits
    std::vector<BitWord> J;     // k rows of k bits; row t only has bits >= t
    Amplitude gamma{1.0, 0.0};  // nonzero scalar

    bool operator==(const QuadraticFormDesc&) const = default;
};

/// One signed symplectic generator row: (-1)^sigma * tensor of P(w_j, u_j)
/// with P(0,0)=I, P(1,0)=X, P(0,1)=Z, P(1,1)=Y.
struct CheckRow {
    BitWord w = 0;
    BitWord u = 0;
    bool sigma = false;

    bool operator==(const CheckRow&) const = default;
};

struct CheckMatrix {
    int n = 0;
    std::vector<CheckRow> rows;  // exactly n rows

    bool operator==(const CheckMatrix&) const = default;
};

/// Pauli operator omega * X(w) * Z(u) with omega = i^phase.
struct PauliOp {
    int n = 0;
    std::uint8_t phase = 0;  // exponent in Z_4
    BitWord w = 0;           // X-pattern
    BitWord u = 0;           // Z-pattern

    bool operator==(const PauliOp&) const = default;
};

/// Product of two Pauli operators on the same qubit count.
inline PauliOp pauli_mul(const PauliOp& a, const PauliOp& b) noexcept {
    // Z(u_a) X(w_b) = (-1)^(u_a . w_b) X(w_b) Z(u_a)
    return PauliOp{
        a.n,
        static_cast<std::uint8_t>((a.phase + b.phase + 2 * dot(a.u, b.w)) & 3),
        a.w ^ b.w,
        a.u ^ b.u,
    };
}

/// omega X(w)Z(u) is Hermitian iff omega^2 (-1)^(w.u) = 1.
inline bool pauli_hermitian(const PauliOp& p) noexcept {
    return (p.phase & 1) == dot(p.w, p.u);
}

/// Symplectic inner product: 0 iff the two operators commute.
inline int symplectic_dot(const PauliOp& a, const PauliOp& b) noexcept {
    return dot(a.w, b.u) ^ dot(a.u, b.w);
}

/// Images of the single-qubit generators under conjugation by a Clifford C:
/// U[t] = C Z_{t+1} C^dag, V[t] = C X_{t+1} C^dag.
struct CliffordTableau {
    int n = 0;
    std::vector<PauliOp> U;
    std::vector<PauliOp> V;

    bool operator==(const CliffordTableau&) const = default;
};

/// Dense amplitude vector, basis label x with coordinate 1 at the LSB.
struct DenseState {
    int n = 0;
    std::vector<Amplitude> amps;  // length 2^n

    bool operator==(const DenseState&) const = default;
};

/// Dense 2^n x 2^n matrix, column-major (column x is C|x>).
struct DenseMatrix {
    int n = 0;
    std::vector<Amplitude> entries;  // length 4^n

    std::size_t dim() const noexcept { return std::size_t{1} << n; }
    Amplitude& at(std::size_t row, std::size_t col) { return entries[col * dim() + row]; }
    const Amplitude& at(std::size_t row, std::size_t col) const { return entries[col * dim() + row]; }

    bool operator==(const DenseMatrix&) const = default;
};

// Validation. Each throws Error with the matching code on failure.
void validate_qf(const QuadraticFormDesc& desc);
void validate_check(const CheckMatrix& cm);
void validate_tableau(const CliffordTableau& tab);

}  // namespace stabmat

#endif
