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

#include "stabmat/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>
#include <vector>

#include "stabmat/pauli.hpp"

namespace stabmat {

PauliOp check_row_to_pauli(const CheckRow& row, int n) {
    const int y_count = std::popcount(row.w & row.u);
    const unsigned phase = (2u * row.sigma + static_cast<unsigned>(y_count)) & 3u;
    return PauliOp{n, static_cast<std::uint8_t>(phase), row.w, row.u};
}

CheckRow pauli_to_check_row(const PauliOp& p) {
    if (!pauli_hermitian(p)) {
        throw Error(Errc::not_hermitian, "only Hermitian operators have a check-row form");
    }
    const unsigned diff = (p.phase - std::popcount(p.w & p.u)) & 3u;
    // Hermiticity makes the difference even.
    return CheckRow{p.w, p.u, diff == 2};
}

QuadraticFormDesc check_to_qf(const CheckMatrix& cm) {
    validate_check(cm);
    const int n = cm.n;
    std::vector<PauliOp> gens;
    gens.reserve(n);
    for (const CheckRow& row : cm.rows) {
        gens.push_back(check_row_to_pauli(row, n));
    }

    // Bring the X-block to reduced row echelon form by generator
    // multiplication; k pivot rows come first, pure-Z rows follow.
    int k = 0;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if ((gens[r].w >> c) & 1) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(gens[k], gens[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r != k && ((gens[r].w >> c) & 1)) {
                gens[r] = pauli_mul(gens[r], gens[k]);
            }
        }
        ++k;
    }

    // Pure-Z rows constrain the support: (-1)^(u.x) must equal the row's
    // sign on every support point. Echelonize them and read a particular
    // solution h off the pivots (free coordinates zero).
    for (int r = k, c = 0; r < n && c < n; ++c) {
        int pivot = -1;
        for (int s = r; s < n; ++s) {
            if ((gens[s].u >> c) & 1) {
                pivot = s;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(gens[r], gens[pivot]);
        for (int s = k; s < n; ++s) {
            if (s != r && ((gens[s].u >> c) & 1)) {
                gens[s] = pauli_mul(gens[s], gens[r]);
            }
        }
        ++r;
    }
    BitWord h = 0;
    for (int r = k; r < n; ++r) {
        if (gens[r].w != 0 || gens[r].u == 0 || (gens[r].phase & 1) != 0) {
            throw Error(Errc::contradictory_signs, "sign system is inconsistent");
        }
        const int c = std::countr_zero(gens[r].u);
        if ((gens[r].phase & 3) == 2) {
            h |= BitWord{1} << c;
        }
    }

    // Canonical shift: clear the basis pivot coordinates of h. The basis
    // vectors lie in the null space of every pure-Z row, so the constraints
    // stay satisfied.
    for (int t = 0; t < k; ++t) {
        const int c = std::countr_zero(gens[t].w);
        if ((h >> c) & 1) {
            h ^= gens[t].w;
        }
    }

    // a_t is pinned by the generator action at y = 0, the off-diagonal
    // couplings by the action one flip away.
    QuadraticFormDesc desc;
    desc.n = n;
    desc.k = k;
    desc.h = h;
    desc.v.resize(k);
    desc.J.assign(k, 0);
    for (int t = 0; t < k; ++t) {
        desc.v[t] = gens[t].w;
        const unsigned a_t = (gens[t].phase + 2u * dot(gens[t].u, h)) & 3u;
        desc.d |= BitWord{a_t & 1} << t;
        desc.J[t] |= BitWord{(a_t >> 1) & 1} << t;
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (dot(gens[j].u, desc.v[i])) {
                desc.J[i] |= BitWord{1} << j;
            }
        }
    }
    desc.gamma = Amplitude{std::ldexp(k % 2 ? 1.0 / std::sqrt(2.0) : 1.0, -(k / 2)), 0.0};
    return desc;
}

double stabilizer_eigencheck(const CheckMatrix& cm, const DenseState& psi) {
    if (psi.n != cm.n || psi.amps.size() != std::size_t{1} << cm.n) {
        throw Error(Errc::dimension_mismatch, "state does not match the check matrix");
    }
    double worst = 0.0;
    for (const CheckRow& row : cm.rows) {
        const DenseState phi = apply_pauli(psi, check_row_to_pauli(row, cm.n));
        for (std::size_t i = 0; i < psi.amps.size(); ++i) {
            worst = std::max(worst, std::abs(phi.amps[i] - psi.amps[i]));
        }
    }
    return worst;
}

}  // namespace stabmat
