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

#include "stabmat/model.hpp"

#include <string>

namespace stabmat {

namespace {

void check_coord_count(int n, const char* what) {
    if (n < 1 || n > kMaxCoords) {
        throw Error(Errc::shape_mismatch,
                    std::string(what) + " count " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxCoords));
    }
}

/// Rank over F_2 of rows of 2n-bit symplectic pairs (w | u).
int symplectic_rank(const std::vector<CheckRow>& rows) {
    BitWord basis_w[2 * kWordBits] = {};
    BitWord basis_u[2 * kWordBits] = {};
    bool used[2 * kWordBits] = {};
    int rank = 0;
    for (CheckRow row : rows) {
        BitWord w = row.w;
        BitWord u = row.u;
        while (w != 0 || u != 0) {
            int hb = w != 0 ? kWordBits + (kWordBits - 1 - std::countl_zero(w))
                            : kWordBits - 1 - std::countl_zero(u);
            if (!used[hb]) {
                basis_w[hb] = w;
                basis_u[hb] = u;
                used[hb] = true;
                ++rank;
                break;
            }
            w ^= basis_w[hb];
            u ^= basis_u[hb];
        }
    }
    return rank;
}

}  // namespace

void validate_qf(const QuadraticFormDesc& desc) {
    check_coord_count(desc.n, "qubit");
    if (desc.k < 0 || desc.k > desc.n) {
        throw Error(Errc::shape_mismatch, "support dimension k=" + std::to_string(desc.k) +
                                              " outside 0..n=" + std::to_string(desc.n));
    }
    const BitWord nmask = low_mask(desc.n);
    const BitWord kmask = low_mask(desc.k);
    if ((desc.h & ~nmask) != 0) {
        throw Error(Errc::shape_mismatch, "shift vector h has bits above coordinate n");
    }
    if (static_cast<int>(desc.v.size()) != desc.k) {
        throw Error(Errc::shape_mismatch, "expected k basis vectors");
    }
    if (static_cast<int>(desc.J.size()) != desc.k) {
        throw Error(Errc::shape_mismatch, "expected k rows of J");
    }
    for (int t = 0; t < desc.k; ++t) {
        if ((desc.v[t] & ~nmask) != 0) {
            throw Error(Errc::shape_mismatch, "basis vector v_" + std::to_string(t + 1) +
                                                  " has bits above coordinate n");
        }
        if ((desc.J[t] & ~kmask) != 0) {
            throw Error(Errc::shape_mismatch,
                        "J row " + std::to_string(t + 1) + " has bits above coordinate k");
        }
        if ((desc.J[t] & low_mask(t)) != 0) {
            throw Error(Errc::shape_mismatch,
                        "J row " + std::to_string(t + 1) + " has bits below the diagonal");
        }
    }
    if ((desc.d & ~kmask) != 0) {
        throw Error(Errc::shape_mismatch, "d has bits above coordinate k");
    }
    if (gf2_rank(desc.v) != desc.k) {
        throw Error(Errc::dependent_basis, "basis vectors are linearly dependent");
    }
    if (desc.gamma == Amplitude{0.0, 0.0}) {
        throw Error(Errc::zero_gamma, "gamma must be nonzero");
    }
}

void validate_check(const CheckMatrix& cm) {
    check_coord_count(cm.n, "qubit");
    if (static_cast<int>(cm.rows.size()) != cm.n) {
        throw Error(Errc::shape_mismatch, "expected n generator rows");
    }
    const BitWord nmask = low_mask(cm.n);
    for (const CheckRow& row : cm.rows) {
        if ((row.w & ~nmask) != 0 || (row.u & ~nmask) != 0) {
            throw Error(Errc::shape_mismatch, "generator row has bits above coordinate n");
        }
    }
    for (int r = 0; r < cm.n; ++r) {
        for (int s = r + 1; s < cm.n; ++s) {
            int sym = dot(cm.rows[r].w, cm.rows[s].u) ^ dot(cm.rows[r].u, cm.rows[s].w);
            if (sym != 0) {
                throw Error(Errc::non_commuting_rows, "generators " + std::to_string(r + 1) +
                                                          " and " + std::to_string(s + 1) +
                                                          " anticommute");
            }
        }
    }
    if (symplectic_rank(cm.rows) != cm.n) {
        throw Error(Errc::dependent_rows, "generator rows are linearly dependent");
    }
}

void validate_tableau(const CliffordTableau& tab) {
    check_coord_count(tab.n, "qubit");
    if (static_cast<int>(tab.U.size()) != tab.n || static_cast<int>(tab.V.size()) != tab.n) {
        throw Error(Errc::shape_mismatch, "expected n U rows and n V rows");
    }
    const BitWord nmask = low_mask(tab.n);
    auto check_row = [&](const PauliOp& p, const char* kind, int t) {
        if (p.n != tab.n || (p.w & ~nmask) != 0 || (p.u & ~nmask) != 0) {
            throw Error(Errc::shape_mismatch,
                        std::string(kind) + "_" + std::to_string(t + 1) + " has wrong qubit count");
        }
        if (!pauli_hermitian(p)) {
            throw Error(Errc::not_hermitian,
                        std::string(kind) + "_" + std::to_string(t + 1) + " is not Hermitian");
        }
    };
    for (int t = 0; t < tab.n; ++t) {
        check_row(tab.U[t], "U", t);
        check_row(tab.V[t], "V", t);
    }
    for (int t = 0; t < tab.n; ++t) {
        for (int s = 0; s < tab.n; ++s) {
            if (symplectic_dot(tab.U[t], tab.U[s]) != 0 ||
                symplectic_dot(tab.V[t], tab.V[s]) != 0) {
                throw Error(Errc::bad_commutation, "rows " + std::to_string(t + 1) + "," +
                                                       std::to_string(s + 1) +
                                                       " break the commutation pattern");
            }
            if (symplectic_dot(tab.U[t], tab.V[s]) != (t == s ? 1 : 0)) {
                throw Error(Errc::bad_commutation, "U_" + std::to_string(t + 1) + " and V_" +
                                                       std::to_string(s + 1) +
                                                       " break the commutation pattern");
            }
        }
    }
}

}  // namespace stabmat
