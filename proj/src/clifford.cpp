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

#include "stabmat/clifford.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "stabmat/pauli.hpp"
#include "stabmat/qf_expand.hpp"
#include "stabmat/reduction.hpp"

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

namespace stabmat {

namespace {

void fill_columns(const CliffordTableau& tab, const DenseState& c0, std::span<Amplitude> out) {
    const std::size_t dim = std::size_t{1} << tab.n;
#if defined(__SSE2__)
    if (reinterpret_cast<std::uintptr_t>(out.data()) % 16 == 0 && tab.n >= 2) {
        // Each column is produced in a small cache-resident scratch buffer
        // (so the column recurrence always reads from cache) and the
        // finished column is then streamed to the 4^n output with
        // non-temporal stores. The output is written exactly once and never
        // read, so bypassing the cache avoids the read-for-ownership
        // traffic and keeps the per-column cost flat in n.
        std::vector<Amplitude> cur(c0.amps), next(dim);
        const auto stream_column = [&](const Amplitude* col, std::size_t x) {
            double* base = reinterpret_cast<double*>(out.data()) + 2 * x * dim;
            const double* src = reinterpret_cast<const double*>(col);
            for (std::size_t i = 0; i < 2 * dim; i += 2) {
                _mm_stream_pd(base + i, _mm_loadu_pd(src + i));
            }
        };
        stream_column(cur.data(), 0);
        BitWord x = 0;
        for (BitWord step = 1; step < dim; ++step) {
            const int t = std::countr_zero(step);
            apply_pauli_into(cur, next, tab.V[t]);
            x ^= BitWord{1} << t;
            stream_column(next.data(), x);
            std::swap(cur, next);
        }
        _mm_sfence();
        return;
    }
#endif
    std::copy(c0.amps.begin(), c0.amps.end(), out.begin());
    BitWord x = 0;
    for (BitWord step = 1; step < dim; ++step) {
        const int t = std::countr_zero(step);
        std::span<const Amplitude> prev{out.data() + x * dim, dim};
        x ^= BitWord{1} << t;
        std::span<Amplitude> next{out.data() + x * dim, dim};
        apply_pauli_into(prev, next, tab.V[t]);
    }
}

}  // namespace

DenseState first_column(const CliffordTableau& tab) {
    validate_tableau(tab);
    // C|0..0> is the joint +1 eigenvector of the U rows, which therefore
    // form a check matrix for it.
    CheckMatrix cm;
    cm.n = tab.n;
    cm.rows.reserve(tab.n);
    for (const PauliOp& u : tab.U) {
        cm.rows.push_back(pauli_to_check_row(u));
    }
    return expand(check_to_qf(cm));
}

DenseMatrix tableau_to_matrix(const CliffordTableau& tab, const DenseState& c0, int max_n) {
    validate_tableau(tab);
    if (tab.n > max_n) {
        throw Error(Errc::too_large, "dense matrix output capped at n=" + std::to_string(max_n));
    }
    if (c0.n != tab.n || c0.amps.size() != std::size_t{1} << tab.n) {
        throw Error(Errc::dimension_mismatch, "first column length is not 2^n");
    }
    const std::size_t dim = std::size_t{1} << tab.n;
    DenseMatrix m;
    m.n = tab.n;
    try {
        m.entries.resize(dim * dim);
    } catch (const std::bad_alloc&) {
        throw Error(Errc::resource, "cannot allocate the 4^n output matrix");
    }
    // Column Gray walk: c_{x ^ e_t} = V_t c_x, reading the column written in
    // the previous step.
    fill_columns(tab, c0, m.entries);
    return m;
}

void tableau_to_matrix_into(const CliffordTableau& tab, const DenseState& c0,
                            std::span<Amplitude> out) {
    validate_tableau(tab);
    if (c0.n != tab.n || c0.amps.size() != std::size_t{1} << tab.n) {
        throw Error(Errc::dimension_mismatch, "first column length is not 2^n");
    }
    if (out.size() != std::size_t{1} << (2 * tab.n)) {
        throw Error(Errc::dimension_mismatch, "output buffer length is not 4^n");
    }
    fill_columns(tab, c0, out);
}

DenseMatrix expand_tableau(const CliffordTableau& tab, int max_n) {
    return tableau_to_matrix(tab, first_column(tab), max_n);
}

namespace {

using Mat = std::vector<Amplitude>;  // column-major, dim x dim

Mat mat_mul(const Mat& a, const Mat& b, std::size_t dim) {
    Mat c(dim * dim, Amplitude{0.0, 0.0});
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t inner = 0; inner < dim; ++inner) {
            const Amplitude scale = b[col * dim + inner];
            if (scale == Amplitude{0.0, 0.0}) {
                continue;
            }
            for (std::size_t row = 0; row < dim; ++row) {
                c[col * dim + row] += a[inner * dim + row] * scale;
            }
        }
    }
    return c;
}

Mat mat_adjoint(const Mat& a, std::size_t dim) {
    Mat c(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t row = 0; row < dim; ++row) {
            c[col * dim + row] = std::conj(a[row * dim + col]);
        }
    }
    return c;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

double conjugation_oracle(const DenseMatrix& M, const CliffordTableau& tab, int max_n) {
    if (tab.n > max_n) {
        throw Error(Errc::too_large, "conjugation oracle capped at n=" + std::to_string(max_n));
    }
    if (M.n != tab.n || M.entries.size() != (std::size_t{1} << (2 * tab.n))) {
        throw Error(Errc::dimension_mismatch, "matrix does not match the tableau");
    }
    const std::size_t dim = std::size_t{1} << tab.n;
    const Mat adj = mat_adjoint(M.entries, dim);

    double worst = 0.0;
    for (int t = 0; t < tab.n; ++t) {
        const PauliOp z_t{tab.n, 0, 0, BitWord{1} << t};
        const PauliOp x_t{tab.n, 0, BitWord{1} << t, 0};
        const Mat lhs_u = mat_mul(mat_mul(M.entries, pauli_dense(z_t, max_n).entries, dim), adj, dim);
        const Mat lhs_v = mat_mul(mat_mul(M.entries, pauli_dense(x_t, max_n).entries, dim), adj, dim);
        worst = std::max(worst, max_abs_diff(lhs_u, pauli_dense(tab.U[t], max_n).entries));
        worst = std::max(worst, max_abs_diff(lhs_v, pauli_dense(tab.V[t], max_n).entries));
    }

    Mat gram = mat_mul(adj, M.entries, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        gram[i * dim + i] -= 1.0;
    }
    double unit = 0.0;
    for (const Amplitude& e : gram) {
        unit = std::max(unit, std::abs(e));
    }
    return std::max(worst, unit);
}

}  // namespace stabmat
