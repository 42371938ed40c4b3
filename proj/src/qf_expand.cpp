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

#include "stabmat/qf_expand.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <new>
#include <string>
#include <utility>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

namespace stabmat {

InteractionData build_interaction(const QuadraticFormDesc& desc) {
    const int k = desc.k;
    InteractionData id;
    id.a.resize(k);
    id.cols.assign(k, 0);
    for (int t = 0; t < k; ++t) {
        const unsigned jtt = (desc.J[t] >> t) & 1;
        id.a[t] = static_cast<std::uint8_t>((((desc.d >> t) & 1) + 2 * jtt) & 3);
        BitWord off = desc.J[t] & ~(BitWord{1} << t);  // strictly upper part of row t
        id.cols[t] |= off;
        while (off != 0) {
            const int j = std::countr_zero(off);
            off &= off - 1;
            id.cols[j] |= BitWord{1} << t;
        }
    }
    return id;
}

std::uint8_t phase_eval(const InteractionData& id, BitWord y) {
    // 2 * sum_{i<j in y} B_ij equals sum_{t in y} |col_t & y| as integers.
    unsigned acc = 0;
    BitWord rem = y;
    while (rem != 0) {
        const int t = std::countr_zero(rem);
        rem &= rem - 1;
        acc += id.a[t] + std::popcount(id.cols[t] & y);
    }
    return static_cast<std::uint8_t>(acc & 3);
}

namespace {

/// The Gray walk over an arbitrary k-dimensional basis. Calls
/// sink(y, x, p, q) for the initial point and after every flip.
template <class Sink>
void walk_basis(int k, BitWord h, const BitWord* v, const std::uint8_t* a, const BitWord* cols,
                Sink&& sink) {
    BitWord y = 0;
    BitWord x = h;
    BitWord p = 0;
    unsigned q = 0;
    sink(y, x, p, q);
    const BitWord end = BitWord{1} << k;
    for (BitWord m = 1; m < end; ++m) {
        const BitWord f = m & (~m + 1);
        const int t = std::countr_zero(m);
        const unsigned inc = (y & f) != 0 ? 4u - a[t] : a[t];
        q = (q + inc + 2u * ((p & f) != 0)) & 3u;
        y ^= f;
        x ^= v[t];
        p ^= cols[t];
        sink(y, x, p, q);
    }
}

/// Quadratic-form data re-expressed over the reduced-row-echelon basis of
/// the same support. Amplitudes are unchanged; only the parametrization of
/// the walk moves, which makes the write pattern as local as the support
/// allows (for k = n the basis becomes the identity and h becomes 0).
struct CanonicalForm {
    BitWord h = 0;
    std::vector<BitWord> v;
    std::vector<std::uint8_t> a;
    std::vector<BitWord> cols;
    Amplitude gamma{1.0, 0.0};
};

CanonicalForm canonicalize(const QuadraticFormDesc& desc, const InteractionData& id) {
    const int k = desc.k;
    std::vector<BitWord> rows = desc.v;
    std::vector<BitWord> combo(k);  // new row i as a combination of old rows
    for (int t = 0; t < k; ++t) {
        combo[t] = BitWord{1} << t;
    }
    int r = 0;
    for (int c = 0; c < desc.n && r < k; ++c) {
        int pivot = -1;
        for (int i = r; i < k; ++i) {
            if ((rows[i] >> c) & 1) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        std::swap(combo[r], combo[pivot]);
        for (int i = 0; i < k; ++i) {
            if (i != r && ((rows[i] >> c) & 1)) {
                rows[i] ^= rows[r];
                combo[i] ^= combo[r];
            }
        }
        ++r;
    }
    assert(r == k);

    // Clear the pivot coordinates of h; y0 tracks the change of origin in
    // the old coordinates.
    BitWord h = desc.h;
    BitWord y0 = 0;
    for (int i = 0; i < k; ++i) {
        const int c = std::countr_zero(rows[i]);
        if ((h >> c) & 1) {
            h ^= rows[i];
            y0 ^= combo[i];
        }
    }

    // The phase form composed with the affine coordinate change is again of
    // the linear-plus-even-quadratic shape; read its coefficients off by
    // evaluating at 0, the unit vectors, and the pairs.
    const std::uint8_t q0 = phase_eval(id, y0);
    CanonicalForm canon;
    canon.h = h;
    canon.v = std::move(rows);
    canon.a.resize(k);
    canon.cols.assign(k, 0);
    canon.gamma = mul_i_pow(desc.gamma, q0);
    for (int t = 0; t < k; ++t) {
        canon.a[t] = static_cast<std::uint8_t>((phase_eval(id, y0 ^ combo[t]) - q0) & 3);
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const unsigned pair =
                (phase_eval(id, y0 ^ combo[i] ^ combo[j]) - q0 - canon.a[i] - canon.a[j]) & 3;
            assert(pair == 0 || pair == 2);
            if (pair == 2) {
                canon.cols[i] |= BitWord{1} << j;
                canon.cols[j] |= BitWord{1} << i;
            }
        }
    }
    return canon;
}

void expand_full_support(const CanonicalForm& canon, int n, std::span<Amplitude> out) {
    // k == n: the canonical basis is the identity, h is 0, and the walk
    // visits x = gray(m) in order. Every entry is overwritten, so there is
    // no zero-fill. Consecutive Gray words fill each aligned block of four
    // entries completely, which lets the store stream bypass the cache.
    assert(canon.h == 0);
    const Amplitude vals[4] = {
        canon.gamma,
        mul_i_pow(canon.gamma, 1),
        mul_i_pow(canon.gamma, 2),
        mul_i_pow(canon.gamma, 3),
    };
    const std::uint8_t* a = canon.a.data();
    const BitWord* cols = canon.cols.data();
    const BitWord end = BitWord{1} << n;
#if defined(__SSE2__)
    if (reinterpret_cast<std::uintptr_t>(out.data()) % 16 == 0) {
        __m128d packed[4];
        for (int q = 0; q < 4; ++q) {
            packed[q] = _mm_set_pd(vals[q].imag(), vals[q].real());
        }
        double* base = reinterpret_cast<double*>(out.data());
        BitWord y = 0;
        BitWord p = 0;
        unsigned q = 0;
        _mm_stream_pd(base, packed[0]);
        for (BitWord m = 1; m < end; ++m) {
            const BitWord f = m & (~m + 1);
            const int t = std::countr_zero(m);
            const unsigned inc = (y & f) != 0 ? 4u - a[t] : a[t];
            q = (q + inc + 2u * ((p & f) != 0)) & 3u;
            y ^= f;
            p ^= cols[t];
            _mm_stream_pd(base + 2 * y, packed[q]);
        }
        _mm_sfence();
        return;
    }
#endif
    BitWord y = 0;
    BitWord p = 0;
    unsigned q = 0;
    out[0] = vals[0];
    for (BitWord m = 1; m < end; ++m) {
        const BitWord f = m & (~m + 1);
        const int t = std::countr_zero(m);
        const unsigned inc = (y & f) != 0 ? 4u - a[t] : a[t];
        q = (q + inc + 2u * ((p & f) != 0)) & 3u;
        y ^= f;
        p ^= cols[t];
        out[y] = vals[q];
    }
}

void expand_one_hot(const QuadraticFormDesc& desc, const InteractionData& id,
                    std::span<Amplitude> out) {
    // One-hot lookup tables of length 2^k indexed directly by the flip word.
    const int k = desc.k;
    const std::size_t tlen = std::size_t{1} << k;
    std::vector<std::uint8_t> ta(tlen, 0);
    std::vector<BitWord> tv(tlen, 0);
    std::vector<BitWord> tc(tlen, 0);
    for (int t = 0; t < k; ++t) {
        ta[std::size_t{1} << t] = id.a[t];
        tv[std::size_t{1} << t] = desc.v[t];
        tc[std::size_t{1} << t] = id.cols[t];
    }
    std::fill(out.begin(), out.end(), Amplitude{0.0, 0.0});
    const Amplitude vals[4] = {
        desc.gamma,
        mul_i_pow(desc.gamma, 1),
        mul_i_pow(desc.gamma, 2),
        mul_i_pow(desc.gamma, 3),
    };
    BitWord y = 0;
    BitWord x = desc.h;
    BitWord p = 0;
    unsigned q = 0;
    out[x] = vals[0];
    const BitWord end = BitWord{1} << k;
    for (BitWord m = 1; m < end; ++m) {
        const BitWord f = m & (~m + 1);
        const unsigned inc = (y & f) != 0 ? 4u - ta[f] : ta[f];
        q = (q + inc + 2u * ((p & f) != 0)) & 3u;
        y ^= f;
        x ^= tv[f];
        p ^= tc[f];
        out[x] = vals[q];
    }
}

void check_out_size(int n, std::size_t size) {
    if (size != std::size_t{1} << n) {
        throw Error(Errc::dimension_mismatch, "output buffer length is not 2^n");
    }
}

DenseState alloc_state(int n, int max_n) {
    if (n > max_n) {
        throw Error(Errc::too_large, "n=" + std::to_string(n) + " exceeds the size cap " +
                                         std::to_string(max_n));
    }
    DenseState psi;
    psi.n = n;
    try {
        psi.amps.resize(std::size_t{1} << n);
    } catch (const std::bad_alloc&) {
        throw Error(Errc::resource, "cannot allocate 2^" + std::to_string(n) + " amplitudes");
    }
    return psi;
}

}  // namespace

void expand_into(const QuadraticFormDesc& desc, std::span<Amplitude> out, ExpandMode mode) {
    check_out_size(desc.n, out.size());
    const InteractionData id = build_interaction(desc);
    if (mode == ExpandMode::one_hot) {
        expand_one_hot(desc, id, out);
        return;
    }
    const CanonicalForm canon = canonicalize(desc, id);
    if (desc.k == desc.n) {
        expand_full_support(canon, desc.n, out);
        return;
    }
    std::fill(out.begin(), out.end(), Amplitude{0.0, 0.0});
    const Amplitude vals[4] = {
        canon.gamma,
        mul_i_pow(canon.gamma, 1),
        mul_i_pow(canon.gamma, 2),
        mul_i_pow(canon.gamma, 3),
    };
    walk_basis(desc.k, canon.h, canon.v.data(), canon.a.data(), canon.cols.data(),
               [&](BitWord, BitWord x, BitWord, unsigned q) { out[x] = vals[q]; });
}

DenseState expand(const QuadraticFormDesc& desc, ExpandMode mode, int max_n) {
    DenseState psi = alloc_state(desc.n, max_n);
    expand_into(desc, psi.amps, mode);
    return psi;
}

void expand_naive_into(const QuadraticFormDesc& desc, std::span<Amplitude> out) {
    check_out_size(desc.n, out.size());
    std::fill(out.begin(), out.end(), Amplitude{0.0, 0.0});
    const int k = desc.k;
    const BitWord end = BitWord{1} << k;
    for (BitWord y = 0; y < end; ++y) {
        BitWord x = desc.h;
        unsigned q = 0;
        for (int t = 0; t < k; ++t) {
            if ((y >> t) & 1) {
                x ^= desc.v[t];
                q += (desc.d >> t) & 1;
            }
        }
        for (int i = 0; i < k; ++i) {
            if (((y >> i) & 1) == 0) {
                continue;
            }
            for (int j = i; j < k; ++j) {
                if (((y >> j) & 1) && ((desc.J[i] >> j) & 1)) {
                    q += 2;
                }
            }
        }
        out[x] = mul_i_pow(desc.gamma, q & 3);
    }
}

DenseState expand_naive(const QuadraticFormDesc& desc, int max_n) {
    DenseState psi = alloc_state(desc.n, max_n);
    expand_naive_into(desc, psi.amps);
    return psi;
}

std::vector<PhasePoint> expand_exact(const QuadraticFormDesc& desc) {
    const InteractionData id = build_interaction(desc);
    std::vector<PhasePoint> points;
    points.reserve(std::size_t{1} << desc.k);
    walk_basis(desc.k, desc.h, desc.v.data(), id.a.data(), id.cols.data(),
               [&](BitWord, BitWord x, BitWord, unsigned q) {
                   points.push_back(PhasePoint{x, static_cast<std::uint8_t>(q)});
               });
    return points;
}

std::vector<GrayWalkState> expand_trace(const QuadraticFormDesc& desc) {
    const InteractionData id = build_interaction(desc);
    std::vector<GrayWalkState> trace;
    trace.reserve(std::size_t{1} << desc.k);
    walk_basis(desc.k, desc.h, desc.v.data(), id.a.data(), id.cols.data(),
               [&](BitWord y, BitWord x, BitWord p, unsigned q) {
                   trace.push_back(GrayWalkState{y, x, p, static_cast<std::uint8_t>(q)});
               });
    return trace;
}

}  // namespace stabmat
