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

#include "stabmat/pauli.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace stabmat {

namespace {

void check_state_dims(std::size_t in_size, std::size_t out_size, const PauliOp& p) {
    const std::size_t want = std::size_t{1} << p.n;
    if (in_size != want || out_size != want) {
        throw Error(Errc::dimension_mismatch, "state length does not match the operator's 2^n");
    }
}

}  // namespace

void apply_pauli_into(std::span<const Amplitude> in, std::span<Amplitude> out, const PauliOp& p,
                      ApplyMode mode) {
    check_state_dims(in.size(), out.size(), p);
    const BitWord end = BitWord{1} << p.n;
    const unsigned w0 = p.phase & 3u;

    if (mode == ApplyMode::one_hot) {
        std::vector<std::uint8_t> lut(end, 0);
        for (int t = 0; t < p.n; ++t) {
            lut[std::size_t{1} << t] = static_cast<std::uint8_t>((p.u >> t) & 1);
        }
        BitWord x = 0;
        BitWord z = p.w;
        unsigned s = 0;
        out[z] = mul_i_pow(in[x], w0);
        for (BitWord m = 1; m < end; ++m) {
            const BitWord f = m & (~m + 1);
            x ^= f;
            z ^= f;
            s ^= lut[f];
            out[z] = mul_i_pow(in[x], w0 + 2 * s);
        }
        return;
    }

    BitWord x = 0;
    BitWord z = p.w;
    unsigned s = 0;
    out[z] = mul_i_pow(in[x], w0);
    for (BitWord m = 1; m < end; ++m) {
        const BitWord f = m & (~m + 1);
        x ^= f;
        z ^= f;
        s ^= static_cast<unsigned>((p.u & f) != 0);
        out[z] = mul_i_pow(in[x], w0 + 2 * s);
    }
}

DenseState apply_pauli(const DenseState& psi, const PauliOp& p, ApplyMode mode) {
    if (psi.n != p.n) {
        throw Error(Errc::dimension_mismatch, "state and operator qubit counts differ");
    }
    DenseState phi;
    phi.n = psi.n;
    phi.amps.resize(psi.amps.size());
    apply_pauli_into(psi.amps, phi.amps, p, mode);
    return phi;
}

DenseState apply_pauli_naive(const DenseState& psi, const PauliOp& p) {
    if (psi.n != p.n) {
        throw Error(Errc::dimension_mismatch, "state and operator qubit counts differ");
    }
    DenseState phi;
    phi.n = psi.n;
    phi.amps.assign(psi.amps.size(), Amplitude{0.0, 0.0});
    const BitWord end = BitWord{1} << p.n;
    for (BitWord x = 0; x < end; ++x) {
        const unsigned sign = 2u * static_cast<unsigned>(std::popcount(p.u & x) & 1);
        phi.amps[x ^ p.w] = mul_i_pow(psi.amps[x], p.phase + sign);
    }
    return phi;
}

DenseMatrix pauli_dense(const PauliOp& p, int max_n) {
    if (p.n > max_n) {
        throw Error(Errc::too_large, "dense Pauli matrix capped at n=" + std::to_string(max_n));
    }
    DenseMatrix m;
    m.n = p.n;
    m.entries.assign(std::size_t{1} << (2 * p.n), Amplitude{0.0, 0.0});
    const BitWord end = BitWord{1} << p.n;
    for (BitWord x = 0; x < end; ++x) {
        const unsigned sign = 2u * static_cast<unsigned>(std::popcount(p.u & x) & 1);
        m.at(x ^ p.w, x) = mul_i_pow(Amplitude{1.0, 0.0}, p.phase + sign);
    }
    return m;
}

std::vector<PauliWalkState> apply_pauli_trace(const PauliOp& p) {
    std::vector<PauliWalkState> trace;
    const BitWord end = BitWord{1} << p.n;
    trace.reserve(end);
    BitWord x = 0;
    BitWord z = p.w;
    unsigned s = 0;
    trace.push_back(PauliWalkState{x, z, 0});
    for (BitWord m = 1; m < end; ++m) {
        const BitWord f = m & (~m + 1);
        x ^= f;
        z ^= f;
        s ^= static_cast<unsigned>((p.u & f) != 0);
        trace.push_back(PauliWalkState{x, z, static_cast<std::uint8_t>(s)});
    }
    return trace;
}

}  // namespace stabmat
