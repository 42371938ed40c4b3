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

#ifndef STABMAT_QF_EXPAND_HPP
#define STABMAT_QF_EXPAND_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "stabmat/model.hpp"

namespace stabmat {

/// Default guardrail for dense state outputs (2^26 complex doubles = 1 GB).
inline constexpr int kDefaultMaxStateQubits = 26;

/// Split phase data: a[t] = d_t + 2 J_tt in Z_4, and the symmetric
/// zero-diagonal coupling matrix B stored by columns (cols[t] = column t).
struct InteractionData {
    std::vector<std::uint8_t> a;
    std::vector<BitWord> cols;
};

InteractionData build_interaction(const QuadraticFormDesc& desc);

/// Phase exponent d.y + 2 y^T J y mod 4 evaluated from (a, B) in O(k).
std::uint8_t phase_eval(const InteractionData& id, BitWord y);

enum class ExpandMode {
    fast,     // trailing-zero tables, canonicalized basis, streaming writes
    one_hot,  // one-hot lookup tables of length 2^k, caller's basis as given
};

/// Full amplitude vector of the described stabilizer state.
/// The caller is expected to have validated `desc`.
DenseState expand(const QuadraticFormDesc& desc, ExpandMode mode = ExpandMode::fast,
                  int max_n = kDefaultMaxStateQubits);

/// Same, writing into a caller-provided buffer of length 2^n (zero-filled
/// here; no allocation).
void expand_into(const QuadraticFormDesc& desc, std::span<Amplitude> out,
                 ExpandMode mode = ExpandMode::fast);

/// Brute-force reference: every support point evaluated independently by
/// full summation over d and J. Intended for small n.
DenseState expand_naive(const QuadraticFormDesc& desc, int max_n = kDefaultMaxStateQubits);
void expand_naive_into(const QuadraticFormDesc& desc, std::span<Amplitude> out);

/// One support point: index and phase exponent, before the gamma scaling.
struct PhasePoint {
    BitWord x = 0;
    std::uint8_t q = 0;

    bool operator==(const PhasePoint&) const = default;
};

/// The 2^k (x, q) pairs in the order the Gray walk over the caller's basis
/// visits them.
std::vector<PhasePoint> expand_exact(const QuadraticFormDesc& desc);

/// Full internal state of the Gray walk after each write, for debug checks.
struct GrayWalkState {
    BitWord y = 0;        // current Gray word over the k support coordinates
    BitWord x = 0;        // current support index
    BitWord p = 0;        // cached parity word B.y
    std::uint8_t q = 0;   // phase exponent in Z_4
};

std::vector<GrayWalkState> expand_trace(const QuadraticFormDesc& desc);

}  // namespace stabmat

#endif
