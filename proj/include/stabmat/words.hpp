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

#ifndef STABMAT_WORDS_HPP
#define STABMAT_WORDS_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace stabmat {

// One machine word holds a vector in F_2^n. Coordinate 1 lives at bit 0
// (the least significant bit), coordinate t at bit t-1. Bits at positions
// >= n are always zero for an n-bit word.
using BitWord = std::uint64_t;

inline constexpr int kWordBits = 64;

// Largest supported n (and k): indices up to 2^n - 1 must also fit in a word.
inline constexpr int kMaxCoords = kWordBits - 1;

/// Binary reflected Gray code: g(m) = m XOR floor(m/2).
constexpr BitWord gray(BitWord m) noexcept {
    return m ^ (m >> 1);
}

/// One-hot word of the single bit in which gray(m) and gray(m-1) differ,
/// i.e. the lowest set bit of m. Requires m >= 1.
constexpr BitWord flip_word(BitWord m) noexcept {
    return m & (~m + 1);
}

constexpr int parity(BitWord v) noexcept {
    return std::popcount(v) & 1;
}

/// Inner product over F_2.
constexpr int dot(BitWord a, BitWord b) noexcept {
    return parity(a & b);
}

/// Mask with the low `bits` bits set (0 <= bits <= 64).
constexpr BitWord low_mask(int bits) noexcept {
    return bits >= kWordBits ? ~BitWord{0} : (BitWord{1} << bits) - 1;
}

/// Rank over F_2 of a list of row words. Does not modify the input.
int gf2_rank(std::span<const BitWord> rows);

}  // namespace stabmat

#endif
