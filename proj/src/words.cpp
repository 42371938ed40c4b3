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

#include "stabmat/words.hpp"

namespace stabmat {

int gf2_rank(std::span<const BitWord> rows) {
    BitWord basis[kWordBits] = {};  // basis[b] has leading bit b, or is zero
    int rank = 0;
    for (BitWord row : rows) {
        while (row != 0) {
            int hb = kWordBits - 1 - std::countl_zero(row);
            if (basis[hb] == 0) {
                basis[hb] = row;
                ++rank;
                break;
            }
            row ^= basis[hb];
        }
    }
    return rank;
}

}  // namespace stabmat
