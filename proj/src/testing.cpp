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

#include "stabmat/testing.hpp"

#include <cmath>
#include <vector>

#include "stabmat/reduction.hpp"
#include "stabmat/words.hpp"

namespace stabmat::testing {

namespace {

// Conjugation action of the generator gates on i^e X(w) Z(u).

void conj_h(PauliOp& p, int t) {
    const BitWord f = BitWord{1} << (t - 1);
    const unsigned wb = (p.w & f) != 0;
    const unsigned ub = (p.u & f) != 0;
    if (wb != ub) {
        p.w ^= f;
        p.u ^= f;
    }
    p.phase = static_cast<std::uint8_t>((p.phase + 2 * wb * ub) & 3);
}

void conj_s(PauliOp& p, int t) {
    const BitWord f = BitWord{1} << (t - 1);
    const unsigned wb = (p.w & f) != 0;
    p.u ^= p.w & f;
    p.phase = static_cast<std::uint8_t>((p.phase + wb) & 3);
}

void conj_cnot(PauliOp& p, int control, int target) {
    const BitWord fc = BitWord{1} << (control - 1);
    const BitWord ft = BitWord{1} << (target - 1);
    if (p.w & fc) {
        p.w ^= ft;
    }
    if (p.u & ft) {
        p.u ^= fc;
    }
}

void for_each_row(CliffordTableau& tab, void (*f)(PauliOp&, int), int t) {
    for (PauliOp& p : tab.U) {
        f(p, t);
    }
    for (PauliOp& p : tab.V) {
        f(p, t);
    }
}

}  // namespace

CliffordTableau identity_tableau(int n) {
    CliffordTableau tab;
    tab.n = n;
    for (int t = 0; t < n; ++t) {
        tab.U.push_back(PauliOp{n, 0, 0, BitWord{1} << t});
        tab.V.push_back(PauliOp{n, 0, BitWord{1} << t, 0});
    }
    return tab;
}

void apply_h(CliffordTableau& tab, int t) {
    for_each_row(tab, conj_h, t);
}

void apply_s(CliffordTableau& tab, int t) {
    for_each_row(tab, conj_s, t);
}

void apply_cnot(CliffordTableau& tab, int control, int target) {
    for (PauliOp& p : tab.U) {
        conj_cnot(p, control, target);
    }
    for (PauliOp& p : tab.V) {
        conj_cnot(p, control, target);
    }
}

CliffordTableau random_tableau(int n, Rng& rng) {
    CliffordTableau tab = identity_tableau(n);
    std::uniform_int_distribution<int> pick_gate(0, n > 1 ? 2 : 1);
    std::uniform_int_distribution<int> pick_qubit(1, n);
    for (int step = 0; step < 10 * n; ++step) {
        const int gate = pick_gate(rng);
        const int t = pick_qubit(rng);
        if (gate == 0) {
            apply_h(tab, t);
        } else if (gate == 1) {
            apply_s(tab, t);
        } else {
            int target = pick_qubit(rng);
            while (target == t) {
                target = pick_qubit(rng);
            }
            apply_cnot(tab, t, target);
        }
    }
    return tab;
}

CheckMatrix random_check(int n, Rng& rng) {
    const CliffordTableau tab = random_tableau(n, rng);
    CheckMatrix cm;
    cm.n = n;
    for (const PauliOp& u : tab.U) {
        cm.rows.push_back(pauli_to_check_row(u));
    }
    return cm;
}

QuadraticFormDesc random_qf(int n, int k, Rng& rng) {
    std::uniform_int_distribution<BitWord> word(0, low_mask(n));
    QuadraticFormDesc desc;
    desc.n = n;
    desc.k = k;
    desc.h = word(rng);
    while (static_cast<int>(desc.v.size()) < k) {
        desc.v.push_back(word(rng));
        if (gf2_rank(desc.v) != static_cast<int>(desc.v.size())) {
            desc.v.pop_back();
        }
    }
    std::uniform_int_distribution<BitWord> kword(0, k > 0 ? low_mask(k) : 0);
    desc.d = kword(rng);
    desc.J.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            if (kword(rng) & 1) {
                desc.J[i] |= BitWord{1} << j;
            }
        }
    }
    desc.gamma = Amplitude{std::ldexp(k % 2 ? 1.0 / std::sqrt(2.0) : 1.0, -(k / 2)), 0.0};
    return desc;
}

DenseState random_state(int n, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DenseState psi;
    psi.n = n;
    psi.amps.resize(std::size_t{1} << n);
    double norm2 = 0.0;
    for (Amplitude& a : psi.amps) {
        a = {gauss(rng), gauss(rng)};
        norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (Amplitude& a : psi.amps) {
        a *= scale;
    }
    return psi;
}

PauliOp random_pauli(int n, Rng& rng) {
    std::uniform_int_distribution<BitWord> word(0, low_mask(n));
    PauliOp p;
    p.n = n;
    p.w = word(rng);
    p.u = word(rng);
    // Keep it Hermitian so check-row conversion is always possible.
    const int y_count = std::popcount(p.w & p.u);
    std::uniform_int_distribution<int> sign(0, 1);
    p.phase = static_cast<std::uint8_t>((y_count + 2 * sign(rng)) & 3);
    return p;
}

}  // namespace stabmat::testing
