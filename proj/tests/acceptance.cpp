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

// Acceptance gate: one line of output per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stabmat/clifford.hpp"
#include "stabmat/io.hpp"
#include "stabmat/pauli.hpp"
#include "stabmat/qf_expand.hpp"
#include "stabmat/reduction.hpp"
#include "stabmat/testing.hpp"

using namespace stabmat;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- criterion 1: golden examples -----------------------------------------

void criterion_1() {
    const auto t0 = Clock::now();

    QuadraticFormDesc ex1;
    ex1.n = 1;
    ex1.k = 1;
    ex1.v = {1};
    ex1.d = 1;
    ex1.J = {0};
    ex1.gamma = {1.0 / std::sqrt(2.0), 0.0};
    const DenseState psi1 = expand(ex1);
    const double r = 1.0 / std::sqrt(2.0);
    bool ok = std::abs(psi1.amps[0] - Amplitude{r, 0.0}) <= 1e-15 &&
              std::abs(psi1.amps[1] - Amplitude{0.0, r}) <= 1e-15;

    QuadraticFormDesc ex2;
    ex2.n = 2;
    ex2.k = 2;
    ex2.v = {0b01, 0b10};
    ex2.d = 0;
    ex2.J = {0b10, 0b00};
    ex2.gamma = {0.5, 0.0};
    const DenseState psi2 = expand(ex2);
    ok = ok && psi2.amps[0] == Amplitude{0.5, 0.0} && psi2.amps[1] == Amplitude{0.5, 0.0} &&
         psi2.amps[2] == Amplitude{0.5, 0.0} && psi2.amps[3] == Amplitude{-0.5, 0.0};

    const std::vector<PhasePoint> points = expand_exact(ex2);
    const std::uint8_t want_q[4] = {0, 0, 2, 0};
    const BitWord want_x[4] = {0b00, 0b01, 0b11, 0b10};
    for (int i = 0; i < 4; ++i) {
        ok = ok && points[i].x == want_x[i] && points[i].q == want_q[i];
    }

    const double dt = seconds_since(t0);
    ok = ok && dt < 1e-3;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "golden examples, exact phase stream (0,0,2,0), %.3g ms", dt * 1e3);
    report(1, ok, detail);
}

// --- criterion 2: oracle equivalence --------------------------------------

void criterion_2() {
    const auto t0 = Clock::now();
    testing::Rng rng(1001);
    int mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const int k = static_cast<int>(rng() % (n + 1));
        const QuadraticFormDesc desc = testing::random_qf(n, k, rng);
        const DenseState fast = expand(desc);
        const DenseState naive = expand_naive(desc);
        if (fast.amps != naive.amps) {
            ++mismatches;
        }
    }
    const double dt = seconds_since(t0);
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "500 random descriptions, %d exact mismatches, %.2f s", mismatches, dt);
    report(2, mismatches == 0 && dt < 10.0, detail);
}

// --- criterion 3: walk invariants -----------------------------------------

void criterion_3() {
    testing::Rng rng(1002);
    int violations = 0;
    int instances = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int k = static_cast<int>(rng() % (n + 1));
        const QuadraticFormDesc desc = testing::random_qf(n, k, rng);
        const InteractionData id = build_interaction(desc);
        const std::vector<GrayWalkState> trace = expand_trace(desc);
        ++instances;
        for (std::size_t m = 0; m < trace.size(); ++m) {
            BitWord p = 0;
            for (int t = 0; t < k; ++t) {
                if ((trace[m].y >> t) & 1) {
                    p ^= id.cols[t];
                }
            }
            if (trace[m].p != p || trace[m].q != phase_eval(id, trace[m].y)) {
                ++violations;
            }
            if (m > 0) {
                const GrayWalkState& prev = trace[m - 1];
                const int t = std::countr_zero(m);
                const unsigned inc = (prev.y >> t) & 1 ? 4u - id.a[t] : id.a[t];
                if (trace[m].q != ((prev.q + inc + 2u * ((prev.p >> t) & 1)) & 3u)) {
                    ++violations;
                }
            }
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "%d instances, %d parity/increment violations", instances, violations);
    report(3, violations == 0 && instances >= 100, detail);
}

// --- criterion 4: check-matrix pipeline -----------------------------------

void criterion_4() {
    testing::Rng rng(1003);
    double worst_residual = 0.0;
    double worst_norm = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const CheckMatrix cm = testing::random_check(n, rng);
        const DenseState psi = expand(check_to_qf(cm));
        worst_residual = std::max(worst_residual, stabilizer_eigencheck(cm, psi));
        double norm = 0.0;
        for (const Amplitude& a : psi.amps) {
            norm += std::norm(a);
        }
        worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "200 check matrices, max eigencheck residual %.2e, max norm error %.2e",
                  worst_residual, worst_norm);
    report(4, worst_residual <= 1e-12 && worst_norm <= 1e-12, detail);
}

// --- criterion 5: Pauli application ---------------------------------------

void criterion_5() {
    testing::Rng rng(1004);
    int mismatches = 0;
    int involution_failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const DenseState psi = testing::random_state(n, rng);
        const PauliOp p = testing::random_pauli(n, rng);
        const DenseState fast = apply_pauli(psi, p);
        if (fast.amps != apply_pauli_naive(psi, p).amps) {
            ++mismatches;
        }
        if (apply_pauli(fast, p).amps != psi.amps) {
            ++involution_failures;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "500 pairs, %d oracle mismatches, %d involution failures", mismatches,
                  involution_failures);
    report(5, mismatches == 0 && involution_failures == 0, detail);
}

// --- criterion 6: Clifford expansion --------------------------------------

void criterion_6() {
    testing::Rng rng(1005);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const CliffordTableau tab = testing::random_tableau(n, rng);
        worst = std::max(worst, conjugation_oracle(expand_tableau(tab), tab));
    }

    double gate_err = 0.0;
    const double r = 1.0 / std::sqrt(2.0);
    {
        CliffordTableau h;
        h.n = 1;
        h.U = {PauliOp{1, 0, 1, 0}};
        h.V = {PauliOp{1, 0, 0, 1}};
        const DenseMatrix m = expand_tableau(h);
        const Amplitude want[4] = {{r, 0}, {r, 0}, {r, 0}, {-r, 0}};
        for (int i = 0; i < 4; ++i) {
            gate_err = std::max(gate_err, std::abs(m.entries[i] - want[i]));
        }
    }
    {
        CliffordTableau s;
        s.n = 1;
        s.U = {PauliOp{1, 0, 0, 1}};
        s.V = {PauliOp{1, 1, 1, 1}};
        const DenseMatrix m = expand_tableau(s);
        const Amplitude want[4] = {{1, 0}, {0, 0}, {0, 0}, {0, 1}};
        for (int i = 0; i < 4; ++i) {
            gate_err = std::max(gate_err, std::abs(m.entries[i] - want[i]));
        }
    }
    {
        CliffordTableau cnot;
        cnot.n = 2;
        cnot.U = {PauliOp{2, 0, 0, 0b01}, PauliOp{2, 0, 0, 0b11}};
        cnot.V = {PauliOp{2, 0, 0b11, 0}, PauliOp{2, 0, 0b10, 0}};
        const DenseMatrix m = expand_tableau(cnot);
        const std::size_t image[4] = {0, 3, 2, 1};
        for (std::size_t col = 0; col < 4; ++col) {
            for (std::size_t row = 0; row < 4; ++row) {
                const Amplitude want =
                    row == image[col] ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
                gate_err = std::max(gate_err, std::abs(m.at(row, col) - want));
            }
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "100 tableaux, max oracle residual %.2e; H/S/CNOT max entry error %.2e", worst,
                  gate_err);
    report(6, worst <= 1e-12 && gate_err <= 1e-15, detail);
}

// --- criteria 7 and 8: scaling measurements -------------------------------

double time_min(int reps, const std::function<void()>& body) {
    double best = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        body();
        const double dt = seconds_since(t0);
        best = r == 0 ? dt : std::min(best, dt);
    }
    return best;
}

void criterion_7() {
    const auto t0 = Clock::now();
    testing::Rng rng(1006);
    double per_elem_18 = 0.0;
    double worst_ratio = 0.0;
    std::string curve;
    for (int n = 18; n <= 24; n += 2) {
        const QuadraticFormDesc desc = testing::random_qf(n, n, rng);
        std::vector<Amplitude> out(std::size_t{1} << n);
        const double best = time_min(3, [&] { expand_into(desc, out); });
        const double per_elem = best / static_cast<double>(out.size()) * 1e9;
        if (n == 18) {
            per_elem_18 = per_elem;
        }
        worst_ratio = std::max(worst_ratio, per_elem / per_elem_18);
        char point[48];
        std::snprintf(point, sizeof point, " n=%d:%.2fns", n, per_elem);
        curve += point;
    }

    const QuadraticFormDesc d18 = testing::random_qf(18, 18, rng);
    std::vector<Amplitude> out18(std::size_t{1} << 18);
    const double naive_per_elem =
        time_min(3, [&] { expand_naive_into(d18, out18); }) / static_cast<double>(out18.size()) *
        1e9;
    const double naive_factor = naive_per_elem / per_elem_18;

    const double dt = seconds_since(t0);
    char detail[256];
    std::snprintf(detail, sizeof detail,
                  "per-element%s, growth ratio %.2f (<= 1.5), naive/fast at n=18 %.1fx (>= 3), "
                  "%.0f s",
                  curve.c_str(), worst_ratio, naive_factor, dt);
    report(7, worst_ratio <= 1.5 && naive_factor >= 3.0 && dt < 120.0, detail);
}

void criterion_8() {
    const auto t0 = Clock::now();
    testing::Rng rng(1007);
    std::vector<double> totals;
    std::string curve;
    for (int n = 9; n <= 12; ++n) {
        const CliffordTableau tab = testing::random_tableau(n, rng);
        const DenseState c0 = first_column(tab);
        std::vector<Amplitude> out(std::size_t{1} << (2 * n));
        const double best = time_min(3, [&] { tableau_to_matrix_into(tab, c0, out); });
        totals.push_back(best);
        char point[48];
        std::snprintf(point, sizeof point, " n=%d:%.3fs", n, best);
        curve += point;
    }
    bool ok = true;
    std::string ratios;
    for (std::size_t i = 1; i < totals.size(); ++i) {
        const double ratio = totals[i] / totals[i - 1];
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.2f", ratio);
        ratios += buf;
        ok = ok && ratio >= 3.0 && ratio <= 6.0;
    }
    const double dt = seconds_since(t0);
    char detail[256];
    std::snprintf(detail, sizeof detail, "total time%s, per-n growth%s (within [3,6]), %.0f s",
                  curve.c_str(), ratios.c_str(), dt);
    report(8, ok && dt < 120.0, detail);
}

// --- criterion 9: format round trips --------------------------------------

void criterion_9() {
    const std::filesystem::path dir = STABMAT_FIXTURES_DIR;
    bool ok = true;
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        const std::string text = slurp(entry.path());
        ++files;
        try {
            if (entry.path().extension() == ".qf") {
                const QuadraticFormDesc desc = parse_qf(text);
                ok = ok && parse_qf(serialize_qf(desc)) == desc;
            } else if (entry.path().extension() == ".chk") {
                const CheckMatrix cm = parse_check(text);
                ok = ok && serialize_check(cm) == text && parse_check(serialize_check(cm)) == cm;
            } else if (entry.path().extension() == ".tab") {
                const CliffordTableau tab = parse_tableau(text);
                ok = ok && serialize_tableau(tab) == text &&
                     parse_tableau(serialize_tableau(tab)) == tab;
            } else if (entry.path().extension() == ".state") {
                const DenseValue value = read_dense(text);
                const DenseState& psi = std::get<DenseState>(value);
                const std::string bin = write_dense(psi, DenseFormat::binary);
                ok = ok && std::get<DenseState>(read_dense(bin)).amps == psi.amps;
                ok = ok && std::get<DenseState>(read_dense(write_dense(psi, DenseFormat::text)))
                               .amps == psi.amps;
            } else {
                --files;
            }
        } catch (const Error&) {
            ok = false;
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d fixture files round-tripped, binary bit-exact",
                  files);
    report(9, ok && files >= 8, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
