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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabmat/clifford.hpp"
#include "stabmat/io.hpp"
#include "stabmat/pauli.hpp"
#include "stabmat/qf_expand.hpp"
#include "stabmat/reduction.hpp"
#include "stabmat/testing.hpp"

namespace {

using namespace stabmat;

constexpr double kVerifyTolerance = 1e-12;

int state_cap() {
    if (const char* env = std::getenv("STABMAT_MAX_N")) {
        const int v = std::atoi(env);
        if (v >= 1 && v <= kMaxCoords) {
            return v;
        }
    }
    return kDefaultMaxStateQubits;
}

int matrix_cap() {
    if (const char* env = std::getenv("STABMAT_MAX_N")) {
        const int v = std::atoi(env);
        if (v >= 1 && v <= kMaxCoords / 2) {
            return v;
        }
    }
    return kDefaultMaxMatrixQubits;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::resource, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
        throw Error(Errc::resource, "cannot write " + path);
    }
}

DenseFormat parse_format(const std::string& name) {
    if (name == "text") {
        return DenseFormat::text;
    }
    if (name == "bin" || name == "binary") {
        return DenseFormat::binary;
    }
    throw CLI::ValidationError("--format", "expected text or bin");
}

int cmd_qf2vec(const std::string& input, const std::string& output, const std::string& format,
               bool naive) {
    const QuadraticFormDesc desc = parse_qf(read_file(input));
    const DenseState psi =
        naive ? expand_naive(desc, state_cap()) : expand(desc, ExpandMode::fast, state_cap());
    write_file(output, write_dense(psi, parse_format(format)));
    return 0;
}

int cmd_check2vec(const std::string& input, const std::string& output,
                  const std::string& format) {
    const CheckMatrix cm = parse_check(read_file(input));
    const DenseState psi = expand(check_to_qf(cm), ExpandMode::fast, state_cap());
    write_file(output, write_dense(psi, parse_format(format)));
    return 0;
}

int cmd_tableau2mat(const std::string& input, const std::string& output,
                    const std::string& format) {
    const CliffordTableau tab = parse_tableau(read_file(input));
    const DenseMatrix m = expand_tableau(tab, matrix_cap());
    write_file(output, write_dense(m, parse_format(format)));
    return 0;
}

int cmd_pauli_apply(const std::string& state_path, const std::string& pauli,
                    const std::string& output, const std::string& format) {
    const DenseValue value = read_dense(read_file(state_path));
    const DenseState* psi = std::get_if<DenseState>(&value);
    if (psi == nullptr) {
        throw Error(Errc::shape_mismatch, "--state expects a state file, not a matrix");
    }
    const PauliOp p = parse_pauli(pauli);
    const DenseState phi = apply_pauli(*psi, p);
    write_file(output, write_dense(phi, parse_format(format)));
    return 0;
}

int cmd_verify(const std::string& input, const std::string& kind) {
    double residual = 0.0;
    const std::string text = read_file(input);
    if (kind == "qf") {
        const QuadraticFormDesc desc = parse_qf(text);
        const DenseState fast = expand(desc, ExpandMode::fast, state_cap());
        const DenseState slow = expand_naive(desc, state_cap());
        for (std::size_t i = 0; i < fast.amps.size(); ++i) {
            residual = std::max(residual, std::abs(fast.amps[i] - slow.amps[i]));
        }
    } else if (kind == "check") {
        const CheckMatrix cm = parse_check(text);
        const DenseState psi = expand(check_to_qf(cm), ExpandMode::fast, state_cap());
        residual = stabilizer_eigencheck(cm, psi);
    } else if (kind == "tableau") {
        const CliffordTableau tab = parse_tableau(text);
        const DenseMatrix m = expand_tableau(tab, matrix_cap());
        residual = conjugation_oracle(m, tab, matrix_cap());
    } else {
        throw CLI::ValidationError("--kind", "expected qf, check or tableau");
    }
    std::printf("%.17g\n", residual);
    return residual <= kVerifyTolerance ? 0 : 4;
}

int cmd_bench(const std::string& task, int nmin, int nmax, int reps, std::uint64_t seed,
              const std::string& csv_path) {
    if (nmin < 1 || nmax < nmin || reps < 1) {
        throw CLI::ValidationError("--nmin/--nmax/--reps", "bad benchmark range");
    }
    const bool matrix_task = task == "tableau";
    const int cap = matrix_task ? matrix_cap() : state_cap();
    if (nmax > cap) {
        throw Error(Errc::too_large, "benchmark range exceeds the size cap n=" +
                                         std::to_string(cap));
    }
    if (task != "qf" && task != "qf-naive" && task != "pauli" && task != "tableau") {
        throw CLI::ValidationError("--task", "expected qf, qf-naive, pauli or tableau");
    }

    std::string csv = "task,n,k,reps,total_s,per_element_ns\n";
    testing::Rng rng(seed);
    using Clock = std::chrono::steady_clock;
    for (int n = nmin; n <= nmax; ++n) {
        double best = 0.0;
        int k = n;
        std::size_t elements = std::size_t{1} << n;
        if (task == "qf" || task == "qf-naive") {
            const QuadraticFormDesc desc = testing::random_qf(n, n, rng);
            std::vector<Amplitude> out(elements);
            for (int r = 0; r < reps; ++r) {
                const auto t0 = Clock::now();
                if (task == "qf") {
                    expand_into(desc, out, ExpandMode::fast);
                } else {
                    expand_naive_into(desc, out);
                }
                const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
                best = r == 0 ? dt : std::min(best, dt);
            }
        } else if (task == "pauli") {
            const DenseState psi = testing::random_state(n, rng);
            const PauliOp p = testing::random_pauli(n, rng);
            std::vector<Amplitude> out(elements);
            for (int r = 0; r < reps; ++r) {
                const auto t0 = Clock::now();
                apply_pauli_into(psi.amps, out, p);
                const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
                best = r == 0 ? dt : std::min(best, dt);
            }
        } else {
            const CliffordTableau tab = testing::random_tableau(n, rng);
            const DenseState c0 = first_column(tab);
            elements = std::size_t{1} << (2 * n);
            std::vector<Amplitude> out(elements);
            for (int r = 0; r < reps; ++r) {
                const auto t0 = Clock::now();
                tableau_to_matrix_into(tab, c0, out);
                const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
                best = r == 0 ? dt : std::min(best, dt);
            }
        }
        char line[160];
        std::snprintf(line, sizeof line, "%s,%d,%d,%d,%.9g,%.6g\n", task.c_str(), n, k, reps,
                      best, best / static_cast<double>(elements) * 1e9);
        csv += line;
    }
    if (csv_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_file(csv_path, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dense materialization of stabilizer states and Clifford matrices"};
    app.require_subcommand(1);

    std::string input, output, state_path, pauli, kind, csv_path;
    std::string format = "bin";
    std::string task = "qf";
    bool naive = false;
    int nmin = 4, nmax = 10, reps = 5;
    std::uint64_t seed = 1;

    CLI::App* qf2vec = app.add_subcommand("qf2vec", "Expand a quadratic-form file to a vector");
    qf2vec->add_option("--input", input)->required();
    qf2vec->add_option("--output", output)->required();
    qf2vec->add_option("--format", format, "text|bin");
    qf2vec->add_flag("--naive", naive, "use the brute-force reference expansion");

    CLI::App* check2vec = app.add_subcommand("check2vec", "Expand a check-matrix file to a vector");
    check2vec->add_option("--input", input)->required();
    check2vec->add_option("--output", output)->required();
    check2vec->add_option("--format", format, "text|bin");

    CLI::App* tableau2mat = app.add_subcommand("tableau2mat", "Expand a tableau file to a matrix");
    tableau2mat->add_option("--input", input)->required();
    tableau2mat->add_option("--output", output)->required();
    tableau2mat->add_option("--format", format, "text|bin");

    CLI::App* pauli_apply = app.add_subcommand("pauli-apply", "Apply a signed Pauli string to a state file");
    pauli_apply->add_option("--state", state_path)->required();
    pauli_apply->add_option("--pauli", pauli)->required();
    pauli_apply->add_option("--output", output)->required();
    pauli_apply->add_option("--format", format, "text|bin");

    CLI::App* verify = app.add_subcommand("verify", "Expand and cross-check against an oracle");
    verify->add_option("--input", input)->required();
    verify->add_option("--kind", kind, "qf|check|tableau")->required();

    CLI::App* bench = app.add_subcommand("bench", "Time expansions over a range of n");
    bench->add_option("--task", task, "qf|qf-naive|pauli|tableau");
    bench->add_option("--nmin", nmin);
    bench->add_option("--nmax", nmax);
    bench->add_option("--reps", reps);
    bench->add_option("--seed", seed);
    bench->add_option("--csv", csv_path, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (qf2vec->parsed()) {
            return cmd_qf2vec(input, output, format, naive);
        }
        if (check2vec->parsed()) {
            return cmd_check2vec(input, output, format);
        }
        if (tableau2mat->parsed()) {
            return cmd_tableau2mat(input, output, format);
        }
        if (pauli_apply->parsed()) {
            return cmd_pauli_apply(state_path, pauli, output, format);
        }
        if (verify->parsed()) {
            return cmd_verify(input, kind);
        }
        if (bench->parsed()) {
            return cmd_bench(task, nmin, nmax, reps, seed, csv_path);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e.code());
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::bad_alloc&) {
        std::fprintf(stderr, "error: out of memory\n");
        return 3;
    }
    return 0;
}
