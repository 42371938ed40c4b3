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

// End-to-end runs of the installed binary against the fixture files.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "stabmat/io.hpp"

using namespace stabmat;

namespace {

const std::string kCli = STABMAT_CLI_PATH;
const std::string kFixtures = STABMAT_FIXTURES_DIR;

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("stabmat_cli_test_" + name);
}

int run(const std::string& args) {
    const int status = std::system((kCli + " " + args + " 2>/dev/null >/dev/null").c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

DenseState read_state(const std::filesystem::path& path) {
    const DenseValue value = read_dense(slurp(path));
    const DenseState* psi = std::get_if<DenseState>(&value);
    REQUIRE(psi != nullptr);
    return *psi;
}

}  // namespace

TEST_CASE("qf2vec expands the golden file, naive output byte-identical") {
    const auto fast = temp_path("ex1_fast.bin");
    const auto naive = temp_path("ex1_naive.bin");
    CHECK(run("qf2vec --input " + kFixtures + "/example1.qf --output " + fast.string()) == 0);
    CHECK(run("qf2vec --input " + kFixtures + "/example1.qf --output " + naive.string() +
              " --naive") == 0);
    CHECK(slurp(fast) == slurp(naive));

    const DenseState psi = read_state(fast);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi.amps[0] - Amplitude{r, 0.0}) <= 1e-15);
    CHECK(std::abs(psi.amps[1] - Amplitude{0.0, r}) <= 1e-15);
}

TEST_CASE("check2vec on the Y check file, text format") {
    const auto out = temp_path("y.txt");
    CHECK(run("check2vec --input " + kFixtures + "/y.chk --output " + out.string() +
              " --format text") == 0);
    const DenseState psi = read_state(out);
    CHECK(psi.n == 1);
    CHECK(std::abs(psi.amps[1].imag() - 1.0 / std::sqrt(2.0)) <= 1e-15);
}

TEST_CASE("tableau2mat on the identity tableau") {
    const auto out = temp_path("id.bin");
    CHECK(run("tableau2mat --input " + kFixtures + "/identity2.tab --output " + out.string()) == 0);
    const DenseValue value = read_dense(slurp(out));
    const DenseMatrix* m = std::get_if<DenseMatrix>(&value);
    REQUIRE(m != nullptr);
    for (std::size_t col = 0; col < 4; ++col) {
        for (std::size_t row = 0; row < 4; ++row) {
            CHECK(m->at(row, col) == (row == col ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0}));
        }
    }
}

TEST_CASE("pauli-apply flips a basis state") {
    const auto out = temp_path("e1.txt");
    CHECK(run("pauli-apply --state " + kFixtures + "/e0.state --pauli +X --output " +
              out.string() + " --format text") == 0);
    const DenseState psi = read_state(out);
    CHECK(psi.amps[0] == Amplitude{0.0, 0.0});
    CHECK(psi.amps[1] == Amplitude{1.0, 0.0});
}

TEST_CASE("verify passes on consistent fixtures") {
    CHECK(run("verify --input " + kFixtures + "/example1.qf --kind qf") == 0);
    CHECK(run("verify --input " + kFixtures + "/cluster.chk --kind check") == 0);
    CHECK(run("verify --input " + kFixtures + "/cnot.tab --kind tableau") == 0);
}

TEST_CASE("exit codes: parse, validation, resource") {
    const auto out = temp_path("never.bin");

    const auto bad_syntax = temp_path("bad_syntax.qf");
    spit(bad_syntax, "n=1\nk=0\nh=2\nd=\ngamma=auto\n");
    CHECK(run("qf2vec --input " + bad_syntax.string() + " --output " + out.string()) == 1);

    const auto bad_valid = temp_path("bad_valid.chk");
    spit(bad_valid, "+XI\n+ZI\n");
    CHECK(run("check2vec --input " + bad_valid.string() + " --output " + out.string()) == 2);

    const auto huge = temp_path("huge.qf");
    spit(huge, "n=40\nk=0\nh=0000000000000000000000000000000000000000\nd=\ngamma=auto\n");
    CHECK(run("qf2vec --input " + huge.string() + " --output " + out.string()) == 3);
}

TEST_CASE("STABMAT_MAX_N raises and lowers the cap") {
    const auto small = temp_path("small.qf");
    spit(small, "n=4\nk=0\nh=0000\nd=\ngamma=auto\n");
    const auto out = temp_path("small.bin");
    const std::string cmd = "STABMAT_MAX_N=3 " + kCli + " qf2vec --input " + small.string() +
                            " --output " + out.string() + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("bench emits the CSV schema deterministically") {
    const auto csv1 = temp_path("bench1.csv");
    const auto csv2 = temp_path("bench2.csv");
    CHECK(run("bench --task qf --nmin 4 --nmax 6 --reps 2 --seed 7 --csv " + csv1.string()) == 0);
    CHECK(run("bench --task qf --nmin 4 --nmax 6 --reps 2 --seed 7 --csv " + csv2.string()) == 0);
    const std::string text = slurp(csv1);
    CHECK(text.rfind("task,n,k,reps,total_s,per_element_ns\n", 0) == 0);
    CHECK(text.find("qf,4,4,2,") != std::string::npos);
    CHECK(text.find("qf,6,6,2,") != std::string::npos);
    // same instance both runs; only timings may differ
    std::istringstream a(text), b(slurp(csv2));
    std::string la, lb;
    int lines = 0;
    const auto head = [](const std::string& line) {
        // task,n,k,reps — everything before the timing columns
        std::size_t pos = 0;
        for (int commas = 0; commas < 4 && pos != std::string::npos; ++commas) {
            pos = line.find(',', pos + 1);
        }
        return line.substr(0, pos);
    };
    while (std::getline(a, la) && std::getline(b, lb)) {
        CHECK(head(la) == head(lb));
        ++lines;
    }
    CHECK(lines == 4);
}
