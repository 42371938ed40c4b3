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

#include "stabmat/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace stabmat {

namespace {

[[noreturn]] void fail(Errc code, int line, const std::string& msg) {
    throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') {
            return true;
        }
        if (c != ' ' && c != '\t') {
            return false;
        }
    }
    return true;
}

/// Walks significant lines of a text, tracking 1-based line numbers.
class LineReader {
  public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next non-blank, non-comment line; empty optional-like flag via found.
    bool next(std::string_view& out, int& line_no) {
        while (pos_ <= text_.size()) {
            if (pos_ == text_.size() && pos_was_consumed_) {
                return false;
            }
            std::size_t eol = text_.find('\n', pos_);
            if (eol == std::string_view::npos) {
                eol = text_.size();
            }
            std::string_view line = text_.substr(pos_, eol - pos_);
            ++line_;
            pos_ = eol + (eol < text_.size() ? 1 : 0);
            if (pos_ >= text_.size()) {
                pos_ = text_.size();
                pos_was_consumed_ = true;
            }
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            if (!is_blank_or_comment(line)) {
                out = line;
                line_no = line_;
                return true;
            }
        }
        return false;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 0;
    bool pos_was_consumed_ = false;
};

/// "key=value" line with an exact expected key.
std::string_view expect_kv(LineReader& reader, std::string_view key, int& line_no) {
    std::string_view line;
    if (!reader.next(line, line_no)) {
        throw Error(Errc::syntax, "unexpected end of input, expected " + std::string(key) + "=...");
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || line.substr(0, eq) != key) {
        fail(Errc::syntax, line_no, "expected " + std::string(key) + "=...");
    }
    return line.substr(eq + 1);
}

void expect_end(LineReader& reader) {
    std::string_view line;
    int line_no = 0;
    if (reader.next(line, line_no)) {
        fail(Errc::syntax, line_no, "trailing garbage");
    }
}

int parse_int(std::string_view value, int line_no) {
    if (value.empty()) {
        fail(Errc::syntax, line_no, "expected an integer");
    }
    int out = 0;
    for (char c : value) {
        if (c < '0' || c > '9' || out > 1000) {
            fail(Errc::syntax, line_no, "expected a small nonnegative integer");
        }
        out = out * 10 + (c - '0');
    }
    return out;
}

/// Bitstring with coordinate 1 leftmost, converted to an LSB-first word.
BitWord parse_bits(std::string_view value, int len, int line_no) {
    if (static_cast<int>(value.size()) != len) {
        fail(Errc::syntax, line_no,
             "expected a bitstring of length " + std::to_string(len));
    }
    BitWord word = 0;
    for (int i = 0; i < len; ++i) {
        if (value[i] == '1') {
            word |= BitWord{1} << i;
        } else if (value[i] != '0') {
            fail(Errc::syntax, line_no, "bitstring may contain only 0 and 1");
        }
    }
    return word;
}

std::string format_bits(BitWord word, int len) {
    std::string out(len, '0');
    for (int i = 0; i < len; ++i) {
        if ((word >> i) & 1) {
            out[i] = '1';
        }
    }
    return out;
}

double parse_double(std::string_view value, int line_no, std::size_t* used = nullptr) {
    const std::string buf(value);
    char* end = nullptr;
    const double out = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str()) {
        fail(Errc::syntax, line_no, "expected a number");
    }
    if (used != nullptr) {
        *used = static_cast<std::size_t>(end - buf.c_str());
    } else if (*end != '\0') {
        fail(Errc::syntax, line_no, "trailing characters after number");
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Amplitude auto_gamma(int k) {
    return {std::ldexp(k % 2 ? 1.0 / std::sqrt(2.0) : 1.0, -(k / 2)), 0.0};
}

struct ParsedPauliLine {
    unsigned prefix_exp = 0;  // i^prefix_exp
    BitWord w = 0;
    BitWord u = 0;
    int len = 0;
};

ParsedPauliLine parse_pauli_line(std::string_view line, int line_no) {
    // strip surrounding blanks
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
        line.remove_prefix(1);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
        line.remove_suffix(1);
    }
    ParsedPauliLine out;
    if (line.empty() || (line[0] != '+' && line[0] != '-')) {
        fail(Errc::bad_phase_token, line_no, "expected a +, -, +i or -i prefix");
    }
    out.prefix_exp = line[0] == '-' ? 2 : 0;
    line.remove_prefix(1);
    if (!line.empty() && line[0] == 'i') {
        out.prefix_exp = (out.prefix_exp + 1) & 3;
        line.remove_prefix(1);
    }
    if (line.empty()) {
        fail(Errc::syntax, line_no, "expected Pauli letters after the phase");
    }
    if (line.size() > static_cast<std::size_t>(kMaxCoords)) {
        fail(Errc::syntax, line_no, "too many qubits for one machine word");
    }
    for (std::size_t j = 0; j < line.size(); ++j) {
        switch (line[j]) {
            case 'I':
                break;
            case 'X':
                out.w |= BitWord{1} << j;
                break;
            case 'Z':
                out.u |= BitWord{1} << j;
                break;
            case 'Y':
                out.w |= BitWord{1} << j;
                out.u |= BitWord{1} << j;
                break;
            default:
                fail(Errc::syntax, line_no,
                     std::string("unknown Pauli letter '") + line[j] + "'");
        }
    }
    out.len = static_cast<int>(line.size());
    return out;
}

std::string format_pauli_letters(BitWord w, BitWord u, int n) {
    std::string out(n, 'I');
    for (int j = 0; j < n; ++j) {
        const int wb = (w >> j) & 1;
        const int ub = (u >> j) & 1;
        out[j] = wb ? (ub ? 'Y' : 'X') : (ub ? 'Z' : 'I');
    }
    return out;
}

void put_u16_le(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>(v >> 8));
}

void put_double_le(std::string& out, double v) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
    }
}

double get_double_le(std::string_view bytes, std::size_t off) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
        bits |= std::uint64_t{static_cast<unsigned char>(bytes[off + i])} << (8 * i);
    }
    return std::bit_cast<double>(bits);
}

constexpr char kMagic[4] = {'S', 'T', 'B', 'M'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kKindState = 0;
constexpr std::uint8_t kKindMatrix = 1;

std::string write_binary(const std::vector<Amplitude>& amps, std::uint8_t kind, int n) {
    std::string out;
    out.reserve(16 + 16 * amps.size());
    out.append(kMagic, 4);
    out.push_back(static_cast<char>(kVersion));
    out.push_back(static_cast<char>(kind));
    put_u16_le(out, static_cast<std::uint16_t>(n));
    out.append(8, '\0');
    for (const Amplitude& a : amps) {
        put_double_le(out, a.real());
        put_double_le(out, a.imag());
    }
    return out;
}

DenseValue read_binary(std::string_view bytes) {
    if (bytes.size() < 16) {
        throw Error(Errc::syntax, "binary input shorter than the 16-byte header");
    }
    const std::uint8_t version = static_cast<unsigned char>(bytes[4]);
    const std::uint8_t kind = static_cast<unsigned char>(bytes[5]);
    if (version != kVersion) {
        throw Error(Errc::syntax, "unsupported binary format version");
    }
    const int n = static_cast<unsigned char>(bytes[6]) |
                  (static_cast<unsigned char>(bytes[7]) << 8);
    if (kind != kKindState && kind != kKindMatrix) {
        throw Error(Errc::syntax, "unknown binary payload kind");
    }
    if (n < 1 || n > kMaxCoords || (kind == kKindMatrix && n > kMaxCoords / 2)) {
        throw Error(Errc::syntax, "binary header qubit count out of range");
    }
    const std::size_t count = std::size_t{1} << (kind == kKindState ? n : 2 * n);
    if (bytes.size() != 16 + 16 * count) {
        throw Error(Errc::syntax, "binary payload length does not match the header");
    }
    std::vector<Amplitude> amps(count);
    for (std::size_t i = 0; i < count; ++i) {
        amps[i] = {get_double_le(bytes, 16 + 16 * i), get_double_le(bytes, 16 + 16 * i + 8)};
    }
    if (kind == kKindState) {
        return DenseState{n, std::move(amps)};
    }
    return DenseMatrix{n, std::move(amps)};
}

std::size_t split_fields(std::string_view line, std::string_view* fields, std::size_t max) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (count == max) {
            return max + 1;  // too many
        }
        fields[count++] = line.substr(start, i - start);
    }
    return count;
}

std::uint64_t parse_index(std::string_view value, int line_no) {
    if (value.empty()) {
        fail(Errc::syntax, line_no, "expected an index");
    }
    std::uint64_t out = 0;
    for (char c : value) {
        if (c < '0' || c > '9' || out > (~std::uint64_t{0}) / 10) {
            fail(Errc::syntax, line_no, "bad index");
        }
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return out;
}

DenseValue read_text_dense(std::string_view text) {
    LineReader reader(text);
    std::string_view line;
    int line_no = 0;
    std::vector<Amplitude> amps;
    bool is_matrix = false;
    bool first = true;
    std::size_t dim = 0;  // matrix dimension, learned from row indices
    while (reader.next(line, line_no)) {
        std::string_view fields[5];
        const std::size_t nf = split_fields(line, fields, 4);
        if (first) {
            if (nf != 3 && nf != 4) {
                fail(Errc::syntax, line_no, "expected 'index re im' or 'col row re im'");
            }
            is_matrix = nf == 4;
            first = false;
        } else if (nf != (is_matrix ? 4u : 3u)) {
            fail(Errc::syntax, line_no, "inconsistent field count");
        }
        if (is_matrix) {
            const std::uint64_t col = parse_index(fields[0], line_no);
            const std::uint64_t row = parse_index(fields[1], line_no);
            // Entries must arrive in column-major order; the first col=1 line
            // fixes the dimension.
            if (dim == 0 && col != 0) {
                dim = amps.size();
            }
            const std::uint64_t expect = dim == 0 ? row : col * dim + row;
            if (expect != amps.size()) {
                fail(Errc::syntax, line_no, "entries out of column-major order");
            }
        } else {
            if (parse_index(fields[0], line_no) != amps.size()) {
                fail(Errc::syntax, line_no, "entries out of order");
            }
        }
        const double re = parse_double(fields[is_matrix ? 2 : 1], line_no);
        const double im = parse_double(fields[is_matrix ? 3 : 2], line_no);
        amps.push_back({re, im});
    }
    if (amps.empty()) {
        throw Error(Errc::syntax, "no dense entries found");
    }
    const int total_bits = std::countr_zero(amps.size());
    if (amps.size() != std::size_t{1} << total_bits) {
        throw Error(Errc::syntax, "entry count is not a power of two");
    }
    if (is_matrix) {
        if (total_bits % 2 != 0) {
            throw Error(Errc::syntax, "matrix entry count is not a power of four");
        }
        return DenseMatrix{total_bits / 2, std::move(amps)};
    }
    return DenseState{total_bits, std::move(amps)};
}

}  // namespace

QuadraticFormDesc parse_qf(std::string_view text) {
    LineReader reader(text);
    int line_no = 0;
    QuadraticFormDesc desc;
    std::string_view head = expect_kv(reader, "n", line_no);
    desc.n = parse_int(head, line_no);
    head = expect_kv(reader, "k", line_no);
    desc.k = parse_int(head, line_no);
    if (desc.n < 1 || desc.n > kMaxCoords || desc.k < 0 || desc.k > desc.n) {
        fail(Errc::shape_mismatch, line_no, "n or k out of range");
    }
    // expect_kv updates line_no, so keep each value before using it
    std::string_view value = expect_kv(reader, "h", line_no);
    desc.h = parse_bits(value, desc.n, line_no);
    desc.v.resize(desc.k);
    for (int t = 0; t < desc.k; ++t) {
        value = expect_kv(reader, "v", line_no);
        desc.v[t] = parse_bits(value, desc.n, line_no);
    }
    value = expect_kv(reader, "d", line_no);
    desc.d = parse_bits(value, desc.k, line_no);
    desc.J.resize(desc.k);
    for (int t = 0; t < desc.k; ++t) {
        value = expect_kv(reader, "J", line_no);
        desc.J[t] = parse_bits(value, desc.k, line_no);
    }
    const std::string_view gamma = expect_kv(reader, "gamma", line_no);
    if (gamma == "auto") {
        desc.gamma = auto_gamma(desc.k);
    } else {
        std::size_t used = 0;
        const double re = parse_double(gamma, line_no, &used);
        std::string_view rest = gamma.substr(used);
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
            rest.remove_prefix(1);
        }
        const double im = parse_double(rest, line_no);
        desc.gamma = {re, im};
    }
    expect_end(reader);
    validate_qf(desc);
    return desc;
}

std::string serialize_qf(const QuadraticFormDesc& desc) {
    std::string out;
    out += "n=" + std::to_string(desc.n) + "\n";
    out += "k=" + std::to_string(desc.k) + "\n";
    out += "h=" + format_bits(desc.h, desc.n) + "\n";
    for (int t = 0; t < desc.k; ++t) {
        out += "v=" + format_bits(desc.v[t], desc.n) + "\n";
    }
    out += "d=" + format_bits(desc.d, desc.k) + "\n";
    for (int t = 0; t < desc.k; ++t) {
        out += "J=" + format_bits(desc.J[t], desc.k) + "\n";
    }
    if (desc.gamma == auto_gamma(desc.k)) {
        out += "gamma=auto\n";
    } else {
        out += "gamma=" + format_double(desc.gamma.real()) + " " +
               format_double(desc.gamma.imag()) + "\n";
    }
    return out;
}

CheckMatrix parse_check(std::string_view text) {
    LineReader reader(text);
    std::string_view line;
    int line_no = 0;
    CheckMatrix cm;
    while (reader.next(line, line_no)) {
        const ParsedPauliLine p = parse_pauli_line(line, line_no);
        if (p.prefix_exp & 1) {
            fail(Errc::bad_phase_token, line_no, "check rows take only + or - signs");
        }
        if (cm.rows.empty()) {
            cm.n = p.len;
        } else if (p.len != cm.n) {
            fail(Errc::length_mismatch, line_no, "rows have different qubit counts");
        }
        cm.rows.push_back(CheckRow{p.w, p.u, p.prefix_exp == 2});
    }
    if (cm.rows.empty()) {
        throw Error(Errc::syntax, "no generator rows found");
    }
    if (static_cast<int>(cm.rows.size()) != cm.n) {
        throw Error(Errc::length_mismatch,
                    "expected exactly n=" + std::to_string(cm.n) + " generator rows, got " +
                        std::to_string(cm.rows.size()));
    }
    validate_check(cm);
    return cm;
}

std::string serialize_check(const CheckMatrix& cm) {
    std::string out;
    for (const CheckRow& row : cm.rows) {
        out += row.sigma ? '-' : '+';
        out += format_pauli_letters(row.w, row.u, cm.n);
        out += '\n';
    }
    return out;
}

CliffordTableau parse_tableau(std::string_view text) {
    LineReader reader(text);
    std::string_view line;
    int line_no = 0;
    std::vector<PauliOp> rows;
    int n = 0;
    while (reader.next(line, line_no)) {
        const ParsedPauliLine p = parse_pauli_line(line, line_no);
        if (rows.empty()) {
            n = p.len;
        } else if (p.len != n) {
            fail(Errc::length_mismatch, line_no, "rows have different qubit counts");
        }
        const unsigned phase = (p.prefix_exp + std::popcount(p.w & p.u)) & 3u;
        rows.push_back(PauliOp{n, static_cast<std::uint8_t>(phase), p.w, p.u});
    }
    if (rows.empty()) {
        throw Error(Errc::syntax, "no tableau rows found");
    }
    if (static_cast<int>(rows.size()) != 2 * n) {
        throw Error(Errc::length_mismatch,
                    "expected 2n=" + std::to_string(2 * n) + " rows (U_1..U_n then V_1..V_n)");
    }
    CliffordTableau tab;
    tab.n = n;
    tab.U.assign(rows.begin(), rows.begin() + n);
    tab.V.assign(rows.begin() + n, rows.end());
    validate_tableau(tab);
    return tab;
}

std::string serialize_tableau(const CliffordTableau& tab) {
    std::string out;
    for (const std::vector<PauliOp>* half : {&tab.U, &tab.V}) {
        for (const PauliOp& p : *half) {
            out += serialize_pauli(p);
            out += '\n';
        }
    }
    return out;
}

PauliOp parse_pauli(std::string_view text) {
    const ParsedPauliLine p = parse_pauli_line(text, 1);
    const unsigned phase = (p.prefix_exp + std::popcount(p.w & p.u)) & 3u;
    return PauliOp{p.len, static_cast<std::uint8_t>(phase), p.w, p.u};
}

std::string serialize_pauli(const PauliOp& p) {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    const unsigned prefix = (p.phase - std::popcount(p.w & p.u)) & 3u;
    return kPrefix[prefix] + format_pauli_letters(p.w, p.u, p.n);
}

std::string write_dense(const DenseState& psi, DenseFormat fmt) {
    if (fmt == DenseFormat::binary) {
        return write_binary(psi.amps, kKindState, psi.n);
    }
    std::string out;
    for (std::size_t x = 0; x < psi.amps.size(); ++x) {
        out += std::to_string(x) + " " + format_double(psi.amps[x].real()) + " " +
               format_double(psi.amps[x].imag()) + "\n";
    }
    return out;
}

std::string write_dense(const DenseMatrix& m, DenseFormat fmt) {
    if (fmt == DenseFormat::binary) {
        return write_binary(m.entries, kKindMatrix, m.n);
    }
    std::string out;
    const std::size_t dim = m.dim();
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t row = 0; row < dim; ++row) {
            const Amplitude& a = m.entries[col * dim + row];
            out += std::to_string(col) + " " + std::to_string(row) + " " +
                   format_double(a.real()) + " " + format_double(a.imag()) + "\n";
        }
    }
    return out;
}

DenseValue read_dense(std::string_view bytes) {
    if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0) {
        return read_binary(bytes);
    }
    return read_text_dense(bytes);
}

}  // namespace stabmat
