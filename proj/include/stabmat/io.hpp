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

// Text and binary formats; see docs/FORMATS.md for the exact grammar.
// Bitstrings and Pauli letter strings in files put coordinate 1 leftmost;
// parsing converts to the internal LSB-first words.

#ifndef STABMAT_IO_HPP
#define STABMAT_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "stabmat/model.hpp"

namespace stabmat {

QuadraticFormDesc parse_qf(std::string_view text);
std::string serialize_qf(const QuadraticFormDesc& desc);

CheckMatrix parse_check(std::string_view text);
std::string serialize_check(const CheckMatrix& cm);

CliffordTableau parse_tableau(std::string_view text);
std::string serialize_tableau(const CliffordTableau& tab);

/// One signed Pauli string such as "+ZZ", "-XY", "+iX", "-iZY". The leading
/// phase token is one of {+, -, +i, -i}; each letter Y contributes a further
/// factor i to omega of the X(w)Z(u) form.
PauliOp parse_pauli(std::string_view text);
std::string serialize_pauli(const PauliOp& p);

enum class DenseFormat { text, binary };

/// Text: one "index re im" line per state entry ("col row re im" for
/// matrices), round-trip-exact decimals. Binary: 16-byte header (magic
/// "STBM", version, kind, n) then little-endian double pairs in index order
/// (matrices column-major).
std::string write_dense(const DenseState& psi, DenseFormat fmt);
std::string write_dense(const DenseMatrix& m, DenseFormat fmt);

using DenseValue = std::variant<DenseState, DenseMatrix>;

/// Reads either format back (binary is detected by the magic).
DenseValue read_dense(std::string_view bytes);

}  // namespace stabmat

#endif
