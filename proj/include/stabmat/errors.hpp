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

#ifndef STABMAT_ERRORS_HPP
#define STABMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stabmat {

enum class Errc {
    // input text problems
    syntax,
    bad_phase_token,
    length_mismatch,
    // description invariant violations
    shape_mismatch,
    dependent_basis,
    zero_gamma,
    non_commuting_rows,
    dependent_rows,
    not_hermitian,
    bad_commutation,
    dimension_mismatch,
    contradictory_signs,
    // resource guardrails
    too_large,
    resource,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Process exit code for an error category: 1 parse, 2 validation, 3 resource.
inline int exit_code_for(Errc c) noexcept {
    switch (c) {
        case Errc::syntax:
        case Errc::bad_phase_token:
        case Errc::length_mismatch:
            return 1;
        case Errc::too_large:
        case Errc::resource:
            return 3;
        default:
            return 2;
    }
}

}  // namespace stabmat

#endif
