// Copyright 2026 The shorsim Authors
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

#pragma once

#include <cstdint>
#include <string>

namespace shorsim {

/// A Pauli string with an overall ±1 sign, e.g. "-ZZIIIIIII". Letter i acts
/// on qubit i. Products that would carry a ±i phase (single-qubit X·Z etc.)
/// are rejected; the Z- and X-type strings used by the codes in this library
/// always multiply to real signs.
struct SignedPauli {
    int sign = +1;        // +1 or -1
    std::string letters;  // one of I, X, Y, Z per qubit

    int n_qubits() const { return static_cast<int>(letters.size()); }

    /// Count of non-identity letters.
    int weight() const;

    bool is_identity() const { return weight() == 0; }

    /// Bit i set iff letter i is X or Y (the bit-flip part).
    std::uint32_t x_mask() const;
    /// Bit i set iff letter i is Z or Y (the phase-flip part).
    std::uint32_t z_mask() const;

    bool commutes_with(const SignedPauli& other) const;

    /// Identity on n qubits.
    static SignedPauli identity(int n);
    /// Z on every qubit in `mask`, identity elsewhere.
    static SignedPauli z_string(int n, std::uint32_t mask, int sign = +1);
    /// X on every qubit in `mask`, identity elsewhere.
    static SignedPauli x_string(int n, std::uint32_t mask, int sign = +1);
};

/// Group product a·b. Throws std::invalid_argument if the product carries an
/// imaginary phase.
SignedPauli multiply(const SignedPauli& a, const SignedPauli& b);

/// "+ZZI" style rendering.
std::string to_string(const SignedPauli& p);

/// Inverse of to_string; accepts an optional leading '+'/'-'.
SignedPauli parse_pauli(const std::string& text);

}  // namespace shorsim
