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
#include <unordered_map>
#include <vector>

#include "shorsim/pauli.hpp"
#include "shorsim/state_vector.hpp"

namespace shorsim {

/// Ordered list of ±1 stabilizer-generator outcomes, in generator-list order.
struct Syndrome {
    std::vector<int> bits;

    bool trivial() const {
        for (int b : bits) {
            if (b != +1) return false;
        }
        return true;
    }
};

enum class ShorVariant { fm, afm, swapped_plus, swapped_minus };
enum class IonMapping { standard, center_0_m2_p2 };

std::string to_string(ShorVariant v);
std::string to_string(IonMapping m);
ShorVariant parse_variant(const std::string& name);
IonMapping parse_mapping(const std::string& name);

/// A stabilizer code with signed generators, codewords, logical operators,
/// and an ion-position mapping.
///
/// Conventions:
///  - codeword_one = logical_z * codeword_zero;
///  - codeword_zero is a +1 eigenstate of logical_x;
///  - logical_z is the Z-type logical operator (the one generated by physical
///    Z errors), logical_x the X-type one;
///  - the syndrome bit order is the generator list order as constructed.
///
/// For the GHZ-row codes, `rows` lists the qubits of each row (row-major)
/// and `row_patterns` the computational-basis pattern of each row's GHZ
/// state ("000" for FM rows, "010" for AFM rows). The swapped-basis variants
/// keep `rows` but have no computational-basis pattern.
struct CodeSpec {
    std::string name;
    int n_qubits = 0;
    std::vector<SignedPauli> generators;
    SignedPauli logical_z;
    SignedPauli logical_x;
    StateVector codeword_zero;
    StateVector codeword_one;
    std::vector<int> positions;
    std::vector<std::vector<int>> rows;
    std::vector<std::string> row_patterns;

    /// Min-weight Z-error lookup: syndrome key (bit k set iff generator k
    /// reads -1) -> Z-error support mask.
    std::unordered_map<std::uint32_t, std::uint32_t> z_decode;

    std::uint32_t syndrome_key(const Syndrome& s) const;
};

/// n-bit repetition code in the X basis: generators X_i X_{i+1}, codewords
/// |+...+⟩ and |-...-⟩, logical Z = Z^n. The min-weight decoder is only a
/// majority vote for odd n; even n is accepted for state preparation and
/// detection, with weight ties broken toward the error not containing
/// qubit 0.
CodeSpec build_repetition_code(int n);

/// Distance-n Shor-code variant on n^2 qubits (n in [2, 4]; state-vector
/// codewords make larger n impractical here).
///
/// fm/afm: rows are GHZ states with Z_i Z_{i+1} row generators whose signs
/// match the row pattern (all + for "00..0", all - for "0101.."), plus
/// weight-2n X generators over adjacent row pairs.
///
/// swapped_plus/swapped_minus: stabilizer bases interchanged; X_i X_{i+1}
/// row generators plus weight-2n Z generators over adjacent row pairs, all
/// positive or all negative.
///
/// The standard mapping places distance-3 rows at chain positions
/// {-6,-5,-4}, {-2,0,2}, {4,5,6}; center_0_m2_p2 (n=3 only) remaps the
/// center row to {0,-2,2}.
CodeSpec build_shor_code(int n, ShorVariant variant, IonMapping mapping = IonMapping::standard);

struct SyndromeOutcome {
    Syndrome syndrome;
    double probability;
    StateVector post_state;  // normalized
};

/// Exhaustively enumerates all stabilizer measurement outcomes by sequential
/// projection. Zero-probability branches are omitted; probabilities sum to 1.
std::vector<SyndromeOutcome> measure_syndrome(const StateVector& s, const CodeSpec& code);

/// The lower-weight Z-type error consistent with the syndrome, as a signed
/// Pauli correction. Throws if the syndrome is inconsistent with any Z error.
SignedPauli decode_min_weight(const CodeSpec& code, const Syndrome& s);

}  // namespace shorsim
