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

#include "shorsim/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace shorsim {

namespace {

constexpr double kEigenTol = 1e-10;

// Tensor product; qubits of `low` occupy the low bit positions.
StateVector kron(const StateVector& low, const StateVector& high) {
    StateVector out(low.n_qubits + high.n_qubits);
    for (std::size_t ib = 0; ib < high.amps.size(); ++ib) {
        if (high.amps[ib] == cdouble{0.0, 0.0}) continue;
        for (std::size_t ia = 0; ia < low.amps.size(); ++ia) {
            out.amps[(ib << low.n_qubits) | ia] = low.amps[ia] * high.amps[ib];
        }
    }
    return out;
}

// (|+..+⟩ + parity_sign |-..-⟩)/√2 == uniform superposition over basis
// states of fixed parity.
StateVector hadamard_ghz(int n, int parity) {
    StateVector s(n);
    double amp = std::pow(2.0, -0.5 * (n - 1));
    for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if ((std::popcount(static_cast<std::uint32_t>(b)) & 1) == parity) s.amps[b] = amp;
    }
    return s;
}

std::uint32_t syndrome_key_of_error(std::uint32_t z_support, const std::vector<SignedPauli>& gens) {
    std::uint32_t key = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (std::popcount(z_support & gens[k].x_mask()) & 1) key |= (1u << k);
    }
    return key;
}

void build_z_decode(CodeSpec& code) {
    const std::uint32_t n_errors = 1u << code.n_qubits;
    auto better = [](std::uint32_t a, std::uint32_t b) {
        int wa = std::popcount(a), wb = std::popcount(b);
        if (wa != wb) return wa < wb;
        // Weight ties (even distance only) break toward the error not
        // containing qubit 0, then lowest mask for determinism.
        if ((a & 1u) != (b & 1u)) return (a & 1u) < (b & 1u);
        return a < b;
    };
    for (std::uint32_t e = 0; e < n_errors; ++e) {
        std::uint32_t key = syndrome_key_of_error(e, code.generators);
        auto it = code.z_decode.find(key);
        if (it == code.z_decode.end()) {
            code.z_decode.emplace(key, e);
        } else if (better(e, it->second)) {
            it->second = e;
        }
    }
}

void validate(const CodeSpec& code) {
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
            if (!code.generators[i].commutes_with(code.generators[j])) {
                throw std::logic_error(code.name + ": generators do not commute");
            }
        }
    }
    for (const SignedPauli& g : code.generators) {
        if (!code.logical_z.commutes_with(g) || !code.logical_x.commutes_with(g)) {
            throw std::logic_error(code.name + ": logical operator violates a generator");
        }
        if (expectation(code.codeword_zero, g) < 1.0 - kEigenTol ||
            expectation(code.codeword_one, g) < 1.0 - kEigenTol) {
            throw std::logic_error(code.name + ": codeword is not a +1 eigenstate");
        }
    }
    if (code.logical_z.commutes_with(code.logical_x)) {
        throw std::logic_error(code.name + ": logical Z and X must anticommute");
    }
    if (std::abs(inner_product(code.codeword_zero, code.codeword_one)) > kEigenTol) {
        throw std::logic_error(code.name + ": codewords are not orthogonal");
    }
    std::set<int> distinct(code.positions.begin(), code.positions.end());
    if (code.positions.size() != std::size_t(code.n_qubits) ||
        distinct.size() != code.positions.size()) {
        throw std::logic_error(code.name + ": positions must be distinct, one per qubit");
    }
}

}  // namespace

std::string to_string(ShorVariant v) {
    switch (v) {
        case ShorVariant::fm: return "fm";
        case ShorVariant::afm: return "afm";
        case ShorVariant::swapped_plus: return "swapped_plus";
        case ShorVariant::swapped_minus: return "swapped_minus";
    }
    return "?";
}

std::string to_string(IonMapping m) {
    return m == IonMapping::standard ? "standard" : "center_0_m2_p2";
}

ShorVariant parse_variant(const std::string& name) {
    if (name == "fm") return ShorVariant::fm;
    if (name == "afm") return ShorVariant::afm;
    if (name == "swapped_plus") return ShorVariant::swapped_plus;
    if (name == "swapped_minus") return ShorVariant::swapped_minus;
    throw std::invalid_argument("unknown code variant: " + name);
}

IonMapping parse_mapping(const std::string& name) {
    if (name == "standard") return IonMapping::standard;
    if (name == "center_0_m2_p2") return IonMapping::center_0_m2_p2;
    throw std::invalid_argument("unknown ion mapping: " + name);
}

std::uint32_t CodeSpec::syndrome_key(const Syndrome& s) const {
    if (s.bits.size() != generators.size()) {
        throw std::invalid_argument("syndrome length does not match generator count");
    }
    std::uint32_t key = 0;
    for (std::size_t k = 0; k < s.bits.size(); ++k) {
        if (s.bits[k] == -1) {
            key |= (1u << k);
        } else if (s.bits[k] != +1) {
            throw std::invalid_argument("syndrome bits must be +1 or -1");
        }
    }
    return key;
}

CodeSpec build_repetition_code(int n) {
    if (n < 1) throw std::invalid_argument("repetition code needs n >= 1");
    if (n > 13) throw std::invalid_argument("repetition code limited to n <= 13 qubits");
    CodeSpec code;
    code.name = "repetition_" + std::to_string(n);
    code.n_qubits = n;
    for (int i = 0; i + 1 < n; ++i) {
        code.generators.push_back(SignedPauli::x_string(n, 3u << i));
    }
    std::uint32_t all = (n == 32 ? ~0u : (1u << n) - 1);
    code.logical_z = SignedPauli::z_string(n, all);
    // X^n is a stabilizer product for even n; a single X works there.
    code.logical_x = (n % 2 == 1) ? SignedPauli::x_string(n, all) : SignedPauli::x_string(n, 1u);

    StateVector plus(1);
    plus.amps = {cdouble{0.70710678118654752440, 0}, cdouble{0.70710678118654752440, 0}};
    StateVector cw0 = plus;
    for (int i = 1; i < n; ++i) cw0 = kron(cw0, plus);
    code.codeword_zero = cw0;
    code.codeword_one = apply_pauli(code.logical_z, cw0);

    code.positions.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) code.positions[std::size_t(i)] = i;

    build_z_decode(code);
    validate(code);
    return code;
}

CodeSpec build_shor_code(int n, ShorVariant variant, IonMapping mapping) {
    if (n < 2) throw std::invalid_argument("Shor-code distance must be >= 2");
    if (n > 4) {
        throw std::invalid_argument(
            "state-vector Shor codes supported up to distance 4; use the analytic "
            "channel constructors for larger distances");
    }
    if (mapping == IonMapping::center_0_m2_p2 && n != 3) {
        throw std::invalid_argument("the {0,-2,2} mapping is only defined for distance 3");
    }
    const bool swapped =
        variant == ShorVariant::swapped_plus || variant == ShorVariant::swapped_minus;
    if (swapped && mapping != IonMapping::standard) {
        throw std::invalid_argument("the {0,-2,2} mapping applies to the fm/afm variants");
    }

    CodeSpec code;
    code.name = to_string(variant) + "_shor_" + std::to_string(n);
    if (mapping == IonMapping::center_0_m2_p2) code.name += "_center_0_m2_p2";
    code.n_qubits = n * n;

    std::string row_pattern;
    for (int i = 0; i < n; ++i) {
        row_pattern.push_back(variant == ShorVariant::afm && (i % 2 == 1) ? '1' : '0');
    }

    for (int r = 0; r < n; ++r) {
        std::vector<int> row;
        for (int i = 0; i < n; ++i) row.push_back(r * n + i);
        code.rows.push_back(row);
    }

    if (!swapped) {
        // Weight-2 Z generators along each row, signs matching the pattern.
        for (int r = 0; r < n; ++r) {
            for (int i = 0; i + 1 < n; ++i) {
                int sign = row_pattern[std::size_t(i)] == row_pattern[std::size_t(i + 1)] ? +1 : -1;
                code.generators.push_back(SignedPauli::z_string(code.n_qubits, 3u << (r * n + i), sign));
            }
        }
        // Weight-2n X generators over adjacent row pairs.
        for (int r = 0; r + 1 < n; ++r) {
            std::uint32_t mask = ((1u << (2 * n)) - 1) << (r * n);
            code.generators.push_back(SignedPauli::x_string(code.n_qubits, mask));
        }
        code.row_patterns.assign(std::size_t(n), row_pattern);

        StateVector row_state = make_ghz(n, row_pattern);
        StateVector cw0 = row_state;
        for (int r = 1; r < n; ++r) cw0 = kron(cw0, row_state);
        code.codeword_zero = cw0;

        std::uint32_t col0 = 0, row0 = (1u << n) - 1;
        for (int r = 0; r < n; ++r) col0 |= (1u << (r * n));
        code.logical_z = SignedPauli::z_string(code.n_qubits, col0);
        code.logical_x = SignedPauli::x_string(code.n_qubits, row0);
    } else {
        // Stabilizer bases interchanged: weight-2 X generators along rows,
        // signed weight-2n Z generators over adjacent row pairs.
        for (int r = 0; r < n; ++r) {
            for (int i = 0; i + 1 < n; ++i) {
                code.generators.push_back(SignedPauli::x_string(code.n_qubits, 3u << (r * n + i)));
            }
        }
        int cross_sign = variant == ShorVariant::swapped_plus ? +1 : -1;
        for (int r = 0; r + 1 < n; ++r) {
            std::uint32_t mask = ((1u << (2 * n)) - 1) << (r * n);
            code.generators.push_back(SignedPauli::z_string(code.n_qubits, mask, cross_sign));
        }

        // Row r carries parity 0 for the all-positive variant; the negated
        // variant alternates parities so every -Z...Z generator reads +1.
        StateVector cw0 = hadamard_ghz(n, 0);
        for (int r = 1; r < n; ++r) {
            int parity = (variant == ShorVariant::swapped_minus) ? (r % 2) : 0;
            cw0 = kron(cw0, hadamard_ghz(n, parity));
        }
        code.codeword_zero = cw0;

        std::uint32_t col0 = 0, row0 = (1u << n) - 1;
        for (int r = 0; r < n; ++r) col0 |= (1u << (r * n));
        code.logical_z = SignedPauli::z_string(code.n_qubits, row0);
        code.logical_x = SignedPauli::x_string(code.n_qubits, col0);
    }

    // codeword_one is the image of codeword_zero under whichever logical
    // operator swaps the codewords: logical_z for the GHZ-row codes,
    // logical_x for the swapped-basis codes (whose logical_z is diagonal).
    code.codeword_one =
        apply_pauli(swapped ? code.logical_x : code.logical_z, code.codeword_zero);

    // Ion chain positions (distance 3 per the hardware layout; other sizes
    // get sequential positions).
    if (n == 3) {
        code.positions = {-6, -5, -4, -2, 0, 2, 4, 5, 6};
        if (mapping == IonMapping::center_0_m2_p2) {
            code.positions[3] = 0;
            code.positions[4] = -2;
            code.positions[5] = 2;
        }
    } else {
        code.positions.resize(std::size_t(code.n_qubits));
        for (int q = 0; q < code.n_qubits; ++q) code.positions[std::size_t(q)] = q;
    }

    build_z_decode(code);
    validate(code);
    return code;
}

std::vector<SyndromeOutcome> measure_syndrome(const StateVector& s, const CodeSpec& code) {
    if (s.n_qubits != code.n_qubits) throw std::invalid_argument("state/code size mismatch");
    const std::size_t n_gen = code.generators.size();
    std::vector<SyndromeOutcome> out;
    for (std::uint32_t bits = 0; bits < (1u << n_gen); ++bits) {
        StateVector branch = s;
        Syndrome syn;
        syn.bits.resize(n_gen);
        bool dead = false;
        for (std::size_t k = 0; k < n_gen; ++k) {
            int outcome = (bits >> k) & 1u ? -1 : +1;
            syn.bits[k] = outcome;
            Projection p = project_pauli_eigenspace(branch, code.generators[k], outcome);
            branch = std::move(p.state);
            if (p.probability < 1e-15) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        double prob = norm_squared(branch);
        if (prob < 1e-15) continue;
        double inv = 1.0 / std::sqrt(prob);
        for (cdouble& a : branch.amps) a *= inv;
        out.push_back(SyndromeOutcome{std::move(syn), prob, std::move(branch)});
    }
    return out;
}

SignedPauli decode_min_weight(const CodeSpec& code, const Syndrome& s) {
    std::uint32_t key = code.syndrome_key(s);
    auto it = code.z_decode.find(key);
    if (it == code.z_decode.end()) {
        throw std::invalid_argument("syndrome is inconsistent with any Z-type error");
    }
    return SignedPauli::z_string(code.n_qubits, it->second);
}

}  // namespace shorsim
