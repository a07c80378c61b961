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

#include "shorsim/state_vector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shorsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint32_t pattern_index(const std::string& pattern) {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] == '1') {
            idx |= (1u << i);
        } else if (pattern[i] != '0') {
            throw std::invalid_argument("GHZ pattern must contain only '0'/'1'");
        }
    }
    return idx;
}

void check_match(const StateVector& s, const SignedPauli& p) {
    if (s.n_qubits != p.n_qubits()) {
        throw std::invalid_argument("state/Pauli qubit count mismatch");
    }
}

}  // namespace

double norm_squared(const StateVector& s) {
    double n = 0;
    for (const cdouble& a : s.amps) n += std::norm(a);
    return n;
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits) throw std::invalid_argument("qubit count mismatch");
    cdouble acc = 0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
    return acc;
}

double overlap(const StateVector& a, const StateVector& b) {
    return std::abs(inner_product(a, b));
}

StateVector make_ghz(int n, const std::string& pattern) {
    if (n < 1) throw std::invalid_argument("GHZ state needs at least one qubit");
    if (static_cast<int>(pattern.size()) != n) {
        throw std::invalid_argument("GHZ pattern length must equal qubit count");
    }
    StateVector s(n);
    std::uint32_t idx = pattern_index(pattern);
    std::uint32_t comp = ~idx & ((n == 32 ? ~0u : (1u << n) - 1));
    s.amps[idx] += kInvSqrt2;
    s.amps[comp] += kInvSqrt2;
    return s;
}

StateVector apply_z_rotations(const StateVector& s, std::span<const double> angles) {
    if (static_cast<int>(angles.size()) != s.n_qubits) {
        throw std::invalid_argument("need one rotation angle per qubit");
    }
    StateVector out = s;
    for (std::size_t b = 0; b < out.amps.size(); ++b) {
        if (out.amps[b] == cdouble{0.0, 0.0}) continue;
        double phase = 0;
        for (int q = 0; q < s.n_qubits; ++q) {
            phase += ((b >> q) & 1u) ? angles[std::size_t(q)] : -angles[std::size_t(q)];
        }
        out.amps[b] *= std::polar(1.0, 0.5 * phase);
    }
    return out;
}

double ghz_relative_phase(const std::string& pattern, std::span<const double> angles) {
    if (pattern.size() != angles.size()) {
        throw std::invalid_argument("pattern/angle length mismatch");
    }
    double phase = 0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] == '0') {
            phase += angles[i];
        } else if (pattern[i] == '1') {
            phase -= angles[i];
        } else {
            throw std::invalid_argument("GHZ pattern must contain only '0'/'1'");
        }
    }
    return phase;
}

StateVector apply_pauli(const SignedPauli& p, const StateVector& s) {
    check_match(s, p);
    StateVector out(s.n_qubits);
    std::uint32_t xm = p.x_mask();
    std::uint32_t phase_mask = p.z_mask();
    int y_count = std::popcount(p.x_mask() & p.z_mask());
    // Global i^{#Y}; Hermitian strings keep expectations real regardless.
    cdouble y_phase = 1;
    switch (y_count % 4) {
        case 0: y_phase = {1, 0}; break;
        case 1: y_phase = {0, 1}; break;
        case 2: y_phase = {-1, 0}; break;
        case 3: y_phase = {0, -1}; break;
    }
    cdouble base = y_phase * double(p.sign);
    for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if (s.amps[b] == cdouble{0.0, 0.0}) continue;
        int par = std::popcount(static_cast<std::uint32_t>(b) & phase_mask) & 1;
        cdouble ph = par ? -base : base;
        out.amps[b ^ xm] += ph * s.amps[b];
    }
    return out;
}

StateVector apply_single_qubit(const StateVector& s, int qubit, const cdouble m[4]) {
    if (qubit < 0 || qubit >= s.n_qubits) throw std::invalid_argument("qubit out of range");
    StateVector out(s.n_qubits);
    std::size_t bit = std::size_t(1) << qubit;
    for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if ((b & bit) != 0) continue;
        cdouble a0 = s.amps[b];
        cdouble a1 = s.amps[b | bit];
        out.amps[b] = m[0] * a0 + m[1] * a1;
        out.amps[b | bit] = m[2] * a0 + m[3] * a1;
    }
    return out;
}

double expectation(const StateVector& s, const SignedPauli& p) {
    StateVector ps = apply_pauli(p, s);
    cdouble val = inner_product(s, ps);
    if (std::abs(val.imag()) > 1e-10) {
        throw std::runtime_error("expectation of Hermitian Pauli came out non-real");
    }
    return val.real();
}

Projection project_pauli_eigenspace(const StateVector& s, const SignedPauli& p, int outcome) {
    if (outcome != +1 && outcome != -1) throw std::invalid_argument("outcome must be +1 or -1");
    StateVector ps = apply_pauli(p, s);
    Projection proj;
    proj.state = StateVector(s.n_qubits);
    for (std::size_t b = 0; b < s.amps.size(); ++b) {
        proj.state.amps[b] = 0.5 * (s.amps[b] + double(outcome) * ps.amps[b]);
    }
    proj.probability = norm_squared(proj.state);
    return proj;
}

}  // namespace shorsim
