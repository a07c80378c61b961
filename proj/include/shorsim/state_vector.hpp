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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shorsim/pauli.hpp"

namespace shorsim {

using cdouble = std::complex<double>;

/// Dense state vector over n qubits.
///
/// Index convention, used everywhere in this library: qubit i is bit i of
/// the basis-state index and the i-th (leftmost-first) character of a basis
/// label. So for the 4-qubit label "0101", qubit 0 reads '0', qubit 1 reads
/// '1', and the index is 0*1 + 1*2 + 0*4 + 1*8 = 10.
struct StateVector {
    int n_qubits = 0;
    std::vector<cdouble> amps;

    StateVector() = default;
    explicit StateVector(int n) : n_qubits(n), amps(std::size_t(1) << n) {}

    std::size_t dim() const { return amps.size(); }
};

/// Σ |a_i|^2.
double norm_squared(const StateVector& s);

/// ⟨a|b⟩.
cdouble inner_product(const StateVector& a, const StateVector& b);

/// |⟨a|b⟩| — state equality up to global phase means this is 1.
double overlap(const StateVector& a, const StateVector& b);

/// (|pattern⟩ + |complement(pattern)⟩)/√2. `pattern` is a string of '0'/'1'
/// of length n, character i addressing qubit i.
StateVector make_ghz(int n, const std::string& pattern);

/// Applies Z(θ_i) = exp(-i θ_i Z/2) to every qubit: each qubit contributes
/// phase e^{-iθ/2} on |0⟩ and e^{+iθ/2} on |1⟩. Requires one angle per qubit.
StateVector apply_z_rotations(const StateVector& s, std::span<const double> angles);

/// Relative phase accumulated between the two branches of a GHZ state under
/// per-qubit Z rotations: Σ_i (-1)^{pattern_i} θ_i, i.e. the phase of the
/// complement branch minus the phase of the pattern branch. Summed in qubit
/// order so that balanced alternating patterns cancel exactly in floating
/// point. Equal to arg(a_complement / a_pattern) of the rotated state.
double ghz_relative_phase(const std::string& pattern, std::span<const double> angles);

/// sign * ⟨state|P|state⟩. P is Hermitian, so the result is real; the
/// imaginary residue is checked against 1e-10.
double expectation(const StateVector& s, const SignedPauli& p);

/// Applies the operator P (including its sign) to the state.
StateVector apply_pauli(const SignedPauli& p, const StateVector& s);

/// Applies an arbitrary single-qubit operator m (row-major 2x2) to `qubit`.
StateVector apply_single_qubit(const StateVector& s, int qubit, const cdouble m[4]);

struct Projection {
    StateVector state;   // unnormalized, (I + outcome*P)/2 applied
    double probability;  // squared norm of `state`
};

/// Projects onto the `outcome` (+1 or -1) eigenspace of P. The probabilities
/// of the two outcomes sum to 1 for normalized input.
Projection project_pauli_eigenspace(const StateVector& s, const SignedPauli& p, int outcome);

}  // namespace shorsim
