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

#include "shorsim/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace shorsim {

namespace {

constexpr double kBranchCutoff = 1e-15;
constexpr double kCodespaceTol = 1e-9;

// 2x2 matrix of an operator in the (codeword_zero, codeword_one) basis.
struct Mat2 {
    std::complex<double> m00, m01, m10, m11;
};

Mat2 codespace_matrix(const CodeSpec& code, const StateVector& v0, const StateVector& v1) {
    Mat2 m;
    m.m00 = inner_product(code.codeword_zero, v0);
    m.m10 = inner_product(code.codeword_one, v0);
    m.m01 = inner_product(code.codeword_zero, v1);
    m.m11 = inner_product(code.codeword_one, v1);
    return m;
}

}  // namespace

std::vector<SyndromeBranch> simulate_round(const CodeSpec& code, std::span<const double> angles) {
    if (static_cast<int>(angles.size()) != code.n_qubits) {
        throw std::invalid_argument("angle count must match code qubit count");
    }
    const std::size_t n_gen = code.generators.size();
    if (n_gen > 20) throw std::invalid_argument("too many generators for exhaustive enumeration");

    // Z_L in the codeword basis; by construction Z_L·cw0 = cw1, and on the
    // swapped-basis codes Z_L is instead diagonal. Both cases are traceless
    // Hermitian involutions, which the extraction below relies on.
    Mat2 zmat = codespace_matrix(code, apply_pauli(code.logical_z, code.codeword_zero),
                                 apply_pauli(code.logical_z, code.codeword_one));
    if (std::abs(zmat.m00 + zmat.m11) > 1e-10) {
        throw std::logic_error(code.name + ": logical Z is not traceless on the codespace");
    }

    StateVector rot0 = apply_z_rotations(code.codeword_zero, angles);
    StateVector rot1 = apply_z_rotations(code.codeword_one, angles);

    std::vector<SyndromeBranch> branches;
    for (std::uint32_t bits = 0; bits < (1u << n_gen); ++bits) {
        StateVector b0 = rot0;
        StateVector b1 = rot1;
        Syndrome syn;
        syn.bits.resize(n_gen);
        bool dead = false;
        for (std::size_t k = 0; k < n_gen; ++k) {
            int outcome = (bits >> k) & 1u ? -1 : +1;
            syn.bits[k] = outcome;
            Projection p0 = project_pauli_eigenspace(b0, code.generators[k], outcome);
            b0 = std::move(p0.state);
            if (p0.probability < kBranchCutoff) {
                dead = true;
                break;
            }
            Projection p1 = project_pauli_eigenspace(b1, code.generators[k], outcome);
            b1 = std::move(p1.state);
        }
        if (dead) continue;
        double prob = norm_squared(b0);
        if (prob < kBranchCutoff) continue;

        SignedPauli correction = decode_min_weight(code, syn);
        b0 = apply_pauli(correction, b0);
        b1 = apply_pauli(correction, b1);

        Mat2 m = codespace_matrix(code, b0, b1);
        double in_codespace = std::norm(m.m00) + std::norm(m.m10);
        if (std::abs(norm_squared(b0) - in_codespace) > kCodespaceTol) {
            throw std::runtime_error(code.name + ": corrected state left the codespace");
        }

        // Solve m = alpha I + beta Z_L using tr(m) and tr(Z_L m).
        std::complex<double> alpha = 0.5 * (m.m00 + m.m11);
        std::complex<double> beta = 0.5 * (zmat.m00 * m.m00 + zmat.m01 * m.m10 +
                                           zmat.m10 * m.m01 + zmat.m11 * m.m11);
        std::complex<double> r00 = m.m00 - alpha - beta * zmat.m00;
        std::complex<double> r01 = m.m01 - beta * zmat.m01;
        std::complex<double> r10 = m.m10 - beta * zmat.m10;
        std::complex<double> r11 = m.m11 - alpha - beta * zmat.m11;
        double residual = std::sqrt(std::norm(r00) + std::norm(r01) + std::norm(r10) + std::norm(r11));
        if (residual > kCodespaceTol) {
            throw std::runtime_error(code.name + ": codespace action is not of the form aI + bZ");
        }

        gauge_fix_branch(alpha, beta);
        SyndromeBranch br;
        br.syndrome = std::move(syn);
        br.probability = std::norm(alpha) + std::norm(beta);
        br.alpha = alpha;
        br.beta = beta;
        br.logical_angle = branch_angle(alpha, beta);
        branches.push_back(std::move(br));
    }
    return branches;
}

LogicalChannel channel_from_branches(std::span<const SyndromeBranch> branches) {
    double total = 0;
    LogicalChannel ch;
    for (const SyndromeBranch& b : branches) {
        total += b.probability;
        ch.terms.push_back(ChannelTerm{b.probability, b.logical_angle});
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::runtime_error("branch probabilities do not sum to 1");
    }
    return canonicalize(ch);
}

DetectedResult simulate_round_detected(const CodeSpec& code, std::span<const double> angles) {
    std::vector<SyndromeBranch> branches = simulate_round(code, angles);
    for (const SyndromeBranch& b : branches) {
        if (b.syndrome.trivial()) {
            return DetectedResult{b.probability,
                                  LogicalChannel{{ChannelTerm{1.0, b.logical_angle}}}};
        }
    }
    throw std::runtime_error("trivial syndrome branch has zero probability");
}

}  // namespace shorsim
