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
#include <vector>

#include "shorsim/codes.hpp"

namespace shorsim {

/// One mixture component: apply the logical rotation exp(-i θ Z_L / 2) with
/// probability p.
struct ChannelTerm {
    double probability;
    double angle;
};

/// A finite mixture of logical-Z rotations. Canonical form is sorted by
/// angle with equal angles (within 1e-12) merged.
struct LogicalChannel {
    std::vector<ChannelTerm> terms;
};

/// Sorts by angle and merges terms whose angles agree within 1e-12.
LogicalChannel canonicalize(const LogicalChannel& ch);

/// Total probability (1 for a valid channel).
double total_probability(const LogicalChannel& ch);

/// Σ_s P_s sin²(θ_s/2): the probability that the mixture flips a logical
/// X-basis measurement. This is the "logical error per round" metric used
/// throughout; the Pauli twirl of the channel has exactly this Z-flip rate.
double channel_infidelity(const LogicalChannel& ch);

/// Probability that an n-bit repetition code under homogeneous rotation
/// angle θ yields a syndrome whose correctable error has weight w:
/// C(n,w) [ (cos^{n-w}(θ/2) sin^w(θ/2))² + (cos^w(θ/2) sin^{n-w}(θ/2))² ].
double p_nw(int n, int w, double theta);

/// Logical rotation angle conditioned on a weight-w syndrome class:
/// (-1)^{(n-2w-1)/2} · 2 arctan(tan^{n-2w}(θ/2)). Requires |θ| < π.
double theta_nw(int n, int w, double theta);

/// The exact logical channel of the odd-n repetition code under homogeneous
/// Z(θ) rotations followed by min-weight correction: (n+1)/2 terms
/// (p_nw, theta_nw) for w = 0..(n-1)/2.
LogicalChannel repetition_channel(int n, double theta);

/// Distance-n ferromagnetic Shor code under homogeneous Z(θ): each GHZ row
/// accumulates phase nθ, so this is repetition_channel(n, n·θ). Requires
/// |nθ| < π.
LogicalChannel fm_shor_channel(int n, double theta);

/// Anti-ferromagnetic variant: odd rows accumulate phase θ, so the channel
/// equals repetition_channel(n, θ); for even n the rotations cancel exactly
/// and the channel is the identity.
LogicalChannel afm_shor_channel(int n, double theta);

/// Swapped-basis variants: every row is an independent n-bit repetition code
/// and the per-row logical angles add coherently, with alternating signs
/// (-1)^i when `alternating` (the negated weight-2n Z generators).
/// Probability of a multi-index w⃗ is Π p_nw(n, w_i, θ); its angle is
/// Σ ±theta_nw(n, w_i, θ). Equal-angle terms are merged.
LogicalChannel swapped_basis_channel(int n, double theta, bool alternating);

/// A single syndrome class of the repetition structure with per-qubit
/// rotation angles: `correctable_mask` is the support of the lower-weight
/// error, alpha/beta the amplitudes multiplying I_L and Z_L after that
/// correction. Reported in the gauge where alpha is real-positive.
struct CosetBranch {
    std::uint32_t correctable_mask;
    std::complex<double> alpha;
    std::complex<double> beta;
    double probability;
    double angle;
};

/// Exact branch decomposition of an odd-length repetition code under
/// inhomogeneous per-qubit angles. 2^{n-1} branches; this is the per-shot
/// kernel behind the GHZ-row Shor codes (each row contributes one effective
/// angle).
std::vector<CosetBranch> repetition_coset_branches(std::span<const double> angles);

/// Merges coset branches into a canonical LogicalChannel.
LogicalChannel channel_from_coset_branches(std::span<const CosetBranch> branches);

/// Rotates (alpha, beta) into the gauge where alpha is real and >= 0.
void gauge_fix_branch(std::complex<double>& alpha, std::complex<double>& beta);

/// θ = 2 arctan(iβ/α) for a gauge-fixed pair, evaluated with the
/// two-argument arctangent; α = 0 maps to θ = π.
double branch_angle(const std::complex<double>& alpha_fixed, const std::complex<double>& beta_fixed);

/// Relative phase each GHZ row accumulates under the linear field
/// θ_x = θ0 + x·δ over the code's ion positions: Σ_i (-1)^{pattern_i}
/// (θ0 + x_i δ) per row. Only defined for codes with GHZ rows (fm/afm).
std::vector<double> gradient_phases(const CodeSpec& code, double theta0, double delta);

}  // namespace shorsim
