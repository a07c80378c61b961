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
#include <span>
#include <vector>

#include "shorsim/channel.hpp"
#include "shorsim/codes.hpp"

namespace shorsim {

/// One syndrome branch of the brute-force pipeline. The post-correction
/// action on the codespace is alpha·I_L + beta·Z_L, reported in the gauge
/// where alpha is real-positive; |alpha|² + |beta|² equals the branch
/// probability and logical_angle = 2 arctan(iβ/α).
struct SyndromeBranch {
    Syndrome syndrome;
    double probability;
    std::complex<double> alpha;
    std::complex<double> beta;
    double logical_angle;
};

/// Ground-truth single round: applies per-qubit Z rotations to both
/// codewords, enumerates every syndrome by sequential projection, applies
/// the min-weight correction, and solves for (alpha, beta) per syndrome.
/// Branches below probability 1e-15 are dropped. Throws if a corrected
/// state leaves the codespace (a code-construction bug).
std::vector<SyndromeBranch> simulate_round(const CodeSpec& code, std::span<const double> angles);

/// Collapses branches into the canonical merged logical channel. Requires
/// probabilities to sum to 1 within 1e-9.
LogicalChannel channel_from_branches(std::span<const SyndromeBranch> branches);

struct DetectedResult {
    double accept_probability;
    LogicalChannel channel;  // conditioned on the trivial syndrome
};

/// Error-detection variant: keeps only the trivial-syndrome branch,
/// renormalized. Throws if that branch has zero probability.
DetectedResult simulate_round_detected(const CodeSpec& code, std::span<const double> angles);

}  // namespace shorsim
