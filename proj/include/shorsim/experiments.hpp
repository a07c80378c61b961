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
#include <span>
#include <string>
#include <vector>

#include "shorsim/channel.hpp"
#include "shorsim/codes.hpp"
#include "shorsim/noise.hpp"
#include "shorsim/parallel.hpp"

namespace shorsim {

/// One measured curve. `xs` is the wait time in ms for decay curves and the
/// analysis phase in radians for fringes.
struct RamseyCurve {
    std::vector<double> xs;
    std::vector<double> values;
    std::vector<double> stderrs;
    long long shots = 0;
};

struct RunOptions {
    long long shots = 10000;
    /// When set, draw ±1 measurement outcomes per shot (binomial noise on
    /// top of the noise-ensemble average); otherwise curves average exact
    /// per-shot expectations.
    bool sample = false;
    Exec exec = Exec::parallel;
};

/// "000..0" for fm, "0101.." for afm.
std::string ghz_pattern(int n, bool afm);

/// Contiguous chain positions, approximately centered on 0.
std::vector<int> ghz_positions(int n);

/// Fringe contrast |E[e^{iΔφ}]| of an n-qubit GHZ state vs wait time, where
/// Δφ is the branch relative phase under per-shot sampled angles.
RamseyCurve ghz_ramsey(const std::string& pattern, const NoiseModel& model,
                       std::span<const double> times_ms, const RunOptions& opts);

enum class LogicalEngine {
    row_kernel,  // exact per-row repetition branches (fast path)
    oracle,      // brute-force state-vector pipeline (reference)
};

struct LogicalRamseyResult {
    RamseyCurve raw;        // X-basis total parity, no correction
    RamseyCurve corrected;  // one round of reconstructed-syndrome correction
    RamseyCurve detected;   // post-selected on the trivial syndrome
    std::vector<double> accept_fraction;  // per time point
};

/// The logical-qubit Ramsey experiment on a GHZ-row Shor code (fm/afm).
/// Both engines agree to machine precision; the oracle engine exists as the
/// slow reference.
LogicalRamseyResult logical_ramsey(const CodeSpec& code, const NoiseModel& model,
                                   std::span<const double> times_ms, const RunOptions& opts,
                                   LogicalEngine engine = LogicalEngine::row_kernel);

/// Per-row Ramsey fringes A_r cos(n φ + Δφ_r) after a fixed wait; one curve
/// per GHZ row, scanned over the analysis phase. `row_amplitudes` optionally
/// scales each row's contrast (preparation-fidelity knob); defaults to 1.
std::vector<RamseyCurve> ghz_fringe(const CodeSpec& code, const NoiseModel& model, double wait_ms,
                                    std::span<const double> phases, const RunOptions& opts,
                                    std::span<const double> row_amplitudes = {});

struct SweepPoint {
    ShorVariant variant;
    double theta;
    double infidelity;
};

/// Single-round logical error of the distance-n analytic channels over a θ
/// grid; row-major by variant then θ.
std::vector<SweepPoint> single_round_sweep(std::span<const ShorVariant> variants,
                                           std::span<const double> thetas, int distance = 3,
                                           Exec exec = Exec::parallel);

/// Default stochastic dephasing configuration used by the CLI when no
/// explicit noise flags are given: a fast and a slow OU component tuned so
/// the simulated fm distance-3 corrected curve decays with T2* of roughly
/// a hundred ms. Documented in the README.
NoiseModel default_logical_noise(std::uint64_t seed = 1);

}  // namespace shorsim
