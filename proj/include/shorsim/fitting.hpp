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

#include <span>

namespace shorsim {

/// Least-squares fit of values(t) ≈ A exp(-Γ t), t in ms, Γ >= 0 in 1/ms.
/// T2* = 1/Γ. Gauss-Newton with log-linear initialization, iteration cap
/// 200, parameter-step tolerance 1e-10.
struct ExpDecayFit {
    double amplitude;  // A
    double gamma;      // Γ, 1/ms
    double residual_rms;
    bool converged;
};

/// Least-squares fit of values(φ) ≈ A cos(k φ + φ0), solved exactly by
/// linear projection onto cos(kφ), sin(kφ). A >= 0, φ0 in (-π, π].
struct CosineFit {
    double amplitude;  // A
    double phase0;     // φ0, rad
    double residual_rms;
    bool converged;
};

/// Optional `weights` are inverse-variance weights (for example 1/stderr²);
/// empty means unweighted. Throws on fewer than 3 points or when no value
/// is positive (nothing for the log-linear initializer to use).
ExpDecayFit fit_exp_decay(std::span<const double> times_ms, std::span<const double> values,
                          std::span<const double> weights = {});

/// Throws on fewer than 4 points or a degenerate phase grid (the 2x2 normal
/// system is rank deficient). All-zero data fits A = 0 with φ0 = 0 by
/// convention.
CosineFit fit_cosine(std::span<const double> phases, std::span<const double> values,
                     int harmonic = 3, std::span<const double> weights = {});

}  // namespace shorsim
