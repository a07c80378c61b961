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

namespace shorsim {

/// Deterministic splittable PRNG (splitmix64 core with an explicit
/// Box-Muller transform), so that sampled angle sequences are reproducible
/// bit-for-bit across platforms and thread counts. Each (seed, shot) pair
/// derives an independent stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng derived(std::uint64_t seed, std::uint64_t shot);

    std::uint64_t next_u64();
    /// Uniform in (0, 1].
    double next_double();
    /// Standard normal via Box-Muller (two uniforms per call, no caching).
    double next_gaussian();
    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi);

  private:
    std::uint64_t state_;
};

/// Per-qubit Z-rotation angle generators. Angles scale linearly with the
/// wait time (reference 1 ms) except for the plain homogeneous kind, which
/// is a fixed rotation.
///
///  - homogeneous(theta): every qubit rotates by theta.
///  - gradient(theta0, delta): qubit at chain position x rotates by
///    (theta0 + x·delta) · wait.
///  - quasi_static(sigma, gradient_delta): one Gaussian frequency draw per
///    shot shared by all qubits, plus a static gradient, both scaled by
///    wait: (sigma·ξ_shot + x·gradient_delta) · wait.
///  - two_timescale(sigma_fast, tau_fast, sigma_slow, tau_slow): the phase
///    accumulated by an Ornstein-Uhlenbeck frequency process integrated
///    over the wait, summed for a fast and a slow component; variance
///    2σ²τ²(t/τ - 1 + e^{-t/τ}) each, Gaussian at short times and
///    diffusive at long times. Homogeneous across the chain. σ in rad/ms,
///    τ in ms.
struct NoiseModel {
    enum class Kind { homogeneous, gradient, quasi_static, two_timescale };

    Kind kind = Kind::homogeneous;
    double theta = 0.0;           // homogeneous
    double theta0 = 0.0;          // gradient
    double delta = 0.0;           // gradient
    double sigma = 0.0;           // quasi_static, rad per ms
    double gradient_delta = 0.0;  // quasi_static, rad per ms per position
    double sigma_fast = 0.0;      // two_timescale, rad per ms
    double tau_fast = 1.0;        // ms
    double sigma_slow = 0.0;      // rad per ms
    double tau_slow = 1.0;        // ms
    std::uint64_t seed = 1;       // ignored by deterministic kinds

    bool stochastic() const {
        return kind == Kind::quasi_static || kind == Kind::two_timescale;
    }

    static NoiseModel homogeneous(double theta);
    static NoiseModel gradient(double theta0, double delta);
    static NoiseModel quasi_static(double sigma, double gradient_delta, std::uint64_t seed);
    static NoiseModel two_timescale(double sigma_fast, double tau_fast, double sigma_slow,
                                    double tau_slow, std::uint64_t seed);
};

/// Std-dev of the phase accumulated by a stationary OU frequency process
/// (std sigma rad/ms, correlation time tau ms) integrated over t ms.
double ou_accumulated_std(double sigma, double tau, double t);

/// Per-qubit rotation angles for one shot at the given wait (ms). The same
/// (model.seed, shot) pair always produces the same draws regardless of the
/// wait time or evaluation order.
std::vector<double> sample_angles(const NoiseModel& model, std::span<const int> positions,
                                  double wait_ms, std::uint64_t shot);

/// Second-order Zeeman shift 310.8·B² Hz for a field of B Gauss.
double zeeman_shift_hz(double b_gauss);

}  // namespace shorsim
