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

#include "shorsim/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shorsim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng Rng::derived(std::uint64_t seed, std::uint64_t shot) {
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix64(s) ^ (shot * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return Rng(mixed);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::next_double() {
    // 53 uniform bits mapped to (0, 1]; never returns 0, so logs are safe.
    return double((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::next_gaussian() {
    double u1 = next_double();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi_v<double> * u2);
}

double Rng::next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

NoiseModel NoiseModel::homogeneous(double theta) {
    NoiseModel m;
    m.kind = Kind::homogeneous;
    m.theta = theta;
    return m;
}

NoiseModel NoiseModel::gradient(double theta0, double delta) {
    NoiseModel m;
    m.kind = Kind::gradient;
    m.theta0 = theta0;
    m.delta = delta;
    return m;
}

NoiseModel NoiseModel::quasi_static(double sigma, double gradient_delta, std::uint64_t seed) {
    if (sigma < 0) throw std::invalid_argument("sigma must be non-negative");
    NoiseModel m;
    m.kind = Kind::quasi_static;
    m.sigma = sigma;
    m.gradient_delta = gradient_delta;
    m.seed = seed;
    return m;
}

NoiseModel NoiseModel::two_timescale(double sigma_fast, double tau_fast, double sigma_slow,
                                     double tau_slow, std::uint64_t seed) {
    if (sigma_fast < 0 || sigma_slow < 0 || tau_fast <= 0 || tau_slow <= 0) {
        throw std::invalid_argument("two_timescale needs sigma >= 0 and tau > 0");
    }
    NoiseModel m;
    m.kind = Kind::two_timescale;
    m.sigma_fast = sigma_fast;
    m.tau_fast = tau_fast;
    m.sigma_slow = sigma_slow;
    m.tau_slow = tau_slow;
    m.seed = seed;
    return m;
}

double ou_accumulated_std(double sigma, double tau, double t) {
    if (t <= 0) return 0.0;
    // Var[∫_0^t ω ds] = 2 σ² τ² (t/τ - 1 + e^{-t/τ}); expm1 keeps the small-t
    // Gaussian limit σ²t² accurate.
    double x = t / tau;
    double var = 2.0 * sigma * sigma * tau * tau * (x + std::expm1(-x));
    return std::sqrt(std::max(var, 0.0));
}

std::vector<double> sample_angles(const NoiseModel& model, std::span<const int> positions,
                                  double wait_ms, std::uint64_t shot) {
    if (wait_ms < 0) throw std::invalid_argument("wait time must be non-negative");
    std::vector<double> angles(positions.size());
    switch (model.kind) {
        case NoiseModel::Kind::homogeneous: {
            for (double& a : angles) a = model.theta;
            break;
        }
        case NoiseModel::Kind::gradient: {
            for (std::size_t i = 0; i < positions.size(); ++i) {
                angles[i] = (model.theta0 + double(positions[i]) * model.delta) * wait_ms;
            }
            break;
        }
        case NoiseModel::Kind::quasi_static: {
            Rng rng = Rng::derived(model.seed, shot);
            double common = model.sigma * rng.next_gaussian();
            for (std::size_t i = 0; i < positions.size(); ++i) {
                angles[i] = (common + double(positions[i]) * model.gradient_delta) * wait_ms;
            }
            break;
        }
        case NoiseModel::Kind::two_timescale: {
            Rng rng = Rng::derived(model.seed, shot);
            double fast = ou_accumulated_std(model.sigma_fast, model.tau_fast, wait_ms) *
                          rng.next_gaussian();
            double slow = ou_accumulated_std(model.sigma_slow, model.tau_slow, wait_ms) *
                          rng.next_gaussian();
            double common = fast + slow;
            for (double& a : angles) a = common;
            break;
        }
    }
    return angles;
}

double zeeman_shift_hz(double b_gauss) {
    if (b_gauss < 0) throw std::invalid_argument("magnetic field must be non-negative");
    return 310.8 * b_gauss * b_gauss;
}

}  // namespace shorsim
