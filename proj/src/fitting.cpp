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

#include "shorsim/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace shorsim {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kStepTol = 1e-10;

double weight_at(std::span<const double> weights, std::size_t i) {
    return weights.empty() ? 1.0 : weights[i];
}

double residual_rms(std::span<const double> r) {
    double ss = 0;
    for (double x : r) ss += x * x;
    return std::sqrt(ss / double(r.size()));
}

}  // namespace

ExpDecayFit fit_exp_decay(std::span<const double> times_ms, std::span<const double> values,
                          std::span<const double> weights) {
    const std::size_t n = values.size();
    if (times_ms.size() != n || (!weights.empty() && weights.size() != n)) {
        throw std::invalid_argument("fit input arrays must have equal length");
    }
    if (n < 3) throw std::invalid_argument("exponential fit needs at least 3 points");
    for (double v : values) {
        if (std::abs(v) > 1.05) {
            throw std::invalid_argument("exponential fit expects contrast-scaled values in [-1.05, 1.05]");
        }
    }

    // Log-linear initialization on the positive values.
    double sw = 0, st = 0, sl = 0, stt = 0, stl = 0;
    std::size_t positive = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] <= 0) continue;
        ++positive;
        double w = weight_at(weights, i);
        double l = std::log(values[i]);
        sw += w;
        st += w * times_ms[i];
        sl += w * l;
        stt += w * times_ms[i] * times_ms[i];
        stl += w * times_ms[i] * l;
    }
    if (positive == 0) throw std::invalid_argument("exponential fit needs positive values");
    double amplitude, gamma;
    double det = sw * stt - st * st;
    if (positive >= 2 && std::abs(det) > 1e-12 * (sw * stt + st * st + 1e-300)) {
        double slope = (sw * stl - st * sl) / det;
        double intercept = (stt * sl - st * stl) / det;
        amplitude = std::exp(intercept);
        gamma = std::max(0.0, -slope);
    } else {
        amplitude = *std::max_element(values.begin(), values.end());
        gamma = 0.0;
    }

    // Gauss-Newton on r_i = A e^{-Γ t_i} - y_i.
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
        double jaa = 0, jag = 0, jgg = 0, ra = 0, rg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double w = weight_at(weights, i);
            double e = std::exp(-gamma * times_ms[i]);
            double r = amplitude * e - values[i];
            double da = e;
            double dg = -amplitude * times_ms[i] * e;
            jaa += w * da * da;
            jag += w * da * dg;
            jgg += w * dg * dg;
            ra += w * da * r;
            rg += w * dg * r;
        }
        double det2 = jaa * jgg - jag * jag;
        double step_a, step_g;
        if (std::abs(det2) > 1e-300) {
            step_a = -(jgg * ra - jag * rg) / det2;
            step_g = -(jaa * rg - jag * ra) / det2;
        } else {
            // Γ direction is degenerate (e.g. constant data): amplitude-only step.
            step_a = jaa > 0 ? -ra / jaa : 0.0;
            step_g = 0.0;
        }
        amplitude += step_a;
        gamma = std::max(0.0, gamma + step_g);
        double scale = std::abs(amplitude) + std::abs(gamma) + 1.0;
        if (std::hypot(step_a, step_g) < kStepTol * scale) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw std::runtime_error("exponential fit did not converge within the iteration cap");
    }

    std::vector<double> res(n);
    for (std::size_t i = 0; i < n; ++i) {
        res[i] = amplitude * std::exp(-gamma * times_ms[i]) - values[i];
    }
    return ExpDecayFit{amplitude, gamma, residual_rms(res), converged};
}

CosineFit fit_cosine(std::span<const double> phases, std::span<const double> values, int harmonic,
                     std::span<const double> weights) {
    const std::size_t n = values.size();
    if (phases.size() != n || (!weights.empty() && weights.size() != n)) {
        throw std::invalid_argument("fit input arrays must have equal length");
    }
    if (n < 4) throw std::invalid_argument("cosine fit needs at least 4 points");
    if (harmonic < 1) throw std::invalid_argument("harmonic must be >= 1");

    // A cos(kφ + φ0) = a cos(kφ) + b sin(kφ) with a = A cos(φ0),
    // b = -A sin(φ0); linear least squares in (a, b).
    double scc = 0, scs = 0, sss = 0, syc = 0, sys = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double w = weight_at(weights, i);
        double c = std::cos(double(harmonic) * phases[i]);
        double s = std::sin(double(harmonic) * phases[i]);
        scc += w * c * c;
        scs += w * c * s;
        sss += w * s * s;
        syc += w * values[i] * c;
        sys += w * values[i] * s;
    }
    double det = scc * sss - scs * scs;
    if (std::abs(det) <= 1e-9 * (scc + sss + 1e-300)) {
        throw std::invalid_argument("phase grid is degenerate for this harmonic");
    }
    double a = (sss * syc - scs * sys) / det;
    double b = (scc * sys - scs * syc) / det;

    double amplitude = std::hypot(a, b);
    double phase0 = amplitude > 0 ? std::atan2(-b, a) : 0.0;
    if (phase0 <= -std::numbers::pi_v<double>) phase0 = std::numbers::pi_v<double>;

    std::vector<double> res(n);
    for (std::size_t i = 0; i < n; ++i) {
        res[i] = amplitude * std::cos(double(harmonic) * phases[i] + phase0) - values[i];
    }
    return CosineFit{amplitude, phase0, residual_rms(res), true};
}

}  // namespace shorsim
