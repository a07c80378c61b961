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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "shorsim/noise.hpp"

using namespace shorsim;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

std::vector<double> default_time_grid() {
    std::vector<double> t;
    for (int i = 0; i <= 15; ++i) t.push_back(20.0 * i);
    return t;
}

std::vector<double> exp_curve(const std::vector<double>& t, double a, double g) {
    std::vector<double> y;
    for (double x : t) y.push_back(a * std::exp(-g * x));
    return y;
}

}  // namespace

TEST_CASE("exponential fit recovers reference parameter pairs within 1%") {
    // Amplitude/rate pairs covering the measured fm and afm decay scales.
    const std::vector<std::pair<double, double>> table = {
        {0.846, 0.0668}, {0.991, 0.00870}, {1.00, 0.00114},
        {0.887, 0.0232}, {0.999, 0.00220}, {1.00, 0.000131},
    };
    std::vector<double> t = default_time_grid();
    for (const auto& [a, g] : table) {
        CAPTURE(a);
        CAPTURE(g);
        ExpDecayFit fit = fit_exp_decay(t, exp_curve(t, a, g));
        CHECK(fit.converged);
        CHECK(std::abs(fit.amplitude - a) / a < 0.01);
        CHECK(std::abs(fit.gamma - g) / g < 0.01);
        CHECK(fit.residual_rms < 1e-10);
    }
}

TEST_CASE("exponential fit round trip at 0.1% over the parameter box") {
    Rng rng(8);
    std::vector<double> t = default_time_grid();
    for (int trial = 0; trial < 40; ++trial) {
        double a = rng.next_uniform(0.1, 1.0);
        double g = std::exp(rng.next_uniform(std::log(1e-4), std::log(0.1)));
        ExpDecayFit fit = fit_exp_decay(t, exp_curve(t, a, g));
        CAPTURE(a);
        CAPTURE(g);
        CHECK(std::abs(fit.amplitude - a) / a < 1e-3);
        CHECK(std::abs(fit.gamma - g) / g < 1e-3);
    }
}

TEST_CASE("exponential fit edge cases") {
    std::vector<double> t = {0, 10, 20, 30};

    SUBCASE("constant data fits zero rate") {
        std::vector<double> y = {0.7, 0.7, 0.7, 0.7};
        ExpDecayFit fit = fit_exp_decay(t, y);
        CHECK(fit.amplitude == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(fit.gamma == 0.0);
    }
    SUBCASE("values outside the contrast range are rejected") {
        std::vector<double> y = {3.0, 2.0, 1.5, 1.2};
        CHECK_THROWS_AS(fit_exp_decay(t, y), std::invalid_argument);
    }
    SUBCASE("all non-positive data is rejected") {
        std::vector<double> y = {0.0, -0.1, -0.2, 0.0};
        CHECK_THROWS_AS(fit_exp_decay(t, y), std::invalid_argument);
    }
    SUBCASE("too few points") {
        std::vector<double> t2 = {0, 1};
        std::vector<double> y2 = {1.0, 0.9};
        CHECK_THROWS_AS(fit_exp_decay(t2, y2), std::invalid_argument);
    }
    SUBCASE("noisy data still converges") {
        Rng rng(4);
        std::vector<double> grid = default_time_grid();
        std::vector<double> y = exp_curve(grid, 0.9, 0.01);
        for (double& v : y) v += 0.01 * rng.next_gaussian();
        ExpDecayFit fit = fit_exp_decay(grid, y);
        CHECK(fit.converged);
        CHECK(std::abs(fit.gamma - 0.01) / 0.01 < 0.15);
    }
}

TEST_CASE("cosine fit recovers amplitude/offset pairs within 1%") {
    const std::vector<std::pair<double, double>> table = {
        {0.814, 0.512}, {0.808, 2.44}, {0.848, 1.63}, {0.897, 0.498}, {0.813, 3.13},
        {0.913, 2.72},  {0.911, 3.13}, {0.890, 2.49}, {0.91, 2.54},
    };
    std::vector<double> phases;
    for (int i = 0; i < 48; ++i) phases.push_back(2 * kPi * i / 48.0);
    for (const auto& [a, p0] : table) {
        std::vector<double> y;
        for (double phi : phases) y.push_back(a * std::cos(3 * phi + p0));
        CosineFit fit = fit_cosine(phases, y, 3);
        CAPTURE(a);
        CAPTURE(p0);
        CHECK(fit.converged);
        CHECK(std::abs(fit.amplitude - a) / a < 0.01);
        double wrapped = std::remainder(fit.phase0 - p0, 2 * kPi);
        CHECK(std::abs(wrapped) < 0.01);
        CHECK(fit.phase0 > -kPi);
        CHECK(fit.phase0 <= kPi);
    }
}

TEST_CASE("cosine fit phase wrap invariance") {
    std::vector<double> phases;
    for (int i = 0; i < 32; ++i) phases.push_back(2 * kPi * i / 32.0);
    for (double p0 : {0.4, -2.8, 3.0}) {
        std::vector<double> y1, y2;
        for (double phi : phases) {
            y1.push_back(0.6 * std::cos(3 * phi + p0));
            y2.push_back(0.6 * std::cos(3 * phi + p0 + 2 * kPi));
        }
        CosineFit f1 = fit_cosine(phases, y1, 3);
        CosineFit f2 = fit_cosine(phases, y2, 3);
        CHECK(f1.amplitude == doctest::Approx(f2.amplitude).epsilon(1e-12));
        CHECK(f1.phase0 == doctest::Approx(f2.phase0).epsilon(1e-9));
    }
}

TEST_CASE("cosine fit edge cases") {
    std::vector<double> phases;
    for (int i = 0; i < 16; ++i) phases.push_back(2 * kPi * i / 16.0);

    SUBCASE("all-zero data reports zero amplitude with zero phase") {
        std::vector<double> y(phases.size(), 0.0);
        CosineFit fit = fit_cosine(phases, y, 3);
        CHECK(fit.amplitude == 0.0);
        CHECK(fit.phase0 == 0.0);
        CHECK(fit.converged);
    }
    SUBCASE("degenerate grid is rejected") {
        // All phases at multiples of 2π/3 alias the third harmonic.
        std::vector<double> bad = {0.0, 2 * kPi / 3, 4 * kPi / 3, 2 * kPi};
        std::vector<double> y = {1, 1, 1, 1};
        CHECK_THROWS_AS(fit_cosine(bad, y, 3), std::invalid_argument);
    }
    SUBCASE("too few points") {
        std::vector<double> p3 = {0.0, 1.0, 2.0};
        std::vector<double> y3 = {1, 0, -1};
        CHECK_THROWS_AS(fit_cosine(p3, y3, 3), std::invalid_argument);
    }
    SUBCASE("other harmonics") {
        std::vector<double> y;
        for (double phi : phases) y.push_back(0.5 * std::cos(phi - 1.1));
        CosineFit fit = fit_cosine(phases, y, 1);
        CHECK(fit.amplitude == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(fit.phase0 == doctest::Approx(-1.1).epsilon(1e-9));
    }
}
