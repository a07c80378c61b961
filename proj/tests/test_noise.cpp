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
#include <stdexcept>

#include "doctest.h"

using namespace shorsim;

TEST_CASE("homogeneous and gradient angle generation") {
    std::vector<int> positions = {-6, -5, -4};

    std::vector<double> h = sample_angles(NoiseModel::homogeneous(0.2), positions, 13.0, 5);
    CHECK(h == std::vector<double>{0.2, 0.2, 0.2});

    const double theta0 = 0.11, delta = 0.007;
    std::vector<double> g = sample_angles(NoiseModel::gradient(theta0, delta), positions, 1.0, 0);
    CHECK(g[0] == doctest::Approx(theta0 - 6 * delta).epsilon(1e-15));
    CHECK(g[1] == doctest::Approx(theta0 - 5 * delta).epsilon(1e-15));
    CHECK(g[2] == doctest::Approx(theta0 - 4 * delta).epsilon(1e-15));

    // Linear scaling with the wait time.
    std::vector<double> g2 = sample_angles(NoiseModel::gradient(theta0, delta), positions, 2.0, 0);
    CHECK(g2[1] == doctest::Approx(2.0 * g[1]).epsilon(1e-15));

    CHECK_THROWS_AS(sample_angles(NoiseModel::homogeneous(0.1), positions, -1.0, 0),
                    std::invalid_argument);
}

TEST_CASE("stochastic draws are keyed by (seed, shot) only") {
    std::vector<int> positions = {0, 1, 2, 3};
    NoiseModel qs = NoiseModel::quasi_static(0.05, 0.001, 42);

    std::vector<double> a = sample_angles(qs, positions, 7.0, 3);
    std::vector<double> b = sample_angles(qs, positions, 7.0, 3);
    CHECK(a == b);

    std::vector<double> c = sample_angles(qs, positions, 7.0, 4);
    CHECK(a != c);

    NoiseModel other_seed = NoiseModel::quasi_static(0.05, 0.001, 43);
    CHECK(a != sample_angles(other_seed, positions, 7.0, 3));

    // All qubits share one draw plus the static gradient.
    double common = a[0] - positions[0] * 0.001 * 7.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == doctest::Approx(common + positions[i] * 0.001 * 7.0).epsilon(1e-12));
    }
}

TEST_CASE("integrated OU variance has the right limits") {
    const double sigma = 0.04, tau = 5.0;
    // Short times: Gaussian regime, std ≈ σ t.
    CHECK(ou_accumulated_std(sigma, tau, 0.01) == doctest::Approx(sigma * 0.01).epsilon(1e-3));
    // Long times: diffusive regime, var ≈ 2 σ² τ t.
    double t = 5000.0;
    CHECK(ou_accumulated_std(sigma, tau, t) ==
          doctest::Approx(std::sqrt(2 * sigma * sigma * tau * t)).epsilon(1e-3));
    CHECK(ou_accumulated_std(sigma, tau, 0.0) == 0.0);
}

TEST_CASE("two-timescale sampling matches its stated variance") {
    std::vector<int> positions = {0, 1};
    NoiseModel tt = NoiseModel::two_timescale(0.03, 4.0, 0.002, 800.0, 9);
    const double t = 50.0;
    double expected_var = std::pow(ou_accumulated_std(0.03, 4.0, t), 2) +
                          std::pow(ou_accumulated_std(0.002, 800.0, t), 2);
    double acc = 0;
    const int shots = 40000;
    for (int k = 0; k < shots; ++k) {
        std::vector<double> a = sample_angles(tt, positions, t, std::uint64_t(k));
        CHECK(a[0] == a[1]);  // homogeneous across the chain
        acc += a[0] * a[0];
    }
    CHECK(acc / shots == doctest::Approx(expected_var).epsilon(0.03));
}

TEST_CASE("gaussian sampler moments") {
    Rng rng(123);
    double sum = 0, sum2 = 0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
        double g = rng.next_gaussian();
        sum += g;
        sum2 += g * g;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("zeeman shift") {
    CHECK(zeeman_shift_hz(0.0) == 0.0);
    CHECK(zeeman_shift_hz(1.0) == doctest::Approx(310.8).epsilon(1e-15));
    CHECK(zeeman_shift_hz(2.0) == doctest::Approx(1243.2).epsilon(1e-15));
    CHECK_THROWS_AS(zeeman_shift_hz(-1.0), std::invalid_argument);
}
