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

#include "shorsim/parallel.hpp"

#include <atomic>
#include <vector>

#include "doctest.h"

#include "shorsim/experiments.hpp"

using namespace shorsim;

TEST_CASE("parallel_for touches every index exactly once") {
    const std::size_t n = 10007;
    std::vector<int> counts(n, 0);
    std::atomic<long long> total{0};
    parallel_for(n, Exec::parallel, [&](std::size_t i) {
        ++counts[i];
        total += static_cast<long long>(i);
    });
    for (int c : counts) CHECK(c == 1);
    CHECK(total == static_cast<long long>(n) * static_cast<long long>(n - 1) / 2);
}

TEST_CASE("serial and parallel runs are bit-identical") {
    NoiseModel model = default_logical_noise(77);
    std::vector<double> times = {5, 25, 90};

    SUBCASE("ghz ramsey") {
        for (bool sample : {false, true}) {
            RunOptions serial{3000, sample, Exec::serial};
            RunOptions parallel{3000, sample, Exec::parallel};
            RamseyCurve a = ghz_ramsey(ghz_pattern(4, true), model, times, serial);
            RamseyCurve b = ghz_ramsey(ghz_pattern(4, true), model, times, parallel);
            CHECK(a.values == b.values);
            CHECK(a.stderrs == b.stderrs);
        }
    }

    SUBCASE("logical ramsey") {
        CodeSpec fm = build_shor_code(3, ShorVariant::fm);
        for (bool sample : {false, true}) {
            RunOptions serial{800, sample, Exec::serial};
            RunOptions parallel{800, sample, Exec::parallel};
            LogicalRamseyResult a = logical_ramsey(fm, model, times, serial);
            LogicalRamseyResult b = logical_ramsey(fm, model, times, parallel);
            CHECK(a.raw.values == b.raw.values);
            CHECK(a.corrected.values == b.corrected.values);
            CHECK(a.detected.values == b.detected.values);
            CHECK(a.accept_fraction == b.accept_fraction);
            CHECK(a.corrected.stderrs == b.corrected.stderrs);
        }
    }

    SUBCASE("fringes") {
        CodeSpec afm = build_shor_code(3, ShorVariant::afm);
        std::vector<double> phases = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5};
        RunOptions serial{500, false, Exec::serial};
        RunOptions parallel{500, false, Exec::parallel};
        std::vector<RamseyCurve> a = ghz_fringe(afm, model, 20.0, phases, serial);
        std::vector<RamseyCurve> b = ghz_fringe(afm, model, 20.0, phases, parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t r = 0; r < a.size(); ++r) {
            CHECK(a[r].values == b[r].values);
            CHECK(a[r].stderrs == b[r].stderrs);
        }
    }

    SUBCASE("sweep") {
        std::vector<ShorVariant> variants = {ShorVariant::fm, ShorVariant::afm};
        std::vector<double> thetas = {0.05, 0.1, 0.15, 0.2};
        std::vector<SweepPoint> a = single_round_sweep(variants, thetas, 3, Exec::serial);
        std::vector<SweepPoint> b = single_round_sweep(variants, thetas, 3, Exec::parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].infidelity == b[i].infidelity);
    }
}
