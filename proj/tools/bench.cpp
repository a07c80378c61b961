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

// Compares the serial reference loops against the OpenMP-parallel kernels,
// and the brute-force state-vector oracle against the row-structure fast
// path, on the experiment workloads.

#include <chrono>
#include <cstdio>
#include <vector>

#include "shorsim/experiments.hpp"

using namespace shorsim;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long shots = argc > 1 ? std::atoll(argv[1]) : 40000;
    std::printf("threads available: %d, shots: %lld\n\n", max_threads(), shots);

    NoiseModel model = default_logical_noise(11);
    std::vector<double> times = {5, 20, 60, 120, 240};
    CodeSpec fm = build_shor_code(3, ShorVariant::fm);

    RunOptions serial{shots, false, Exec::serial};
    RunOptions parallel{shots, false, Exec::parallel};

    std::printf("%-34s %12s %12s %8s\n", "workload", "serial ms", "parallel ms", "speedup");

    {
        std::string pattern = ghz_pattern(4, false);
        double ts = time_ms([&] { ghz_ramsey(pattern, model, times, serial); });
        double tp = time_ms([&] { ghz_ramsey(pattern, model, times, parallel); });
        std::printf("%-34s %12.1f %12.1f %7.2fx\n", "ghz_ramsey fm n=4", ts, tp, ts / tp);
    }
    {
        double ts = time_ms([&] { logical_ramsey(fm, model, times, serial); });
        double tp = time_ms([&] { logical_ramsey(fm, model, times, parallel); });
        std::printf("%-34s %12.1f %12.1f %7.2fx\n", "logical_ramsey fm d=3 (row kernel)", ts, tp,
                    ts / tp);
    }
    {
        std::vector<double> thetas;
        for (int i = 1; i <= 200; ++i) thetas.push_back(0.002 * i);
        std::vector<ShorVariant> variants = {ShorVariant::fm, ShorVariant::afm,
                                             ShorVariant::swapped_plus, ShorVariant::swapped_minus};
        double ts = time_ms([&] { single_round_sweep(variants, thetas, 3, Exec::serial); });
        double tp = time_ms([&] { single_round_sweep(variants, thetas, 3, Exec::parallel); });
        std::printf("%-34s %12.1f %12.1f %7.2fx\n", "single_round_sweep 4x200", ts, tp, ts / tp);
    }
    {
        RunOptions oracle_opts{shots / 200, false, Exec::parallel};
        RunOptions kernel_opts{shots / 200, false, Exec::parallel};
        double to = time_ms(
            [&] { logical_ramsey(fm, model, times, oracle_opts, LogicalEngine::oracle); });
        double tk = time_ms(
            [&] { logical_ramsey(fm, model, times, kernel_opts, LogicalEngine::row_kernel); });
        std::printf("\noracle engine vs row kernel at %lld shots: %.1f ms vs %.1f ms (%.0fx)\n",
                    shots / 200, to, tk, to / tk);
    }
    return 0;
}
