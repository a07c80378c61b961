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
#include <string>

#include "shorsim/channel.hpp"

namespace shorsim {

/// Largest per-term deviation (probability or angle) between two channels
/// after canonicalization; infinity when the term counts differ.
double channel_deviation(const LogicalChannel& a, const LogicalChannel& b);

struct VerifyReport {
    bool passed;
    double max_deviation;
    std::string text;  // deterministic, printable report
};

/// Checks every analytic channel constructor against the brute-force
/// state-vector pipeline on random angles, plus the worked single-error
/// example and the even-distance decoherence-free identity. Only the
/// distance-3 family has a state-vector oracle.
VerifyReport run_equivalence_suite(int distance, int trials, std::uint64_t seed, double tolerance);

}  // namespace shorsim
