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

#include "shorsim/state_vector.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "shorsim/noise.hpp"

using namespace shorsim;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

StateVector random_state(int n, Rng& rng) {
    StateVector s(n);
    double norm = 0;
    for (cdouble& a : s.amps) {
        a = cdouble(rng.next_gaussian(), rng.next_gaussian());
        norm += std::norm(a);
    }
    double inv = 1.0 / std::sqrt(norm);
    for (cdouble& a : s.amps) a *= inv;
    return s;
}

std::string random_pattern(int n, Rng& rng) {
    std::string p;
    for (int i = 0; i < n; ++i) p.push_back(rng.next_u64() & 1 ? '1' : '0');
    return p;
}

}  // namespace

TEST_CASE("make_ghz places equal amplitude on pattern and complement") {
    StateVector fm3 = make_ghz(3, "000");
    CHECK(fm3.amps[0].real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(fm3.amps[7].real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(norm_squared(fm3) == doctest::Approx(1.0).epsilon(1e-13));

    // "0101": qubit 0 is the leftmost character and the lowest bit.
    StateVector afm4 = make_ghz(4, "0101");
    CHECK(std::abs(afm4.amps[0b1010]) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(afm4.amps[0b0101]) == doctest::Approx(1 / std::sqrt(2.0)));

    StateVector plus = make_ghz(1, "0");
    CHECK(std::abs(plus.amps[0]) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(plus.amps[1]) == doctest::Approx(1 / std::sqrt(2.0)));

    CHECK_THROWS_AS(make_ghz(0, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_ghz(3, "00"), std::invalid_argument);
    CHECK_THROWS_AS(make_ghz(2, "0a"), std::invalid_argument);
}

TEST_CASE("apply_z_rotations matches direct phase bookkeeping") {
    StateVector fm3 = make_ghz(3, "000");
    const double theta = 0.31;
    StateVector rot = apply_z_rotations(fm3, std::vector<double>{theta, theta, theta});
    // (e^{-i 3θ/2}|000> + e^{+i 3θ/2}|111>)/√2: relative phase 3θ.
    cdouble ratio = rot.amps[7] / rot.amps[0];
    CHECK(std::arg(ratio) == doctest::Approx(3 * theta).epsilon(1e-13));
    CHECK(norm_squared(rot) == doctest::Approx(1.0).epsilon(1e-13));

    SUBCASE("zero angles leave the state unchanged") {
        StateVector same = apply_z_rotations(fm3, std::vector<double>{0, 0, 0});
        CHECK(overlap(same, fm3) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("balanced pattern is invariant under homogeneous angles") {
        StateVector afm4 = make_ghz(4, "0101");
        StateVector rot4 = apply_z_rotations(afm4, std::vector<double>{0.4, 0.4, 0.4, 0.4});
        CHECK(overlap(rot4, afm4) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(apply_z_rotations(fm3, std::vector<double>{0.1}), std::invalid_argument);
}

TEST_CASE("rotation phase covariance: angles add") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + int(rng.next_u64() % 5);
        StateVector s = random_state(n, rng);
        std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n)), ab(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            a[std::size_t(i)] = rng.next_uniform(-2, 2);
            b[std::size_t(i)] = rng.next_uniform(-2, 2);
            ab[std::size_t(i)] = a[std::size_t(i)] + b[std::size_t(i)];
        }
        StateVector lhs = apply_z_rotations(s, ab);
        StateVector rhs = apply_z_rotations(apply_z_rotations(s, a), b);
        double dist = 0;
        for (std::size_t i = 0; i < lhs.amps.size(); ++i) {
            dist = std::max(dist, std::abs(lhs.amps[i] - rhs.amps[i]));
        }
        CHECK(dist < 1e-12);
    }
}

TEST_CASE("expectation examples") {
    StateVector plus = make_ghz(1, "0");
    CHECK(expectation(plus, parse_pauli("+X")) == doctest::Approx(1.0).epsilon(1e-14));

    StateVector fm3 = make_ghz(3, "000");
    CHECK(expectation(fm3, parse_pauli("+ZZI")) == doctest::Approx(1.0).epsilon(1e-14));

    StateVector afm3 = make_ghz(3, "010");
    CHECK(expectation(afm3, parse_pauli("-ZZI")) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(expectation(fm3, parse_pauli("+Z")), std::invalid_argument);
}

TEST_CASE("GHZ stabilizer property: neighbor ZZ signs follow the pattern, X^n fixed") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + int(rng.next_u64() % 4);
        std::string pattern = random_pattern(n, rng);
        StateVector s = make_ghz(n, pattern);
        for (int i = 0; i + 1 < n; ++i) {
            int sign = pattern[std::size_t(i)] == pattern[std::size_t(i + 1)] ? +1 : -1;
            SignedPauli zz = SignedPauli::z_string(n, 3u << i, sign);
            CHECK(expectation(s, zz) == doctest::Approx(1.0).epsilon(1e-13));
        }
        SignedPauli xn = SignedPauli::x_string(n, (1u << n) - 1);
        CHECK(expectation(s, xn) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("projection completeness and examples") {
    SUBCASE("|+> onto X=+1 is itself") {
        StateVector plus = make_ghz(1, "0");
        Projection p = project_pauli_eigenspace(plus, parse_pauli("+X"), +1);
        CHECK(p.probability == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(overlap(p.state, plus) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("|0> onto X=+1 has probability 1/2") {
        StateVector zero(1);
        zero.amps[0] = 1;
        Projection p = project_pauli_eigenspace(zero, parse_pauli("+X"), +1);
        CHECK(p.probability == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(p.state.amps[0].real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(p.state.amps[1].real() == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("probabilities of the two outcomes sum to 1 on random states") {
        Rng rng(7);
        for (int trial = 0; trial < 30; ++trial) {
            int n = 1 + int(rng.next_u64() % 5);
            StateVector s = random_state(n, rng);
            std::string letters;
            const char alphabet[] = {'I', 'X', 'Y', 'Z'};
            for (int i = 0; i < n; ++i) letters.push_back(alphabet[rng.next_u64() % 4]);
            SignedPauli p{rng.next_u64() & 1 ? +1 : -1, letters};
            double p_plus = project_pauli_eigenspace(s, p, +1).probability;
            double p_minus = project_pauli_eigenspace(s, p, -1).probability;
            CHECK(p_plus + p_minus == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("ghz_relative_phase equals the rotated-state amplitude phase") {
    Rng rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + int(rng.next_u64() % 5);
        std::string pattern = random_pattern(n, rng);
        std::vector<double> angles(static_cast<std::size_t>(n));
        for (double& a : angles) a = rng.next_uniform(-1.0, 1.0);

        double quick = ghz_relative_phase(pattern, angles);

        StateVector rot = apply_z_rotations(make_ghz(n, pattern), angles);
        std::uint32_t pat_idx = 0;
        for (int i = 0; i < n; ++i) {
            if (pattern[std::size_t(i)] == '1') pat_idx |= 1u << i;
        }
        std::uint32_t comp_idx = ~pat_idx & ((1u << n) - 1);
        double from_state = std::arg(rot.amps[comp_idx] / rot.amps[pat_idx]);

        // Compare modulo 2π.
        double diff = std::remainder(quick - from_state, 2 * kPi);
        CHECK(std::abs(diff) < 1e-12);
    }
}

TEST_CASE("apply_single_qubit applies a 2x2 operator in place") {
    StateVector zero(2);
    zero.amps[0] = 1;
    const double s = 1 / std::sqrt(2.0);
    cdouble hadamard[4] = {s, s, s, -s};
    StateVector h0 = apply_single_qubit(zero, 0, hadamard);
    CHECK(h0.amps[0].real() == doctest::Approx(s));
    CHECK(h0.amps[1].real() == doctest::Approx(s));
    CHECK(h0.amps[2].real() == doctest::Approx(0.0));
    CHECK_THROWS_AS(apply_single_qubit(zero, 5, hadamard), std::invalid_argument);
}
