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

#include "shorsim/verify.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <vector>

#include "shorsim/io.hpp"
#include "shorsim/noise.hpp"
#include "shorsim/oracle.hpp"

namespace shorsim {

namespace {

// Oracle channel for a variant under homogeneous θ on every physical qubit.
LogicalChannel oracle_channel(const CodeSpec& code, double theta) {
    std::vector<double> angles(std::size_t(code.n_qubits), theta);
    return channel_from_branches(simulate_round(code, angles));
}

}  // namespace

double channel_deviation(const LogicalChannel& a, const LogicalChannel& b) {
    LogicalChannel ca = canonicalize(a);
    LogicalChannel cb = canonicalize(b);
    if (ca.terms.size() != cb.terms.size()) return std::numeric_limits<double>::infinity();
    double dev = 0;
    for (std::size_t i = 0; i < ca.terms.size(); ++i) {
        dev = std::max(dev, std::abs(ca.terms[i].probability - cb.terms[i].probability));
        dev = std::max(dev, std::abs(ca.terms[i].angle - cb.terms[i].angle));
    }
    return dev;
}

VerifyReport run_equivalence_suite(int distance, int trials, std::uint64_t seed, double tolerance) {
    if (distance != 3) {
        throw std::invalid_argument("the state-vector oracle suite runs at distance 3");
    }
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    std::ostringstream out;
    bool passed = true;
    double max_dev = 0;

    CodeSpec rep = build_repetition_code(distance);
    CodeSpec fm = build_shor_code(distance, ShorVariant::fm);
    CodeSpec afm = build_shor_code(distance, ShorVariant::afm);
    CodeSpec splus = build_shor_code(distance, ShorVariant::swapped_plus);
    CodeSpec sminus = build_shor_code(distance, ShorVariant::swapped_minus);

    // Worked single-error example: homogeneous θ, syndrome flagging only the
    // second generator, correctable error of weight 1 on the last qubit.
    {
        const double theta = 0.37;
        std::vector<double> angles(3, theta);
        std::vector<SyndromeBranch> branches = simulate_round(rep, angles);
        double dev = std::numeric_limits<double>::infinity();
        for (const SyndromeBranch& b : branches) {
            if (b.syndrome.bits == std::vector<int>{+1, -1}) {
                double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
                std::complex<double> alpha_expected(c * c * s, 0.0);  // gauge: alpha real-positive
                std::complex<double> beta_expected(0.0, -c * s * s);
                dev = std::max(std::abs(b.alpha - alpha_expected), std::abs(b.beta - beta_expected));
                dev = std::max(dev, std::abs(b.logical_angle - theta));
            }
        }
        bool ok = dev <= 1e-12;
        passed = passed && ok;
        out << (ok ? "ok   " : "FAIL ") << "single-error amplitudes (theta=0.37), deviation "
            << format_number(dev) << "\n";
    }

    // Analytic constructors vs the oracle on random angles.
    Rng rng(seed);
    double worst_rep = 0, worst_fm = 0, worst_afm = 0, worst_sp = 0, worst_sm = 0;
    for (int t = 0; t < trials; ++t) {
        double theta = rng.next_uniform(-1.0, 1.0);
        worst_rep = std::max(worst_rep,
                             channel_deviation(repetition_channel(3, theta), oracle_channel(rep, theta)));
        worst_fm = std::max(worst_fm,
                            channel_deviation(fm_shor_channel(3, theta), oracle_channel(fm, theta)));
        worst_afm = std::max(worst_afm,
                             channel_deviation(afm_shor_channel(3, theta), oracle_channel(afm, theta)));
        worst_sp = std::max(worst_sp, channel_deviation(swapped_basis_channel(3, theta, false),
                                                        oracle_channel(splus, theta)));
        worst_sm = std::max(worst_sm, channel_deviation(swapped_basis_channel(3, theta, true),
                                                        oracle_channel(sminus, theta)));
    }
    struct Line {
        const char* label;
        double dev;
    };
    for (const Line& l : {Line{"repetition", worst_rep}, Line{"fm_shor", worst_fm},
                          Line{"afm_shor", worst_afm}, Line{"swapped_plus", worst_sp},
                          Line{"swapped_minus", worst_sm}}) {
        bool ok = l.dev <= tolerance;
        passed = passed && ok;
        max_dev = std::max(max_dev, l.dev);
        out << (ok ? "ok   " : "FAIL ") << l.label << " vs oracle over " << trials
            << " random angles, max deviation " << format_number(l.dev) << "\n";
    }

    // Even-distance decoherence-free subspace: [[4,1,2]] afm under
    // homogeneous rotations is exactly the identity channel.
    {
        CodeSpec afm2 = build_shor_code(2, ShorVariant::afm);
        double worst = 0;
        for (double theta : {0.1, 0.5, 1.0}) {
            LogicalChannel ch = oracle_channel(afm2, theta);
            worst = std::max(worst, channel_infidelity(ch));
            worst = std::max(worst, channel_deviation(ch, afm_shor_channel(2, theta)));
        }
        bool ok = worst <= 1e-12;
        passed = passed && ok;
        out << (ok ? "ok   " : "FAIL ") << "distance-2 afm decoherence-free identity, deviation "
            << format_number(worst) << "\n";
    }

    out << (passed ? "PASS" : "FAIL") << " max channel deviation " << format_number(max_dev)
        << " (tolerance " << format_number(tolerance) << ")\n";
    return VerifyReport{passed, max_dev, out.str()};
}

}  // namespace shorsim
