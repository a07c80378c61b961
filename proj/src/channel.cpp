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

#include "shorsim/channel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shorsim {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kMergeTol = 1e-12;

void require_odd(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("repetition structure needs odd n");
}

void require_in_domain(double theta) {
    if (!(std::abs(theta) < kPi)) {
        throw std::invalid_argument("rotation angle must satisfy |theta| < pi");
    }
}

double binomial(int n, int w) {
    double b = 1;
    for (int i = 0; i < w; ++i) b = b * double(n - i) / double(i + 1);
    return b;
}

}  // namespace

LogicalChannel canonicalize(const LogicalChannel& ch) {
    LogicalChannel out;
    std::vector<ChannelTerm> terms = ch.terms;
    std::sort(terms.begin(), terms.end(),
              [](const ChannelTerm& a, const ChannelTerm& b) { return a.angle < b.angle; });
    for (const ChannelTerm& t : terms) {
        if (!out.terms.empty() && std::abs(t.angle - out.terms.back().angle) <= kMergeTol) {
            out.terms.back().probability += t.probability;
        } else {
            out.terms.push_back(t);
        }
    }
    return out;
}

double total_probability(const LogicalChannel& ch) {
    double p = 0;
    for (const ChannelTerm& t : ch.terms) p += t.probability;
    return p;
}

double channel_infidelity(const LogicalChannel& ch) {
    double inf = 0;
    for (const ChannelTerm& t : ch.terms) {
        double s = std::sin(0.5 * t.angle);
        inf += t.probability * s * s;
    }
    return inf;
}

double p_nw(int n, int w, double theta) {
    require_odd(n);
    if (w < 0 || w > (n - 1) / 2) throw std::invalid_argument("weight w out of range");
    double c = std::cos(0.5 * theta);
    double s = std::sin(0.5 * theta);
    double low = std::pow(c, n - w) * std::pow(s, w);
    double high = std::pow(c, w) * std::pow(s, n - w);
    return binomial(n, w) * (low * low + high * high);
}

double theta_nw(int n, int w, double theta) {
    require_odd(n);
    if (w < 0 || w > (n - 1) / 2) throw std::invalid_argument("weight w out of range");
    require_in_domain(theta);
    int m = n - 2 * w;  // odd, >= 1
    double sign = (((m - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * 2.0 * std::atan(std::pow(std::tan(0.5 * theta), m));
}

LogicalChannel repetition_channel(int n, double theta) {
    require_odd(n);
    require_in_domain(theta);
    LogicalChannel ch;
    for (int w = 0; w <= (n - 1) / 2; ++w) {
        ch.terms.push_back(ChannelTerm{p_nw(n, w, theta), theta_nw(n, w, theta)});
    }
    return canonicalize(ch);
}

LogicalChannel fm_shor_channel(int n, double theta) {
    require_odd(n);
    if (!(std::abs(double(n) * theta) < kPi)) {
        throw std::invalid_argument("fm channel needs |n*theta| < pi");
    }
    return repetition_channel(n, double(n) * theta);
}

LogicalChannel afm_shor_channel(int n, double theta) {
    if (n < 1) throw std::invalid_argument("distance must be >= 1");
    if (n % 2 == 0) {
        // Decoherence-free: homogeneous rotations cancel within every row.
        return LogicalChannel{{ChannelTerm{1.0, 0.0}}};
    }
    return repetition_channel(n, theta);
}

LogicalChannel swapped_basis_channel(int n, double theta, bool alternating) {
    require_odd(n);
    require_in_domain(theta);
    const int n_w = (n - 1) / 2 + 1;
    std::vector<double> probs(static_cast<std::size_t>(n_w));
    std::vector<double> angles(static_cast<std::size_t>(n_w));
    for (int w = 0; w < n_w; ++w) {
        probs[std::size_t(w)] = p_nw(n, w, theta);
        angles[std::size_t(w)] = theta_nw(n, w, theta);
    }
    LogicalChannel ch;
    std::vector<int> idx(std::size_t(n), 0);
    while (true) {
        double p = 1, a = 0;
        for (int r = 0; r < n; ++r) {
            p *= probs[std::size_t(idx[std::size_t(r)])];
            double term = angles[std::size_t(idx[std::size_t(r)])];
            a += (alternating && (r % 2 == 1)) ? -term : term;
        }
        ch.terms.push_back(ChannelTerm{p, a});
        int r = 0;
        while (r < n && ++idx[std::size_t(r)] == n_w) {
            idx[std::size_t(r)] = 0;
            ++r;
        }
        if (r == n) break;
    }
    return canonicalize(ch);
}

void gauge_fix_branch(std::complex<double>& alpha, std::complex<double>& beta) {
    double mag = std::abs(alpha);
    if (mag > 0) {
        std::complex<double> rot = std::conj(alpha) / mag;
        alpha = mag;
        beta *= rot;
    } else if (std::abs(beta) > 0) {
        beta = std::abs(beta);
    }
}

double branch_angle(const std::complex<double>& alpha_fixed, const std::complex<double>& beta_fixed) {
    // After gauge fixing, unitarity forces beta = -i b with b real.
    double b = -beta_fixed.imag();
    double a = alpha_fixed.real();
    if (a <= 0 && std::abs(b) < 1e-300) return 0.0;
    double theta = 2.0 * std::atan2(b, a);
    if (theta <= -kPi) theta = kPi;
    return theta;
}

std::vector<CosetBranch> repetition_coset_branches(std::span<const double> angles) {
    const int n = static_cast<int>(angles.size());
    require_odd(n);
    std::vector<std::complex<double>> cos_half(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> msin_half(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cos_half[std::size_t(i)] = std::cos(0.5 * angles[std::size_t(i)]);
        msin_half[std::size_t(i)] = std::complex<double>(0, -std::sin(0.5 * angles[std::size_t(i)]));
    }
    std::vector<CosetBranch> out;
    out.reserve(std::size_t(1) << (n - 1));
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        if (2 * std::popcount(mask) >= n + 1) continue;  // keep the lower-weight coset rep
        std::complex<double> alpha = 1, beta = 1;
        for (int i = 0; i < n; ++i) {
            bool in = (mask >> i) & 1u;
            alpha *= in ? msin_half[std::size_t(i)] : cos_half[std::size_t(i)];
            beta *= in ? cos_half[std::size_t(i)] : msin_half[std::size_t(i)];
        }
        gauge_fix_branch(alpha, beta);
        CosetBranch b;
        b.correctable_mask = mask;
        b.alpha = alpha;
        b.beta = beta;
        b.probability = std::norm(alpha) + std::norm(beta);
        b.angle = branch_angle(alpha, beta);
        out.push_back(b);
    }
    return out;
}

LogicalChannel channel_from_coset_branches(std::span<const CosetBranch> branches) {
    LogicalChannel ch;
    for (const CosetBranch& b : branches) ch.terms.push_back(ChannelTerm{b.probability, b.angle});
    return canonicalize(ch);
}

std::vector<double> gradient_phases(const CodeSpec& code, double theta0, double delta) {
    if (code.rows.empty() || code.row_patterns.size() != code.rows.size()) {
        throw std::invalid_argument(code.name + " lacks GHZ row structure");
    }
    std::vector<double> phases;
    for (std::size_t r = 0; r < code.rows.size(); ++r) {
        const std::vector<int>& row = code.rows[r];
        const std::string& pattern = code.row_patterns[r];
        double phase = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            double theta_x = theta0 + double(code.positions[std::size_t(row[i])]) * delta;
            phase += (pattern[i] == '1') ? -theta_x : theta_x;
        }
        phases.push_back(phase);
    }
    return phases;
}

}  // namespace shorsim
