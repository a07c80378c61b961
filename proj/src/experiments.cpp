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

#include "shorsim/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shorsim/oracle.hpp"

namespace shorsim {

namespace {

constexpr std::uint64_t kMeasSalt = 0x6d65617375726521ULL;
constexpr std::uint64_t kPointStride = 1ULL << 32;

void check_options(const RunOptions& opts) {
    if (opts.shots < 1) throw std::invalid_argument("shots must be >= 1");
}

// Throwing inside an OpenMP region aborts, so validate inputs up front.
void check_times(std::span<const double> times) {
    for (double t : times) {
        if (t < 0) throw std::invalid_argument("wait times must be non-negative");
    }
}

void check_ghz_rows(const CodeSpec& code) {
    if (code.rows.empty() || code.row_patterns.size() != code.rows.size()) {
        throw std::invalid_argument(code.name + " lacks GHZ row structure");
    }
    if (code.rows.size() % 2 == 0) {
        throw std::invalid_argument("logical Ramsey needs an odd number of rows");
    }
}

struct MeanErr {
    double mean;
    double stderr_;
};

MeanErr mean_and_stderr(std::span<const double> v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= double(v.size());
    if (v.size() < 2) return {mean, 0.0};
    double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (double(v.size()) * double(v.size() - 1)))};
}

MeanErr weighted_mean_and_stderr(std::span<const double> v, std::span<const double> w) {
    double sw = 0, swv = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        sw += w[i];
        swv += w[i] * v[i];
    }
    if (sw <= 0) return {0.0, 0.0};
    double mean = swv / sw;
    double ss = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ss += w[i] * w[i] * (v[i] - mean) * (v[i] - mean);
    }
    return {mean, std::sqrt(ss) / sw};
}

int sample_sign(Rng& rng, double expectation_value) {
    double p_plus = 0.5 * (1.0 + std::clamp(expectation_value, -1.0, 1.0));
    return rng.next_double() <= p_plus ? +1 : -1;
}

// Row-level branch view shared by both logical_ramsey engines.
struct ShotBranches {
    double raw;  // parity expectation without correction
    std::vector<ChannelTerm> terms;
    std::vector<int> correction_weights;  // physical weight parity source
    std::size_t trivial_index;
};

ShotBranches row_kernel_shot(const CodeSpec& code, std::span<const double> angles) {
    const std::size_t n_rows = code.rows.size();
    std::vector<double> row_phases(n_rows);
    std::vector<double> row_angles;
    for (std::size_t r = 0; r < n_rows; ++r) {
        row_angles.clear();
        for (int q : code.rows[r]) row_angles.push_back(angles[std::size_t(q)]);
        row_phases[r] = ghz_relative_phase(code.row_patterns[r], row_angles);
    }
    ShotBranches out;
    out.raw = 1.0;
    for (double p : row_phases) out.raw *= std::cos(p);
    std::vector<CosetBranch> branches = repetition_coset_branches(row_phases);
    out.terms.reserve(branches.size());
    out.correction_weights.reserve(branches.size());
    out.trivial_index = 0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        out.terms.push_back(ChannelTerm{branches[i].probability, branches[i].angle});
        out.correction_weights.push_back(std::popcount(branches[i].correctable_mask));
        if (branches[i].correctable_mask == 0) out.trivial_index = i;
    }
    return out;
}

ShotBranches oracle_shot(const CodeSpec& code, std::span<const double> angles) {
    ShotBranches out;
    StateVector rotated = apply_z_rotations(code.codeword_zero, angles);
    std::uint32_t all = (code.n_qubits == 32 ? ~0u : (1u << code.n_qubits) - 1);
    out.raw = expectation(rotated, SignedPauli::x_string(code.n_qubits, all));
    std::vector<SyndromeBranch> branches = simulate_round(code, angles);
    out.trivial_index = branches.size();
    for (std::size_t i = 0; i < branches.size(); ++i) {
        out.terms.push_back(ChannelTerm{branches[i].probability, branches[i].logical_angle});
        out.correction_weights.push_back(decode_min_weight(code, branches[i].syndrome).weight());
        if (branches[i].syndrome.trivial()) out.trivial_index = i;
    }
    if (out.trivial_index == branches.size()) {
        throw std::runtime_error("trivial syndrome branch missing");
    }
    return out;
}

}  // namespace

std::string ghz_pattern(int n, bool afm) {
    if (n < 1) throw std::invalid_argument("GHZ state needs at least one qubit");
    std::string p;
    for (int i = 0; i < n; ++i) p.push_back(afm && (i % 2 == 1) ? '1' : '0');
    return p;
}

std::vector<int> ghz_positions(int n) {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[std::size_t(i)] = i - (n - 1) / 2;
    return pos;
}

RamseyCurve ghz_ramsey(const std::string& pattern, const NoiseModel& model,
                       std::span<const double> times_ms, const RunOptions& opts) {
    check_options(opts);
    check_times(times_ms);
    const int n = static_cast<int>(pattern.size());
    const std::vector<int> positions = ghz_positions(n);
    const std::size_t shots = std::size_t(opts.shots);

    RamseyCurve curve;
    curve.xs.assign(times_ms.begin(), times_ms.end());
    curve.shots = opts.shots;

    std::vector<double> re(shots), im(shots);
    for (std::size_t ti = 0; ti < times_ms.size(); ++ti) {
        const double t = times_ms[ti];
        if (!opts.sample) {
            parallel_for(shots, opts.exec, [&](std::size_t k) {
                std::vector<double> angles = sample_angles(model, positions, t, k);
                double d = ghz_relative_phase(pattern, angles);
                re[k] = std::cos(d);
                im[k] = std::sin(d);
            });
        } else {
            parallel_for(shots, opts.exec, [&](std::size_t k) {
                std::vector<double> angles = sample_angles(model, positions, t, k);
                double d = ghz_relative_phase(pattern, angles);
                Rng meas = Rng::derived(model.seed ^ kMeasSalt, k * kPointStride + ti);
                // Alternate shots between the two fringe quadratures.
                if (k % 2 == 0) {
                    re[k] = sample_sign(meas, std::cos(d));
                    im[k] = 0;
                } else {
                    im[k] = sample_sign(meas, std::sin(d));
                    re[k] = 0;
                }
            });
        }

        double contrast, se;
        if (!opts.sample) {
            double mx = 0, my = 0;
            for (std::size_t k = 0; k < shots; ++k) {
                mx += re[k];
                my += im[k];
            }
            mx /= double(shots);
            my /= double(shots);
            contrast = std::hypot(mx, my);
            // Error of the per-shot projection onto the mean direction.
            double ux = contrast > 0 ? mx / contrast : 1.0;
            double uy = contrast > 0 ? my / contrast : 0.0;
            double ss = 0;
            for (std::size_t k = 0; k < shots; ++k) {
                double proj = re[k] * ux + im[k] * uy;
                ss += (proj - contrast) * (proj - contrast);
            }
            se = shots > 1 ? std::sqrt(ss / (double(shots) * double(shots - 1))) : 0.0;
        } else {
            std::vector<double> xs, ys;
            xs.reserve(shots / 2 + 1);
            ys.reserve(shots / 2);
            for (std::size_t k = 0; k < shots; ++k) {
                (k % 2 == 0 ? xs : ys).push_back(k % 2 == 0 ? re[k] : im[k]);
            }
            MeanErr ex = mean_and_stderr(xs);
            MeanErr ey = ys.empty() ? MeanErr{0.0, 0.0} : mean_and_stderr(ys);
            contrast = std::hypot(ex.mean, ey.mean);
            se = contrast > 0 ? std::sqrt(ex.mean * ex.mean * ex.stderr_ * ex.stderr_ +
                                          ey.mean * ey.mean * ey.stderr_ * ey.stderr_) /
                                    contrast
                              : std::max(ex.stderr_, ey.stderr_);
        }
        curve.values.push_back(contrast);
        curve.stderrs.push_back(se);
    }
    return curve;
}

LogicalRamseyResult logical_ramsey(const CodeSpec& code, const NoiseModel& model,
                                   std::span<const double> times_ms, const RunOptions& opts,
                                   LogicalEngine engine) {
    check_options(opts);
    check_times(times_ms);
    check_ghz_rows(code);
    const std::size_t shots = std::size_t(opts.shots);

    LogicalRamseyResult result;
    for (RamseyCurve* c : {&result.raw, &result.corrected, &result.detected}) {
        c->xs.assign(times_ms.begin(), times_ms.end());
        c->shots = opts.shots;
    }

    std::vector<double> raw_v(shots), corr_v(shots), det_v(shots), det_w(shots);
    for (std::size_t ti = 0; ti < times_ms.size(); ++ti) {
        const double t = times_ms[ti];
        parallel_for(shots, opts.exec, [&](std::size_t k) {
            std::vector<double> angles = sample_angles(model, code.positions, t, k);
            ShotBranches shot = engine == LogicalEngine::row_kernel ? row_kernel_shot(code, angles)
                                                                    : oracle_shot(code, angles);
            if (!opts.sample) {
                raw_v[k] = shot.raw;
                double corr = 0;
                for (const ChannelTerm& term : shot.terms) {
                    corr += term.probability * std::cos(term.angle);
                }
                corr_v[k] = corr;
                det_v[k] = std::cos(shot.terms[shot.trivial_index].angle);
                det_w[k] = shot.terms[shot.trivial_index].probability;
            } else {
                // One measured bitstring per shot: the syndrome branch and the
                // corrected parity outcome determine the raw and detected
                // outcomes of the same record.
                Rng meas = Rng::derived(model.seed ^ kMeasSalt, k * kPointStride + ti);
                double u = meas.next_double();
                std::size_t pick = shot.terms.size() - 1;
                double acc = 0;
                for (std::size_t i = 0; i < shot.terms.size(); ++i) {
                    acc += shot.terms[i].probability;
                    if (u <= acc) {
                        pick = i;
                        break;
                    }
                }
                int corrected_outcome = sample_sign(meas, std::cos(shot.terms[pick].angle));
                int raw_outcome =
                    (shot.correction_weights[pick] % 2 == 0) ? corrected_outcome : -corrected_outcome;
                raw_v[k] = raw_outcome;
                corr_v[k] = corrected_outcome;
                if (pick == shot.trivial_index) {
                    det_v[k] = corrected_outcome;
                    det_w[k] = 1.0;
                } else {
                    det_v[k] = 0.0;
                    det_w[k] = 0.0;
                }
            }
        });

        MeanErr raw_me = mean_and_stderr(raw_v);
        MeanErr corr_me = mean_and_stderr(corr_v);
        MeanErr det_me = weighted_mean_and_stderr(det_v, det_w);
        result.raw.values.push_back(raw_me.mean);
        result.raw.stderrs.push_back(raw_me.stderr_);
        result.corrected.values.push_back(corr_me.mean);
        result.corrected.stderrs.push_back(corr_me.stderr_);
        result.detected.values.push_back(det_me.mean);
        result.detected.stderrs.push_back(det_me.stderr_);
        double accept = 0;
        for (double w : det_w) accept += w;
        result.accept_fraction.push_back(accept / double(shots));
    }
    return result;
}

std::vector<RamseyCurve> ghz_fringe(const CodeSpec& code, const NoiseModel& model, double wait_ms,
                                    std::span<const double> phases, const RunOptions& opts,
                                    std::span<const double> row_amplitudes) {
    check_options(opts);
    check_times(std::vector<double>{wait_ms});
    check_ghz_rows(code);
    const std::size_t n_rows = code.rows.size();
    const int row_size = static_cast<int>(code.rows[0].size());
    if (!row_amplitudes.empty() && row_amplitudes.size() != n_rows) {
        throw std::invalid_argument("need one amplitude per row");
    }
    for (double a : row_amplitudes) {
        if (a < 0.0 || a > 1.0) {
            throw std::invalid_argument("row amplitudes are contrast scales in [0, 1]");
        }
    }
    const std::size_t shots = std::size_t(opts.shots);

    // Row phases depend on the shot but not on the analysis phase.
    std::vector<double> shot_phase(shots * n_rows);
    parallel_for(shots, opts.exec, [&](std::size_t k) {
        std::vector<double> angles = sample_angles(model, code.positions, wait_ms, k);
        std::vector<double> local;
        for (std::size_t r = 0; r < n_rows; ++r) {
            local.clear();
            for (int q : code.rows[r]) local.push_back(angles[std::size_t(q)]);
            shot_phase[k * n_rows + r] = ghz_relative_phase(code.row_patterns[r], local);
        }
    });

    std::vector<RamseyCurve> curves(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        curves[r].xs.assign(phases.begin(), phases.end());
        curves[r].shots = opts.shots;
        curves[r].values.resize(phases.size());
        curves[r].stderrs.resize(phases.size());
        const double amp = row_amplitudes.empty() ? 1.0 : row_amplitudes[r];
        parallel_for(phases.size(), opts.exec, [&](std::size_t j) {
            double mean = 0, ss = 0;
            if (!opts.sample) {
                std::size_t count = 0;
                for (std::size_t k = 0; k < shots; ++k) {
                    double v = amp * std::cos(double(row_size) * phases[j] + shot_phase[k * n_rows + r]);
                    ++count;
                    double d = v - mean;
                    mean += d / double(count);
                    ss += d * (v - mean);
                }
                curves[r].values[j] = mean;
                curves[r].stderrs[j] =
                    shots > 1 ? std::sqrt(ss / double(shots - 1) / double(shots)) : 0.0;
            } else {
                std::size_t count = 0;
                for (std::size_t k = 0; k < shots; ++k) {
                    double expect =
                        amp * std::cos(double(row_size) * phases[j] + shot_phase[k * n_rows + r]);
                    Rng meas = Rng::derived(model.seed ^ kMeasSalt,
                                            k * kPointStride + j * n_rows + r);
                    double v = sample_sign(meas, expect);
                    ++count;
                    double d = v - mean;
                    mean += d / double(count);
                    ss += d * (v - mean);
                }
                curves[r].values[j] = mean;
                curves[r].stderrs[j] =
                    shots > 1 ? std::sqrt(ss / double(shots - 1) / double(shots)) : 0.0;
            }
        });
    }
    return curves;
}

std::vector<SweepPoint> single_round_sweep(std::span<const ShorVariant> variants,
                                           std::span<const double> thetas, int distance,
                                           Exec exec) {
    // Constructors throw on out-of-domain angles; do it here, not inside the
    // parallel region.
    constexpr double pi = std::numbers::pi_v<double>;
    double max_abs = 0;
    for (double t : thetas) max_abs = std::max(max_abs, std::abs(t));
    for (const ShorVariant v : variants) {
        double bound = v == ShorVariant::fm ? pi / double(distance) : pi;
        if (max_abs >= bound) {
            throw std::invalid_argument("sweep angle outside the decodable domain for " +
                                        to_string(v));
        }
    }
    std::vector<SweepPoint> table(variants.size() * thetas.size());
    parallel_for(table.size(), exec, [&](std::size_t i) {
        const ShorVariant v = variants[i / thetas.size()];
        const double theta = thetas[i % thetas.size()];
        LogicalChannel ch;
        switch (v) {
            case ShorVariant::fm: ch = fm_shor_channel(distance, theta); break;
            case ShorVariant::afm: ch = afm_shor_channel(distance, theta); break;
            case ShorVariant::swapped_plus: ch = swapped_basis_channel(distance, theta, false); break;
            case ShorVariant::swapped_minus: ch = swapped_basis_channel(distance, theta, true); break;
        }
        table[i] = SweepPoint{v, theta, channel_infidelity(ch)};
    });
    return table;
}

NoiseModel default_logical_noise(std::uint64_t seed) {
    // Fast component: mechanical/laser phase noise with a few-ms correlation
    // time; slow component: quasi-static field drift over the full curve.
    // Tuned so the fm distance-3 corrected curve fits to T2* of ~115 ms.
    return NoiseModel::two_timescale(0.0060, 3.0, 0.0034, 5000.0, seed);
}

}  // namespace shorsim
