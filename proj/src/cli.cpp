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

#include "shorsim/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "shorsim/experiments.hpp"
#include "shorsim/io.hpp"
#include "shorsim/verify.hpp"

namespace shorsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

struct NoiseCli {
    std::string kind = "default";
    double theta = 0.1;
    double theta0 = 0.1;
    double delta = 0.01;
    double sigma = 0.0029;
    double gradient_delta = 0.0;
    double sigma_fast = 0.013;
    double tau_fast = 3.0;
    double sigma_slow = 0.0029;
    double tau_slow = 5000.0;
    std::uint64_t seed = 1;

    NoiseModel build() const {
        if (kind == "default") return default_logical_noise(seed);
        if (kind == "homogeneous") return NoiseModel::homogeneous(theta);
        if (kind == "gradient") return NoiseModel::gradient(theta0, delta);
        if (kind == "quasi_static") return NoiseModel::quasi_static(sigma, gradient_delta, seed);
        if (kind == "two_timescale") {
            return NoiseModel::two_timescale(sigma_fast, tau_fast, sigma_slow, tau_slow, seed);
        }
        throw CLI::ValidationError("--noise", "unknown noise kind: " + kind);
    }
};

void add_noise_options(CLI::App* cmd, NoiseCli& nc) {
    cmd->add_option("--noise", nc.kind,
                    "noise kind: default|homogeneous|gradient|quasi_static|two_timescale")
        ->capture_default_str();
    cmd->add_option("--theta", nc.theta, "homogeneous rotation angle (rad)");
    cmd->add_option("--theta0", nc.theta0, "gradient center angle (rad/ms)");
    cmd->add_option("--delta", nc.delta, "gradient step per chain position (rad/ms)");
    cmd->add_option("--sigma", nc.sigma, "quasi-static frequency std (rad/ms)");
    cmd->add_option("--gradient-delta", nc.gradient_delta,
                    "static gradient under quasi-static noise (rad/ms/position)");
    cmd->add_option("--sigma-fast", nc.sigma_fast, "fast OU frequency std (rad/ms)");
    cmd->add_option("--tau-fast", nc.tau_fast, "fast OU correlation time (ms)");
    cmd->add_option("--sigma-slow", nc.sigma_slow, "slow OU frequency std (rad/ms)");
    cmd->add_option("--tau-slow", nc.tau_slow, "slow OU correlation time (ms)");
    cmd->add_option("--seed", nc.seed, "noise RNG seed")->capture_default_str();
}

void apply_noise_config(const ojson& cfg, NoiseCli& nc) {
    if (!cfg.contains("noise")) return;
    const ojson& j = cfg["noise"];
    nc.kind = j.value("kind", nc.kind);
    nc.theta = j.value("theta", nc.theta);
    nc.theta0 = j.value("theta0", nc.theta0);
    nc.delta = j.value("delta", nc.delta);
    nc.sigma = j.value("sigma", nc.sigma);
    nc.gradient_delta = j.value("gradient_delta", nc.gradient_delta);
    nc.sigma_fast = j.value("sigma_fast", nc.sigma_fast);
    nc.tau_fast = j.value("tau_fast", nc.tau_fast);
    nc.sigma_slow = j.value("sigma_slow", nc.sigma_slow);
    nc.tau_slow = j.value("tau_slow", nc.tau_slow);
    nc.seed = j.value("seed", nc.seed);
}

std::string range_from_config(const ojson& cfg, const std::string& key, std::string fallback) {
    if (!cfg.contains(key)) return fallback;
    const ojson& j = cfg[key];
    if (j.is_string()) return j.get<std::string>();
    std::ostringstream out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ',';
        out << format_number(j[i].get<double>());
    }
    return out.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(out_path, content);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LogicalChannel build_channel(const std::string& variant, int distance, double theta) {
    if (variant == "repetition") return repetition_channel(distance, theta);
    switch (parse_variant(variant)) {
        case ShorVariant::fm: return fm_shor_channel(distance, theta);
        case ShorVariant::afm: return afm_shor_channel(distance, theta);
        case ShorVariant::swapped_plus: return swapped_basis_channel(distance, theta, false);
        case ShorVariant::swapped_minus: return swapped_basis_channel(distance, theta, true);
    }
    throw std::invalid_argument("unknown variant " + variant);
}

CodeSpec build_code(const std::string& variant, int distance, const std::string& mapping) {
    if (variant == "repetition") return build_repetition_code(distance);
    return build_shor_code(distance, parse_variant(variant), parse_mapping(mapping));
}

std::vector<std::string> row_series_names(std::size_t n_rows) {
    if (n_rows == 3) return {"left", "center", "right"};
    std::vector<std::string> names;
    for (std::size_t r = 0; r < n_rows; ++r) names.push_back("row_" + std::to_string(r));
    return names;
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        double start, stop, step;
        char c1, c2;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0) {
            throw std::invalid_argument("expected start:stop:step, got " + text);
        }
        long long count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long long i = 0; i < count; ++i) values.push_back(start + double(i) * step);
        return values;
    }
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        if (!field.empty()) values.push_back(std::stod(field));
    }
    if (values.empty()) throw std::invalid_argument("empty number list: " + text);
    return values;
}

int run_cli(int argc, const char* const* argv) {
    // A config file provides defaults; explicit flags override it.
    ojson cfg = ojson::object();
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc) {
            path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
        }
        if (!path.empty()) {
            try {
                cfg = ojson::parse(read_file(path));
            } catch (const std::exception& e) {
                std::cerr << "error: bad config file: " << e.what() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"exact simulator and analytic channels for sign-parameterized Shor codes "
                 "under correlated dephasing"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file providing defaults")
        ->expected(1);
    int threads = cfg.value("threads", 0);
    app.add_option("--threads", threads, "worker thread cap (0 = all)")
        ->envname("SHORSIM_THREADS");

    // ---- channel ----
    auto* c_cmd = app.add_subcommand("channel", "analytic logical channel for a variant and angle");
    std::string c_variant = cfg.value("variant", std::string("afm"));
    int c_distance = cfg.value("distance", 3);
    double c_theta = cfg.value("theta", 0.1);
    std::string c_out;
    c_cmd->add_option("--variant", c_variant, "repetition|fm|afm|swapped_plus|swapped_minus")
        ->capture_default_str();
    c_cmd->add_option("--distance", c_distance, "code distance (odd)")->capture_default_str();
    c_cmd->add_option("--theta", c_theta, "physical rotation angle (rad)")->capture_default_str();
    c_cmd->add_option("--out", c_out, "output JSON path (stdout if omitted)");

    // ---- oracle ----
    auto* o_cmd = app.add_subcommand("oracle", "brute-force branch dump for a code and angles");
    std::string o_variant = cfg.value("variant", std::string("fm"));
    int o_distance = cfg.value("distance", 3);
    std::string o_mapping = cfg.value("mapping", std::string("standard"));
    double o_theta = cfg.value("theta", 0.1);
    std::string o_angles;
    std::string o_out;
    o_cmd->add_option("--variant", o_variant, "repetition|fm|afm|swapped_plus|swapped_minus")
        ->capture_default_str();
    o_cmd->add_option("--distance", o_distance)->capture_default_str();
    o_cmd->add_option("--mapping", o_mapping, "standard|center_0_m2_p2")->capture_default_str();
    o_cmd->add_option("--theta", o_theta, "homogeneous angle (rad)")->capture_default_str();
    o_cmd->add_option("--angles", o_angles, "per-qubit angles, comma separated (overrides --theta)");
    o_cmd->add_option("--out,--dump-branches", o_out, "output JSON path (stdout if omitted)");

    // ---- ramsey ----
    auto* r_cmd = app.add_subcommand("ramsey", "GHZ or logical-qubit Ramsey decay curves (CSV)");
    std::string r_experiment = cfg.value("experiment", std::string("logical"));
    std::string r_variant = cfg.value("variant", std::string("fm"));
    std::string r_pattern = cfg.value("pattern", std::string("fm"));
    int r_distance = cfg.value("distance", 3);
    std::string r_mapping = cfg.value("mapping", std::string("standard"));
    int r_n = cfg.value("n", 4);
    std::string r_times = range_from_config(cfg, "times_ms", "0:280:20");
    long long r_shots = cfg.value("shots", 20000LL);
    bool r_sample = cfg.value("sample", false);
    std::string r_engine = cfg.value("engine", std::string("row_kernel"));
    std::string r_out;
    NoiseCli r_noise;
    apply_noise_config(cfg, r_noise);
    r_cmd->add_option("--experiment", r_experiment, "ghz|logical")->capture_default_str();
    r_cmd->add_option("--variant", r_variant, "fm|afm (logical)")->capture_default_str();
    r_cmd->add_option("--pattern", r_pattern, "fm|afm (ghz)")->capture_default_str();
    r_cmd->add_option("--distance", r_distance)->capture_default_str();
    r_cmd->add_option("--mapping", r_mapping)->capture_default_str();
    r_cmd->add_option("--n", r_n, "GHZ qubit count")->capture_default_str();
    r_cmd->add_option("--times", r_times, "wait times in ms, start:stop:step or list")
        ->capture_default_str();
    r_cmd->add_option("--shots", r_shots)->capture_default_str();
    r_cmd->add_flag("--sample", r_sample, "binomial measurement sampling");
    r_cmd->add_option("--engine", r_engine, "row_kernel|oracle (logical)")->capture_default_str();
    r_cmd->add_option("--out", r_out, "output CSV path (stdout if omitted)");
    add_noise_options(r_cmd, r_noise);

    // ---- fringe ----
    auto* f_cmd = app.add_subcommand("fringe", "per-row GHZ fringes after a fixed wait (CSV)");
    std::string f_variant = cfg.value("variant", std::string("fm"));
    int f_distance = cfg.value("distance", 3);
    std::string f_mapping = cfg.value("mapping", std::string("standard"));
    double f_wait = cfg.value("wait_ms", 20.0);
    std::string f_phases = range_from_config(cfg, "phases", "");
    long long f_shots = cfg.value("shots", 20000LL);
    bool f_sample = cfg.value("sample", false);
    std::string f_amplitudes = range_from_config(cfg, "row_amplitudes", "");
    std::string f_out;
    NoiseCli f_noise;
    apply_noise_config(cfg, f_noise);
    f_cmd->add_option("--variant", f_variant, "fm|afm")->capture_default_str();
    f_cmd->add_option("--distance", f_distance)->capture_default_str();
    f_cmd->add_option("--mapping", f_mapping, "standard|center_0_m2_p2")->capture_default_str();
    f_cmd->add_option("--wait", f_wait, "wait time in ms")->capture_default_str();
    f_cmd->add_option("--phases", f_phases, "analysis phases in rad (default 64 points over 2pi)");
    f_cmd->add_option("--shots", f_shots)->capture_default_str();
    f_cmd->add_flag("--sample", f_sample, "binomial measurement sampling");
    f_cmd->add_option("--row-amplitudes", f_amplitudes, "per-row contrast scale, comma separated");
    f_cmd->add_option("--out", f_out, "output CSV path (stdout if omitted)");
    add_noise_options(f_cmd, f_noise);

    // ---- sweep ----
    auto* s_cmd = app.add_subcommand("sweep", "single-round logical error vs angle (CSV)");
    std::string s_variants = cfg.value("variants", std::string("fm,afm,swapped_plus,swapped_minus"));
    int s_distance = cfg.value("distance", 3);
    std::string s_thetas = range_from_config(cfg, "thetas", "0.01:0.4:0.01");
    int s_oracle_points = cfg.value("oracle_points", 2);
    std::string s_out;
    s_cmd->add_option("--variants", s_variants, "comma separated subset of fm,afm,swapped_plus,swapped_minus")
        ->capture_default_str();
    s_cmd->add_option("--distance", s_distance)->capture_default_str();
    s_cmd->add_option("--thetas", s_thetas, "angles in rad, start:stop:step or list")
        ->capture_default_str();
    s_cmd->add_option("--oracle-points", s_oracle_points,
                      "cross-check this many grid points against the oracle (distance 3)")
        ->capture_default_str();
    s_cmd->add_option("--out", s_out, "output CSV path (stdout if omitted)");

    // ---- fit ----
    auto* t_cmd = app.add_subcommand("fit", "fit a CSV curve (JSON out)");
    std::string t_model = cfg.value("model", std::string("exp"));
    std::string t_in;
    std::string t_series;
    int t_k = cfg.value("harmonic", 3);
    bool t_weighted = false;
    std::string t_out;
    t_cmd->add_option("--model", t_model, "exp|cosine")->capture_default_str();
    t_cmd->add_option("--in", t_in, "input CSV")->required();
    t_cmd->add_option("--series", t_series, "filter rows to one series label");
    t_cmd->add_option("--k", t_k, "cosine harmonic")->capture_default_str();
    t_cmd->add_flag("--weighted", t_weighted, "use 1/stderr^2 weights from the CSV");
    t_cmd->add_option("--out", t_out, "output JSON path (stdout if omitted)");

    // ---- verify ----
    auto* v_cmd = app.add_subcommand("verify", "oracle-vs-analytic equivalence suite");
    int v_distance = cfg.value("distance", 3);
    int v_trials = cfg.value("trials", 20);
    std::uint64_t v_seed = cfg.value("seed", 7ULL);
    double v_tol = cfg.value("tolerance", 1e-9);
    std::string v_out;
    v_cmd->add_option("--distance", v_distance)->capture_default_str();
    v_cmd->add_option("--trials", v_trials)->capture_default_str();
    v_cmd->add_option("--seed", v_seed)->capture_default_str();
    v_cmd->add_option("--tolerance", v_tol)->capture_default_str();
    v_cmd->add_option("--out", v_out, "also write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_thread_count(threads);

        if (c_cmd->parsed()) {
            LogicalChannel ch = build_channel(c_variant, c_distance, c_theta);
            ojson j{{"constructor", c_variant}, {"distance", c_distance}, {"theta", c_theta}};
            j.update(channel_to_json(ch));
            emit(c_out, json_text(j));
            return 0;
        }

        if (o_cmd->parsed()) {
            CodeSpec code = build_code(o_variant, o_distance, o_mapping);
            std::vector<double> angles;
            if (!o_angles.empty()) {
                angles = parse_number_list(o_angles);
            } else {
                angles.assign(std::size_t(code.n_qubits), o_theta);
            }
            std::vector<SyndromeBranch> branches = simulate_round(code, angles);
            ojson j{{"code", code_to_json(code)},
                    {"angles", angles},
                    {"branches", branches_to_json(branches)},
                    {"channel", channel_to_json(channel_from_branches(branches))}};
            emit(o_out, json_text(j));
            return 0;
        }

        if (r_cmd->parsed()) {
            NoiseModel model = r_noise.build();
            std::vector<double> times = parse_number_list(r_times);
            RunOptions opts{r_shots, r_sample, Exec::parallel};
            std::vector<CsvRow> rows;
            if (r_experiment == "ghz") {
                std::string pattern = ghz_pattern(r_n, r_pattern == "afm");
                RamseyCurve curve = ghz_ramsey(pattern, model, times, opts);
                append_curve(rows, curve, "ghz_" + r_pattern + "_" + std::to_string(r_n));
            } else if (r_experiment == "logical") {
                CodeSpec code = build_code(r_variant, r_distance, r_mapping);
                LogicalEngine engine = r_engine == "oracle" ? LogicalEngine::oracle
                                                            : LogicalEngine::row_kernel;
                LogicalRamseyResult res = logical_ramsey(code, model, times, opts, engine);
                append_curve(rows, res.raw, "raw");
                append_curve(rows, res.corrected, "corrected");
                append_curve(rows, res.detected, "detected");
                for (std::size_t i = 0; i < times.size(); ++i) {
                    rows.push_back(CsvRow{times[i], res.accept_fraction[i], 0.0, "accept_fraction"});
                }
            } else {
                throw CLI::ValidationError("--experiment", "must be ghz or logical");
            }
            emit(r_out, to_csv("time_ms", rows));
            return 0;
        }

        if (f_cmd->parsed()) {
            NoiseModel model = f_noise.build();
            CodeSpec code = build_code(f_variant, f_distance, f_mapping);
            std::vector<double> phases;
            if (f_phases.empty()) {
                for (int i = 0; i < 64; ++i) phases.push_back(double(i) / 64.0 * kTwoPi);
            } else {
                phases = parse_number_list(f_phases);
            }
            std::vector<double> amplitudes;
            if (!f_amplitudes.empty()) amplitudes = parse_number_list(f_amplitudes);
            RunOptions opts{f_shots, f_sample, Exec::parallel};
            std::vector<RamseyCurve> curves = ghz_fringe(code, model, f_wait, phases, opts, amplitudes);
            std::vector<CsvRow> rows;
            std::vector<std::string> names = row_series_names(curves.size());
            for (std::size_t r = 0; r < curves.size(); ++r) append_curve(rows, curves[r], names[r]);
            emit(f_out, to_csv("phase_rad", rows));
            return 0;
        }

        if (s_cmd->parsed()) {
            std::vector<ShorVariant> variants;
            std::istringstream in(s_variants);
            std::string name;
            while (std::getline(in, name, ',')) {
                if (!name.empty()) variants.push_back(parse_variant(name));
            }
            std::vector<double> thetas = parse_number_list(s_thetas);
            std::vector<SweepPoint> table = single_round_sweep(variants, thetas, s_distance);
            if (s_oracle_points > 0) {
                std::vector<CodeSpec> codes;
                for (ShorVariant v : variants) codes.push_back(build_shor_code(s_distance, v));
                for (int i = 0; i < s_oracle_points; ++i) {
                    std::size_t idx = (std::size_t(i) + 1) * thetas.size() / (std::size_t(s_oracle_points) + 1);
                    if (idx >= thetas.size()) idx = thetas.size() - 1;
                    for (std::size_t vi = 0; vi < variants.size(); ++vi) {
                        std::vector<double> angles(std::size_t(codes[vi].n_qubits), thetas[idx]);
                        LogicalChannel oracle_ch =
                            channel_from_branches(simulate_round(codes[vi], angles));
                        LogicalChannel analytic =
                            build_channel(to_string(variants[vi]), s_distance, thetas[idx]);
                        if (channel_deviation(oracle_ch, analytic) > 1e-9) {
                            throw std::runtime_error("sweep oracle cross-check failed for " +
                                                     to_string(variants[vi]));
                        }
                    }
                }
            }
            std::vector<CsvRow> rows;
            for (const SweepPoint& p : table) {
                rows.push_back(CsvRow{p.theta, p.infidelity, 0.0, to_string(p.variant)});
            }
            emit(s_out, to_csv("theta_rad", rows));
            return 0;
        }

        if (t_cmd->parsed()) {
            std::vector<CsvRow> rows = parse_csv(read_file(t_in), t_series);
            if (rows.empty()) throw std::invalid_argument("no matching rows in " + t_in);
            std::vector<double> xs, ys, ws;
            for (const CsvRow& r : rows) {
                xs.push_back(r.x);
                ys.push_back(r.value);
            }
            if (t_weighted) {
                for (const CsvRow& r : rows) {
                    if (r.stderr_ <= 0) {
                        throw std::invalid_argument("--weighted needs positive stderr everywhere");
                    }
                    ws.push_back(1.0 / (r.stderr_ * r.stderr_));
                }
            }
            ojson j;
            if (t_model == "exp") {
                j = fit_to_json(fit_exp_decay(xs, ys, ws));
            } else if (t_model == "cosine") {
                j = fit_to_json(fit_cosine(xs, ys, t_k, ws));
            } else {
                throw CLI::ValidationError("--model", "must be exp or cosine");
            }
            if (!t_series.empty()) j["series"] = t_series;
            emit(t_out, json_text(j));
            return 0;
        }

        if (v_cmd->parsed()) {
            VerifyReport report = run_equivalence_suite(v_distance, v_trials, v_seed, v_tol);
            std::cout << report.text;
            if (!v_out.empty()) write_file_atomic(v_out, report.text);
            return report.passed ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("shorsim");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace shorsim
