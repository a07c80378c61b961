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

#include "shorsim/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shorsim {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string to_csv(const std::string& x_label, const std::vector<CsvRow>& rows) {
    std::ostringstream out;
    out << x_label << ",value,stderr,series\n";
    for (const CsvRow& r : rows) {
        out << format_number(r.x) << ',' << format_number(r.value) << ','
            << format_number(r.stderr_) << ',' << r.series << '\n';
    }
    return out.str();
}

std::vector<CsvRow> parse_csv(const std::string& content, const std::string& series_filter) {
    std::vector<CsvRow> rows;
    std::istringstream in(content);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            // Header row: skip if the first field is not a number.
            char* end = nullptr;
            std::strtod(line.c_str(), &end);
            if (end == line.c_str()) continue;
        }
        std::istringstream fields(line);
        std::string field;
        CsvRow row{0, 0, 0, ""};
        int idx = 0;
        while (std::getline(fields, field, ',')) {
            switch (idx) {
                case 0: row.x = std::stod(field); break;
                case 1: row.value = std::stod(field); break;
                case 2: row.stderr_ = std::stod(field); break;
                case 3: row.series = field; break;
                default: break;
            }
            ++idx;
        }
        if (idx < 2) throw std::invalid_argument("CSV row needs at least x,value: " + line);
        if (!series_filter.empty() && row.series != series_filter) continue;
        rows.push_back(row);
    }
    return rows;
}

void append_curve(std::vector<CsvRow>& rows, const RamseyCurve& curve, const std::string& series) {
    for (std::size_t i = 0; i < curve.xs.size(); ++i) {
        rows.push_back(CsvRow{curve.xs[i], curve.values[i], curve.stderrs[i], series});
    }
}

ojson channel_to_json(const LogicalChannel& ch) {
    ojson terms = ojson::array();
    for (const ChannelTerm& t : ch.terms) {
        terms.push_back(ojson{{"p", t.probability}, {"theta", t.angle}});
    }
    return ojson{{"terms", terms}, {"infidelity", channel_infidelity(ch)}};
}

ojson code_to_json(const CodeSpec& code) {
    ojson gens = ojson::array();
    for (const SignedPauli& g : code.generators) gens.push_back(to_string(g));
    ojson rows = ojson::array();
    for (const std::vector<int>& r : code.rows) rows.push_back(r);
    return ojson{{"name", code.name},
                 {"n_qubits", code.n_qubits},
                 {"generators", gens},
                 {"logical_z", to_string(code.logical_z)},
                 {"logical_x", to_string(code.logical_x)},
                 {"positions", code.positions},
                 {"rows", rows},
                 {"row_patterns", code.row_patterns}};
}

ojson branches_to_json(const std::vector<SyndromeBranch>& branches) {
    ojson arr = ojson::array();
    for (const SyndromeBranch& b : branches) {
        arr.push_back(ojson{{"syndrome", b.syndrome.bits},
                            {"probability", b.probability},
                            {"alpha", ojson{{"re", b.alpha.real()}, {"im", b.alpha.imag()}}},
                            {"beta", ojson{{"re", b.beta.real()}, {"im", b.beta.imag()}}},
                            {"logical_angle", b.logical_angle}});
    }
    return arr;
}

ojson fit_to_json(const ExpDecayFit& fit) {
    return ojson{{"model", "exp_decay"},
                 {"params", ojson{{"A", fit.amplitude}, {"Gamma", fit.gamma}}},
                 {"t2_star_ms", fit.gamma > 0 ? 1.0 / fit.gamma : 0.0},
                 {"residual_rms", fit.residual_rms},
                 {"converged", fit.converged}};
}

ojson fit_to_json(const CosineFit& fit) {
    return ojson{{"model", "cosine"},
                 {"params", ojson{{"A", fit.amplitude}, {"phi0", fit.phase0}}},
                 {"residual_rms", fit.residual_rms},
                 {"converged", fit.converged}};
}

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace shorsim
