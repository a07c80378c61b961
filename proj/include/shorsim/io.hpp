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

#include <string>
#include <vector>

#include "json.hpp"

#include "shorsim/channel.hpp"
#include "shorsim/codes.hpp"
#include "shorsim/experiments.hpp"
#include "shorsim/fitting.hpp"
#include "shorsim/oracle.hpp"

namespace shorsim {

using ojson = nlohmann::ordered_json;

/// %.12g rendering used for every CSV number, so re-runs are byte-identical.
std::string format_number(double v);

/// Writes via a temp file in the same directory, then renames into place.
void write_file_atomic(const std::string& path, const std::string& content);

struct CsvRow {
    double x;
    double value;
    double stderr_;
    std::string series;
};

/// UTF-8 CSV with a header row; `x_label` is time_ms, phase_rad or
/// theta_rad depending on the experiment.
std::string to_csv(const std::string& x_label, const std::vector<CsvRow>& rows);

/// Parses a CSV produced by to_csv (or any x,value[,stderr[,series]] file),
/// optionally filtered to one series label.
std::vector<CsvRow> parse_csv(const std::string& content, const std::string& series_filter = "");

void append_curve(std::vector<CsvRow>& rows, const RamseyCurve& curve, const std::string& series);

ojson channel_to_json(const LogicalChannel& ch);
ojson code_to_json(const CodeSpec& code);
ojson branches_to_json(const std::vector<SyndromeBranch>& branches);
ojson fit_to_json(const ExpDecayFit& fit);
ojson fit_to_json(const CosineFit& fit);

/// dump(2) plus trailing newline, stable key order.
std::string json_text(const ojson& j);

}  // namespace shorsim
