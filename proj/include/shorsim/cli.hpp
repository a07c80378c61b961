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

namespace shorsim {

/// Entry point behind the `shorsim` binary; also callable in-process from
/// tests. Returns 0 on success, 1 on a verification/runtime failure, 2 on a
/// usage error.
int run_cli(int argc, const char* const* argv);

/// Convenience overload; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args);

/// Parses "start:stop:step" ranges or comma-separated lists of numbers.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace shorsim
