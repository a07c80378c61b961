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

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shorsim {

/// Execution policy for the shot/sweep loops. Work items write to disjoint
/// preallocated slots and reductions run serially afterwards, so serial and
/// parallel runs produce bit-identical results; `serial` is the reference
/// path kept for testing and benchmarking.
enum class Exec { serial, parallel };

/// Number of OpenMP threads a parallel region will use (1 without OpenMP).
int max_threads();

/// Caps the OpenMP thread count; n <= 0 restores the default.
void set_thread_count(int n);

template <typename F>
void parallel_for(std::size_t count, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            body(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace shorsim
