/* Copyright 2026 The atlaspack Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace atlaspack {

/// Every kernel has a serial reference path and an OpenMP path. Both must
/// produce bit-identical output; tests compare them.
enum class Exec { Serial, Parallel };

/// Caps the OpenMP worker count; 0 restores the runtime default.
void set_worker_count(int workers);
int worker_count();

/// Calls body(i) for i in [0, n). Iterations must be independent.
template <typename Body>
void for_each_index(Exec exec, std::size_t n, Body&& body)
{
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

/// Inclusive prefix sum, out[i] = in[0] + ... + in[i]. `out` may alias `in`.
void inclusive_scan_serial(std::span<const std::int64_t> in, std::span<std::int64_t> out);

/// Two-pass blocked scan: each thread sums its static block, the block totals
/// are scanned serially, then each block adds its carry-in.
void inclusive_scan_parallel(std::span<const std::int64_t> in, std::span<std::int64_t> out);

inline void inclusive_scan(Exec exec, std::span<const std::int64_t> in, std::span<std::int64_t> out)
{
  if (exec == Exec::Serial) {
    inclusive_scan_serial(in, out);
  } else {
    inclusive_scan_parallel(in, out);
  }
}

}  // namespace atlaspack
