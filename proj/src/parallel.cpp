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

#include "atlaspack/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

namespace atlaspack {

namespace {
int default_workers = 0;
}

void set_worker_count(int workers)
{
  if (default_workers == 0) default_workers = omp_get_max_threads();
  omp_set_num_threads(workers > 0 ? workers : default_workers);
}

int worker_count() { return omp_get_max_threads(); }

void inclusive_scan_serial(std::span<const std::int64_t> in, std::span<std::int64_t> out)
{
  assert(out.size() >= in.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    sum += in[i];
    out[i] = sum;
  }
}

void inclusive_scan_parallel(std::span<const std::int64_t> in, std::span<std::int64_t> out)
{
  assert(out.size() >= in.size());
  const auto n = static_cast<std::int64_t>(in.size());
  const int threads = std::max(1, omp_get_max_threads());
  // Small inputs do not amortize the extra pass.
  if (threads < 2 || n < 4096) {
    inclusive_scan_serial(in, out);
    return;
  }

  std::vector<std::int64_t> carry(static_cast<std::size_t>(threads) + 1, 0);
#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
    const int nt = omp_get_num_threads();
    const std::int64_t lo = n * tid / nt;
    const std::int64_t hi = n * (tid + 1) / nt;

    std::int64_t sum = 0;
    for (std::int64_t i = lo; i < hi; ++i) {
      sum += in[i];
      out[i] = sum;
    }
    carry[tid + 1] = sum;
#pragma omp barrier
#pragma omp single
    {
      for (int t = 1; t <= nt; ++t) carry[t] += carry[t - 1];
    }
    const std::int64_t offset = carry[tid];
    for (std::int64_t i = lo; i < hi; ++i) out[i] += offset;
  }
}

}  // namespace atlaspack
