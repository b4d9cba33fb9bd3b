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

// Serial against OpenMP paths of the main kernels.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <vector>

#include "atlaspack/metrics.hpp"
#include "atlaspack/packer.hpp"
#include "atlaspack/parallel.hpp"
#include "atlaspack/proxies.hpp"
#include "atlaspack/synth.hpp"

namespace {

using namespace atlaspack;

Exec exec_of(const benchmark::State& state) { return state.range(1) != 0 ? Exec::Parallel : Exec::Serial; }

const ChartSet& charts(int count)
{
  static std::map<int, ChartSet> cache;
  auto it = cache.find(count);
  if (it == cache.end()) {
    SynthOptions o;
    o.seed = 42;
    o.count = count;
    it = cache.emplace(count, generate_chart_set(o)).first;
  }
  return it->second;
}

void BM_Proxies(benchmark::State& state)
{
  const ChartSet& set = charts(static_cast<int>(state.range(0)));
  ProxyOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_proxies(set, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Scan(benchmark::State& state)
{
  std::vector<std::int64_t> in(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = static_cast<std::int64_t>(i % 97);
  std::vector<std::int64_t> out(in.size());
  const Exec exec = exec_of(state);
  for (auto _ : state) {
    inclusive_scan(exec, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScaleSearch(benchmark::State& state)
{
  const ChartSet& set = charts(static_cast<int>(state.range(0)));
  AtlasSpec spec;
  spec.width = 2048;
  spec.height = 2048;
  TabiOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(pack(set, spec, options));
}

void BM_Validate(benchmark::State& state)
{
  const ChartSet& set = charts(static_cast<int>(state.range(0)));
  AtlasSpec spec;
  spec.width = 2048;
  spec.height = 2048;
  const PackResult packed = pack(set, spec);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(validate_atlas(set, packed, spec, exec));
}

}  // namespace

BENCHMARK(BM_Proxies)->ArgsProduct({{1000, 5000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->ArgsProduct({{1 << 16, 1 << 22}, {0, 1}});
BENCHMARK(BM_ScaleSearch)->ArgsProduct({{500, 2000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Validate)->ArgsProduct({{500, 2000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
