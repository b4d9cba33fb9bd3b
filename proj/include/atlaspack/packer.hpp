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
#include <vector>

#include "atlaspack/chart.hpp"
#include "atlaspack/parallel.hpp"
#include "atlaspack/proxies.hpp"
#include "atlaspack/rowpack.hpp"

namespace atlaspack {

struct TabiOptions {
  bool tight = true;
  bool balanced = true;
  /// Parallelism over scale candidates and per-chart kernels.
  Exec exec = Exec::Parallel;
};

/// Negative OBB angle per chart, so the chosen box becomes axis aligned.
std::vector<double> prerotate(const ChartSet& set);

/// Proxies in packing order, shared by every scale candidate.
struct PreparedInput {
  ProxySet proxies;
  std::vector<double> prerotation;  // by chart id; empty when disabled
  std::vector<const ChartProxy*> ordered;
  std::vector<double> area;  // by packing position
};

PreparedInput prepare_input(const ChartSet& set, const AtlasSpec& spec, const TabiOptions& options);

struct ScaleCandidate {
  int index = 0;
  bool success = false;
  std::vector<Placement> placements;  // by chart id
  PackStats stats;
  double area_weighted_final_scale = 0.0;
  bool used_prefix = false;
  std::string diagnostic;
  /// Bytes held by the per-scale working set at the end of the attempt.
  std::size_t working_bytes = 0;
};

/// Switch test for the hybrid path: no pending knee and the next row's tallest
/// (scaled) chart below t_opt of the atlas height.
bool should_switch_to_prefix(int next_tallest_height, double t_opt_fraction, int atlas_height, bool pending_knee);

/// Prefix-folded row scales are multiples of 1/kPrefixSubdiv, so final scales
/// stay exact fractions.
inline constexpr std::int64_t kPrefixSubdiv = 65536;

/// Line positions from one inclusive scan of the per-chart advances; a chart
/// goes to row floor(start / width).
struct PrefixLayout {
  std::vector<std::int64_t> start;
  std::vector<int> row;
};

PrefixLayout prefix_layout(std::span<const std::int64_t> advance, int width, Exec exec);

/// Largest multiple of 1/kPrefixSubdiv not above min(1, width / extent), in
/// units of 1/kPrefixSubdiv.
std::int64_t intermediate_subdivision(std::int64_t extent, int width);

/// Folds every chart from the packer's current row onward with one prefix sum
/// of horizontal offsets, rescales rows that overflow the atlas width and
/// pushes them with a fixed one-left, two-right direction cycle.
void prefix_fold_remaining(RowPacker& packer, Exec exec);

/// Sequential row packing at one scale, with the hybrid switch when t_opt > 0.
ScaleCandidate pack_at_scale(const ChartSet& set, const PreparedInput& input, const AtlasSpec& spec, int scale_index,
                             const TabiOptions& options = {});

/// Evaluates every scale candidate and keeps the best successful one.
PackResult pack(const ChartSet& set, const AtlasSpec& spec, const TabiOptions& options = {});

/// All candidates, by index 1..scale_count (element 0 unused).
std::vector<ScaleCandidate> pack_all_scales(const ChartSet& set, const AtlasSpec& spec,
                                            const TabiOptions& options = {});

/// Deterministic reduction over candidates: largest area-weighted final scale,
/// ties to the larger index. Returns 0 when none succeeded.
int best_candidate(const std::vector<ScaleCandidate>& candidates);

}  // namespace atlaspack
