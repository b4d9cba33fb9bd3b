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

#include "atlaspack/chameleon.hpp"

#include <algorithm>

#include "atlaspack/packer.hpp"
#include "atlaspack/proxies.hpp"
#include "atlaspack/rowpack.hpp"

namespace atlaspack {

namespace {

struct Box {
  int id = 0;
  Pose pose;
  double w = 0.0;
  double h = 0.0;
};

std::vector<Box> sorted_boxes(const ChartSet& set, const AtlasSpec& spec)
{
  const std::vector<double> angles = spec.prerotate ? prerotate(set) : std::vector<double>{};
  std::vector<Box> boxes(set.charts.size());
  for_each_index(Exec::Parallel, boxes.size(), [&](std::size_t i) {
    Box& b = boxes[i];
    b.id = set.charts[i].id;
    if (!angles.empty()) b.pose.prerotation = angles[i];
    Aabb a = compute_aabb(posed_vertices(set.charts[i], b.pose));
    if (a.width() > a.height()) {
      b.pose.rotation_deg = 90;
      a = compute_aabb(posed_vertices(set.charts[i], b.pose));
    }
    b.w = a.width();
    b.h = a.height();
  });
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.w != b.w) return a.w > b.w;
    return a.id < b.id;
  });
  return boxes;
}

PackResult pack_boxes(const std::vector<Box>& boxes, const AtlasSpec& spec, int scale_index)
{
  PackResult out;
  out.scale_count = spec.scale_count;
  const double s = Fraction{scale_index, spec.scale_count}.value();
  const int g2 = 2 * spec.gutter;
  const int n = static_cast<int>(boxes.size());
  std::vector<int> frontline(static_cast<std::size_t>(spec.width), 0);
  std::vector<Placement> placements(boxes.size());

  int row = 0;
  for (int start = 0; start < n; ++row) {
    const bool ltr = row % 2 == 0;
    // fold: boxes separated by 2g columns
    std::vector<int> xs;
    int p = 0;
    int c = start;
    for (; c < n; ++c) {
      const int w = scaled_extent(boxes[static_cast<std::size_t>(c)].w, s);
      if (p + w > spec.width) break;
      xs.push_back(ltr ? p : spec.width - p - w);
      p += w + g2;
    }
    if (c == start) {
      out.diagnostic = "box at sorted position " + std::to_string(start) + " is wider than the atlas";
      return out;
    }
    // push: read the frontline under every box, then raise it
    std::vector<int> ys(xs.size(), 0);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const int w = scaled_extent(boxes[static_cast<std::size_t>(start) + j].w, s);
      for (int x = xs[j]; x < xs[j] + w; ++x) ys[j] = std::max(ys[j], frontline[static_cast<std::size_t>(x)]);
    }
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const Box& b = boxes[static_cast<std::size_t>(start) + j];
      const int w = scaled_extent(b.w, s);
      const int v = ys[j] + scaled_extent(b.h, s) + g2;
      for (int x = std::max(0, xs[j] - g2); x < std::min(spec.width, xs[j] + w + g2); ++x) {
        int& f = frontline[static_cast<std::size_t>(x)];
        f = std::max(f, v);
      }
      Placement& pl = placements[static_cast<std::size_t>(b.id)];
      pl.chart_id = b.id;
      pl.rotation_deg = b.pose.rotation_deg;
      pl.prerotation_angle = b.pose.prerotation;
      pl.tx = xs[j];
      pl.ty = ys[j];
      pl.final_scale = Fraction{scale_index, spec.scale_count};
    }
    const int score = *std::max_element(frontline.begin(), frontline.end());
    if (score - g2 > spec.height) {
      out.diagnostic = "row " + std::to_string(row) + " overflows the atlas height";
      return out;
    }
    start = c;
  }
  out.success = true;
  out.scale_index = scale_index;
  out.placements = std::move(placements);
  out.stats.rows = row;
  out.stats.modes.assign(boxes.size(), ChartMode::Sequential);
  return out;
}

}  // namespace

PackResult chameleon_pack_at_scale(const ChartSet& set, const AtlasSpec& spec, int scale_index)
{
  check_chart_set(set);
  spec.check();
  return pack_boxes(sorted_boxes(set, spec), spec, scale_index);
}

PackResult chameleon_pack(const ChartSet& set, const AtlasSpec& spec, Exec exec)
{
  check_chart_set(set);
  spec.check();
  const std::vector<Box> boxes = sorted_boxes(set, spec);
  std::vector<PackResult> cands(static_cast<std::size_t>(spec.scale_count) + 1);
  for_each_index(exec, static_cast<std::size_t>(spec.scale_count), [&](std::size_t j) {
    const int index = spec.scale_count - static_cast<int>(j);
    cands[static_cast<std::size_t>(index)] = pack_boxes(boxes, spec, index);
  });
  for (int i = spec.scale_count; i >= 1; --i) {
    if (cands[static_cast<std::size_t>(i)].success) return std::move(cands[static_cast<std::size_t>(i)]);
  }
  PackResult fail;
  fail.scale_count = spec.scale_count;
  fail.diagnostic = "no scale fits; at scale 1/" + std::to_string(spec.scale_count) + ": " + cands[1].diagnostic;
  return fail;
}

}  // namespace atlaspack
