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

#include "atlaspack/chart.hpp"

#include <algorithm>
#include <cmath>

namespace atlaspack {

double Chart::area() const
{
  double total = 0.0;
  for (const auto& t : triangles) {
    total += std::abs(signed_triangle_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]));
  }
  return total;
}

void check_chart(const Chart& chart)
{
  const std::string who = "chart " + std::to_string(chart.id);
  if (chart.vertices.size() < 3) throw AtlasError(who + ": fewer than 3 vertices");
  if (chart.triangles.empty()) throw AtlasError(who + ": no triangles");
  for (const auto& t : chart.triangles) {
    for (auto v : t) {
      if (v >= chart.vertices.size()) throw AtlasError(who + ": triangle index out of range");
    }
  }
  for (const auto& p : chart.vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw AtlasError(who + ": non-finite vertex");
  }
  if (!(chart.area() > 0.0)) throw AtlasError(who + ": zero area");
}

void check_chart_set(const ChartSet& set)
{
  if (set.charts.empty()) throw AtlasError("no charts");
  for (std::size_t i = 0; i < set.charts.size(); ++i) {
    if (set.charts[i].id != static_cast<int>(i)) {
      throw AtlasError("chart ids must be contiguous from 0 in order; found id " +
                       std::to_string(set.charts[i].id) + " at position " + std::to_string(i));
    }
    check_chart(set.charts[i]);
  }
}

void AtlasSpec::check() const
{
  if (width < 1 || height < 1) throw AtlasError("atlas dimensions must be positive");
  if (gutter < 0) throw AtlasError("gutter must be non-negative");
  if (scale_count < 1) throw AtlasError("scale count must be at least 1");
  if (t_opt_fraction && !(*t_opt_fraction >= 0.0 && *t_opt_fraction <= 1.0)) {
    throw AtlasError("t_opt fraction must lie in [0, 1]");
  }
  if (local_aabb_count < 1) throw AtlasError("local AABB count must be at least 1");
}

double AtlasSpec::effective_t_opt(std::size_t chart_count) const
{
  if (t_opt_fraction) return *t_opt_fraction;
  return chart_count > 10000 ? 0.01 : 0.0;
}

std::vector<Vec2> posed_vertices(const Chart& chart, const Pose& pose)
{
  std::vector<Vec2> out;
  out.reserve(chart.vertices.size());
  const int quarter = ((pose.rotation_deg / 90) % 4 + 4) % 4;
  for (Vec2 p : chart.vertices) {
    if (pose.prerotation != 0.0) p = rotate(p, pose.prerotation);
    for (int q = 0; q < quarter; ++q) p = {-p.y, p.x};
    if (pose.reflect_x) p.x = -p.x;
    if (pose.reflect_y) p.y = -p.y;
    out.push_back(p);
  }
  Vec2 lo{out.front()};
  for (const auto& p : out) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
  }
  for (auto& p : out) p = p - lo;
  return out;
}

std::vector<Vec2> placed_vertices(const Chart& chart, const Placement& placement)
{
  auto pts = posed_vertices(chart, placement.pose());
  const double s = placement.final_scale.value();
  for (auto& p : pts) {
    p = {p.x * s + placement.tx, p.y * s + placement.ty};
  }
  return pts;
}

std::vector<double> PackResult::per_chart_final_scale() const
{
  std::vector<double> out;
  out.reserve(placements.size());
  for (const auto& p : placements) out.push_back(p.final_scale.value());
  return out;
}

}  // namespace atlaspack
