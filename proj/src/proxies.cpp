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

#include "atlaspack/proxies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace atlaspack {

namespace {

// Adds to `out` the other-axis extent of the part of segment p->q whose
// coordinate along the slicing axis lies in the closed range [lo, hi]: the
// endpoints inside the range and the crossings of lo and hi.
void clip_segment(Vec2 p, Vec2 q, bool along_x, double lo, double hi, Interval& out)
{
  const double pa = along_x ? p.x : p.y;
  const double qa = along_x ? q.x : q.y;
  const double pb = along_x ? p.y : p.x;
  const double qb = along_x ? q.y : q.x;
  if (pa >= lo && pa <= hi) out.include(pb);
  if (qa >= lo && qa <= hi) out.include(qb);
  if (pa == qa) return;
  const double slope = edge_slope(pa, pb, qa, qb);
  const double emin = std::min(pa, qa);
  const double emax = std::max(pa, qa);
  if (lo > emin && lo < emax) out.include(pb + (lo - pa) * slope);
  if (hi > emin && hi < emax) out.include(pb + (hi - pa) * slope);
}

struct SliceGrid {
  double origin = 0.0;
  double end = 0.0;
  int k = 1;

  double lo(int i) const { return i == 0 ? origin : origin + (end - origin) * i / k; }
  double hi(int i) const { return i == k - 1 ? end : origin + (end - origin) * (i + 1) / k; }
  int index_of(double v) const
  {
    const double len = end - origin;
    if (len <= 0.0) return 0;
    return static_cast<int>(std::floor((v - origin) / len * k));
  }
};

std::vector<Interval> slice_extents(std::span<const Vec2> vertices, std::span<const Triangle> triangles,
                                    const SliceGrid& grid, bool along_x)
{
  std::vector<Interval> slices(static_cast<std::size_t>(grid.k));
  for (const auto& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      const Vec2 p = vertices[t[e]];
      const Vec2 q = vertices[t[(e + 1) % 3]];
      const double a0 = std::min(along_x ? p.x : p.y, along_x ? q.x : q.y);
      const double a1 = std::max(along_x ? p.x : p.y, along_x ? q.x : q.y);
      const int first = std::max(0, grid.index_of(a0) - 1);
      const int last = std::min(grid.k - 1, grid.index_of(a1) + 1);
      for (int i = first; i <= last; ++i) {
        clip_segment(p, q, along_x, grid.lo(i), grid.hi(i), slices[static_cast<std::size_t>(i)]);
      }
    }
  }
  return slices;
}

// Boundary staircase along the primary axis: the intersection of the primary
// slice boxes with the cross slice boxes.
Staircase merge_boundaries(const std::vector<Interval>& primary, const SliceGrid& primary_grid,
                           const std::vector<Interval>& cross, const SliceGrid& cross_grid)
{
  std::vector<double> breaks;
  breaks.reserve(2 * (primary.size() + cross.size()) + 2);
  for (int i = 0; i <= primary_grid.k; ++i) {
    breaks.push_back(i == primary_grid.k ? primary_grid.end : primary_grid.lo(i));
  }
  for (const auto& c : cross) {
    if (c.empty()) continue;
    if (c.lo > primary_grid.origin && c.lo < primary_grid.end) breaks.push_back(c.lo);
    if (c.hi > primary_grid.origin && c.hi < primary_grid.end) breaks.push_back(c.hi);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  Staircase out;
  if (breaks.size() < 2) {
    // Zero extent along the primary axis: a single degenerate segment.
    Interval all;
    for (const auto& p : primary) all.include(p);
    out.breaks = {primary_grid.origin, primary_grid.end};
    out.extent = {all};
    return out;
  }
  out.breaks = breaks;
  out.extent.resize(breaks.size() - 1);
  for (std::size_t m = 0; m + 1 < breaks.size(); ++m) {
    const double u = breaks[m];
    const double v = breaks[m + 1];
    Interval merged;
    for (int i = 0; i < primary_grid.k; ++i) {
      const auto& own = primary[static_cast<std::size_t>(i)];
      if (own.empty() || !(primary_grid.lo(i) < v && primary_grid.hi(i) > u)) continue;
      for (int j = 0; j < cross_grid.k; ++j) {
        const auto& c = cross[static_cast<std::size_t>(j)];
        if (c.empty() || !(c.lo < v && c.hi > u)) continue;
        const double lo = std::max(own.lo, cross_grid.lo(j));
        const double hi = std::min(own.hi, cross_grid.hi(j));
        if (lo <= hi) {
          merged.include(lo);
          merged.include(hi);
        }
      }
    }
    out.extent[m] = merged;
  }
  return out;
}

}  // namespace

Aabb compute_aabb(std::span<const Vec2> points)
{
  Aabb box{points.front(), points.front()};
  for (const auto& p : points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

std::pair<Chart, bool> normalize_rotation(const Chart& chart)
{
  const Aabb box = compute_aabb(chart);
  if (box.width() <= box.height()) return {chart, false};
  Chart out = chart;
  for (auto& p : out.vertices) p = {-p.y, p.x};
  return {out, true};
}

Interval Staircase::extent_over(double lo, double hi) const
{
  Interval out;
  if (extent.empty()) return out;
  auto it = std::upper_bound(breaks.begin(), breaks.end(), lo);
  std::size_t m = it == breaks.begin() ? 0 : static_cast<std::size_t>(it - breaks.begin()) - 1;
  for (; m < extent.size() && breaks[m] < hi; ++m) {
    if (breaks[m + 1] > lo) out.include(extent[m]);
  }
  return out;
}

Interval LocalAabbProxy::x_interval(int i) const
{
  const SliceGrid g{box.min.x, box.max.x, k};
  return {g.lo(i), g.hi(i)};
}

Interval LocalAabbProxy::y_interval(int j) const
{
  const SliceGrid g{box.min.y, box.max.y, k};
  return {g.lo(j), g.hi(j)};
}

double LocalAabbProxy::area() const
{
  double total = 0.0;
  for (std::size_t m = 0; m < top_bottom.extent.size(); ++m) {
    total += (top_bottom.breaks[m + 1] - top_bottom.breaks[m]) * top_bottom.extent[m].length();
  }
  return total;
}

LocalAabbProxy compute_local_aabbs(std::span<const Vec2> vertices, std::span<const Triangle> triangles, int k)
{
  LocalAabbProxy proxy;
  proxy.k = std::max(1, k);
  proxy.box = compute_aabb(vertices);
  const SliceGrid gx{proxy.box.min.x, proxy.box.max.x, proxy.k};
  const SliceGrid gy{proxy.box.min.y, proxy.box.max.y, proxy.k};
  proxy.x_slices = slice_extents(vertices, triangles, gx, true);
  proxy.y_slices = slice_extents(vertices, triangles, gy, false);
  proxy.top_bottom = merge_boundaries(proxy.x_slices, gx, proxy.y_slices, gy);
  proxy.left_right = merge_boundaries(proxy.y_slices, gy, proxy.x_slices, gx);
  return proxy;
}

Vec2 Obb::axis_u() const { return {std::cos(angle), std::sin(angle)}; }
Vec2 Obb::axis_v() const { return {-std::sin(angle), std::cos(angle)}; }

std::array<Vec2, 4> Obb::corners() const
{
  const Vec2 u = axis_u() * half_extents.x;
  const Vec2 v = axis_v() * half_extents.y;
  return {center - u - v, center + u - v, center + u + v, center - u + v};
}

bool Obb::contains(Vec2 p, double tol) const
{
  const Vec2 d = p - center;
  return std::abs(dot(d, axis_u())) <= half_extents.x + tol && std::abs(dot(d, axis_v())) <= half_extents.y + tol;
}

Interval convex_extent_over(std::span<const Vec2> polygon, bool along_x, double lo, double hi)
{
  Interval out;
  const std::size_t n = polygon.size();
  for (std::size_t e = 0; e < n; ++e) clip_segment(polygon[e], polygon[(e + 1) % n], along_x, lo, hi, out);
  return out;
}

Interval Obb::y_extent_over(double x0, double x1) const
{
  const auto c = corners();
  return convex_extent_over(c, true, x0, x1);
}

Interval Obb::x_extent_over(double y0, double y1) const
{
  const auto c = corners();
  return convex_extent_over(c, false, y0, y1);
}

Obb Obb::translated(Vec2 d) const
{
  Obb out = *this;
  out.center = center + d;
  return out;
}

double obb_candidate_angle(int j) { return j * std::numbers::pi / 16.0; }

Obb obb_at_angle(std::span<const Vec2> points, double angle)
{
  Obb box;
  box.angle = angle;
  const Vec2 u = box.axis_u();
  const Vec2 v = box.axis_v();
  Interval s;
  Interval t;
  for (const auto& p : points) {
    s.include(dot(p, u));
    t.include(dot(p, v));
  }
  box.half_extents = {0.5 * s.length(), 0.5 * t.length()};
  box.center = u * (0.5 * (s.lo + s.hi)) + v * (0.5 * (t.lo + t.hi));
  box.area = s.length() * t.length();
  return box;
}

Obb compute_obb(std::span<const Vec2> points)
{
  Obb best = obb_at_angle(points, obb_candidate_angle(0));
  for (int j = 1; j < kObbAngleCount; ++j) {
    Obb cand = obb_at_angle(points, obb_candidate_angle(j));
    // relative slack so that mathematically equal areas keep the smaller angle
    if (cand.area < best.area - 1e-9 * std::max(1.0, best.area)) best = cand;
  }
  return best;
}

EmptyAreas empty_areas(const LocalAabbProxy& local)
{
  EmptyAreas a;
  const Aabb& box = local.box;
  const double mid = 0.5 * (box.min.x + box.max.x);
  const auto& tb = local.top_bottom;
  for (std::size_t m = 0; m < tb.extent.size(); ++m) {
    const double u = tb.breaks[m];
    const double v = tb.breaks[m + 1];
    const double w = v - u;
    const double left_part = std::clamp(mid - u, 0.0, w);
    double top = box.height();
    double bottom = box.height();
    if (!tb.extent[m].empty()) {
      top = tb.extent[m].lo - box.min.y;
      bottom = box.max.y - tb.extent[m].hi;
    }
    a.top += w * top;
    a.bottom += w * bottom;
    a.top_left += left_part * top;
    a.top_right += (w - left_part) * top;
    a.bottom_left += left_part * bottom;
    a.bottom_right += (w - left_part) * bottom;
  }
  const auto& lr = local.left_right;
  for (std::size_t m = 0; m < lr.extent.size(); ++m) {
    const double h = lr.breaks[m + 1] - lr.breaks[m];
    if (lr.extent[m].empty()) {
      a.left += h * box.width();
      a.right += h * box.width();
      continue;
    }
    a.left += h * (lr.extent[m].lo - box.min.x);
    a.right += h * (box.max.x - lr.extent[m].hi);
  }
  return a;
}

OrientationFlags choose_orientation(const LocalAabbProxy& local, const Aabb& aabb)
{
  const EmptyAreas a = empty_areas(local);
  OrientationFlags flags;
  flags.reflect_y = a.top > a.bottom;

  const double threshold = 0.1 * aabb.area();
  const double diff = a.left - a.right;
  if (diff > threshold) {
    flags.reflect_x = true;
  } else if (std::abs(diff) <= threshold) {
    // After a vertical flip the former top area is at the bottom.
    const double bl = flags.reflect_y ? a.top_left : a.bottom_left;
    const double br = flags.reflect_y ? a.top_right : a.bottom_right;
    flags.reflect_x = bl > br;
  }
  return flags;
}

PoseProxy make_pose_proxy(const Chart& chart, const Pose& pose, int k)
{
  PoseProxy out;
  out.pose = pose;
  const auto verts = posed_vertices(chart, pose);
  out.aabb = compute_aabb(verts);
  out.local = compute_local_aabbs(verts, chart.triangles, k);
  out.obb = compute_obb(verts);
  return out;
}

std::vector<int> sort_by_height(std::span<const ChartProxy> proxies)
{
  std::vector<int> order(proxies.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Aabb& ba = proxies[static_cast<std::size_t>(a)].forward.aabb;
    const Aabb& bb = proxies[static_cast<std::size_t>(b)].forward.aabb;
    if (ba.height() != bb.height()) return ba.height() > bb.height();
    if (ba.width() != bb.width()) return ba.width() > bb.width();
    return proxies[static_cast<std::size_t>(a)].chart_id < proxies[static_cast<std::size_t>(b)].chart_id;
  });
  return order;
}

ProxySet build_proxies(const ChartSet& set, const ProxyOptions& options)
{
  ProxySet out;
  out.proxies.resize(set.charts.size());
  for_each_index(options.exec, set.charts.size(), [&](std::size_t i) {
    const Chart& chart = set.charts[i];
    ChartProxy& cp = out.proxies[i];
    cp.chart_id = chart.id;
    cp.area = chart.area();

    Pose pose;
    if (!options.prerotation.empty()) pose.prerotation = options.prerotation[i];
    const Aabb box = compute_aabb(posed_vertices(chart, pose));
    cp.rotated_90 = box.width() > box.height();
    pose.rotation_deg = cp.rotated_90 ? 90 : 0;

    if (options.orient) {
      const PoseProxy upright = make_pose_proxy(chart, pose, options.local_aabb_count);
      cp.flags = choose_orientation(upright.local, upright.aabb);
      pose.reflect_x = cp.flags.reflect_x;
      pose.reflect_y = cp.flags.reflect_y;
    }
    cp.forward = make_pose_proxy(chart, pose, options.local_aabb_count);
    Pose mirrored = pose;
    mirrored.reflect_x = !mirrored.reflect_x;
    cp.mirrored = make_pose_proxy(chart, mirrored, options.local_aabb_count);
  });
  out.order = sort_by_height(out.proxies);
  return out;
}

}  // namespace atlaspack
