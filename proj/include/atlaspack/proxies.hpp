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

// Bounding proxies for charts: the AABB, the local-AABB staircase proxy and
// an approximate oriented bounding box. All of them are conservative: every
// chart point lies inside each proxy.

#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "atlaspack/chart.hpp"
#include "atlaspack/geometry.hpp"
#include "atlaspack/parallel.hpp"

namespace atlaspack {

struct Aabb {
  Vec2 min;
  Vec2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double area() const { return width() * height(); }
  bool contains(Vec2 p, double tol = 0.0) const
  {
    return p.x >= min.x - tol && p.x <= max.x + tol && p.y >= min.y - tol && p.y <= max.y + tol;
  }
};

Aabb compute_aabb(std::span<const Vec2> points);
inline Aabb compute_aabb(const Chart& chart) { return compute_aabb(chart.vertices); }

/// Rotates the chart by 90 degrees when its AABB is wider than tall. A square
/// AABB is left alone.
std::pair<Chart, bool> normalize_rotation(const Chart& chart);

/// Piecewise-constant boundary along one axis. Segment m spans the open
/// interval (breaks[m], breaks[m+1]) and stores the extent of the chart along
/// the other axis there.
struct Staircase {
  std::vector<double> breaks;
  std::vector<Interval> extent;

  /// Union of the extents of all segments overlapping (lo, hi) with positive
  /// length.
  Interval extent_over(double lo, double hi) const;
};

/// Local AABBs: the chart's AABB is cut into k equal intervals along x and
/// along y. x_slices[i] holds the exact y-extent of the chart inside x-interval
/// i; y_slices[j] holds the exact x-extent inside y-interval j. The merged
/// boundaries are the intersection of the two unions of slice boxes.
struct LocalAabbProxy {
  int k = 1;
  Aabb box;
  std::vector<Interval> x_slices;
  std::vector<Interval> y_slices;
  /// Top (lo) and bottom (hi) boundary as a function of x, after merging.
  Staircase top_bottom;
  /// Left (lo) and right (hi) boundary as a function of y, after merging.
  Staircase left_right;

  Interval x_interval(int i) const;
  Interval y_interval(int j) const;

  Interval y_extent_over(double x0, double x1) const { return top_bottom.extent_over(x0, x1); }
  Interval x_extent_over(double y0, double y1) const { return left_right.extent_over(y0, y1); }

  /// Area enclosed between the merged top and bottom boundaries.
  double area() const;
};

LocalAabbProxy compute_local_aabbs(std::span<const Vec2> vertices, std::span<const Triangle> triangles, int k);
inline LocalAabbProxy compute_local_aabbs(const Chart& chart, int k)
{
  return compute_local_aabbs(chart.vertices, chart.triangles, k);
}

struct Obb {
  double angle = 0.0;
  Vec2 center;
  /// Half extents along u = (cos a, sin a) and v = (-sin a, cos a).
  Vec2 half_extents;
  double area = 0.0;

  Vec2 axis_u() const;
  Vec2 axis_v() const;
  /// Counter-clockwise corners starting at center - u*hx - v*hy.
  std::array<Vec2, 4> corners() const;
  bool contains(Vec2 p, double tol = 0.0) const;
  Interval y_extent_over(double x0, double x1) const;
  Interval x_extent_over(double y0, double y1) const;
  Obb translated(Vec2 d) const;
};

/// Extent along the other axis of the part of a convex polygon whose x (or y
/// when `along_x` is false) lies in the closed range [lo, hi].
Interval convex_extent_over(std::span<const Vec2> polygon, bool along_x, double lo, double hi);

/// Slope used for every edge crossing: b = pb + (c - pa) * slope.
inline double edge_slope(double pa, double pb, double qa, double qb) { return (qb - pb) / (qa - pa); }

inline constexpr int kObbAngleCount = 8;
/// Candidate angle j in [0, kObbAngleCount): j * pi / 16.
double obb_candidate_angle(int j);
/// Box of `points` aligned with the frame rotated by `angle`.
Obb obb_at_angle(std::span<const Vec2> points, double angle);
/// Minimum-area box among the candidate angles; ties go to the smaller angle.
Obb compute_obb(std::span<const Vec2> points);
inline Obb compute_obb(const Chart& chart) { return compute_obb(chart.vertices); }

struct OrientationFlags {
  bool reflect_x = false;
  bool reflect_y = false;
  friend bool operator==(const OrientationFlags&, const OrientationFlags&) = default;
};

/// Empty areas between the merged boundaries and the AABB edges.
struct EmptyAreas {
  double top = 0.0;
  double bottom = 0.0;
  double left = 0.0;
  double right = 0.0;
  double bottom_left = 0.0;   // bottom area left of the vertical midline
  double bottom_right = 0.0;  // bottom area right of the vertical midline
  double top_left = 0.0;
  double top_right = 0.0;
};

EmptyAreas empty_areas(const LocalAabbProxy& local);

/// Moves the larger empty area to the bottom, then to the right. Horizontal
/// differences within 10% of the AABB area fall back to the bottom corners.
OrientationFlags choose_orientation(const LocalAabbProxy& local, const Aabb& aabb);

/// Proxies of one chart in one pose, expressed in the pose-local frame where
/// the AABB minimum is the origin.
struct PoseProxy {
  Pose pose;
  Aabb aabb;
  LocalAabbProxy local;
  Obb obb;
};

PoseProxy make_pose_proxy(const Chart& chart, const Pose& pose, int k);

struct ChartProxy {
  int chart_id = 0;
  double area = 0.0;
  bool rotated_90 = false;
  OrientationFlags flags;
  /// Final pre-packing pose (left-to-right rows).
  PoseProxy forward;
  /// Same pose reflected horizontally (right-to-left rows).
  PoseProxy mirrored;
};

struct ProxySet {
  std::vector<ChartProxy> proxies;  // indexed by chart id
  std::vector<int> order;           // chart ids, tallest first
};

struct ProxyOptions {
  int local_aabb_count = 10;
  /// When false no reflections are chosen (AABB-only packers).
  bool orient = true;
  Exec exec = Exec::Parallel;
  /// Per-chart pre-rotation angles; empty means none.
  std::span<const double> prerotation;
};

ProxySet build_proxies(const ChartSet& set, const ProxyOptions& options);

/// Sort key: AABB height descending, then width descending, then id.
std::vector<int> sort_by_height(std::span<const ChartProxy> proxies);

}  // namespace atlaspack
