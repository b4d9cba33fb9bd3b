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

#include "atlaspack/compact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace atlaspack {

double distance_local(const LocalAabbProxy& left, const LocalAabbProxy& right)
{
  const double wl = left.box.width();
  const double cap = std::min(wl, right.box.width());
  const Staircase& a = left.left_right;
  const Staircase& b = right.left_right;
  double best = std::numeric_limits<double>::infinity();
  // both staircases are sorted; walk them together
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.extent.size() && j < b.extent.size()) {
    const double lo = std::max(a.breaks[i], b.breaks[j]);
    const double hi = std::min(a.breaks[i + 1], b.breaks[j + 1]);
    if (hi > lo && !a.extent[i].empty() && !b.extent[j].empty()) {
      best = std::min(best, wl + b.extent[j].lo - a.extent[i].hi);
    }
    if (a.breaks[i + 1] < b.breaks[j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  if (!std::isfinite(best)) return cap;
  return std::clamp(best, 0.0, cap);
}

double distance_obb(const Obb& left, const Obb& right, double left_width, double cap)
{
  const Vec2 axes[4] = {left.axis_u(), left.axis_v(), right.axis_u(), right.axis_v()};
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  auto radius = [](const Obb& o, Vec2 n) {
    return std::abs(o.half_extents.x * dot(o.axis_u(), n)) + std::abs(o.half_extents.y * dot(o.axis_v(), n));
  };
  for (const Vec2& n : axes) {
    const double r = radius(left, n) + radius(right, n);
    // projected center distance at slide t is q - t * n.x
    const double q = dot(right.center - left.center, n) + left_width * n.x;
    if (std::abs(n.x) < 1e-15) {
      if (std::abs(q) >= r) return cap;
      continue;
    }
    double t0 = (q - r) / n.x;
    double t1 = (q + r) / n.x;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
  }
  if (lo >= hi || hi <= 0.0) return cap;
  return std::clamp(lo, 0.0, cap);
}

void local_interlock(const LocalAabbProxy& left, const LocalAabbProxy& right, double distance,
                     bool& left_locked, bool& right_locked)
{
  left_locked = false;
  right_locked = false;
  if (distance <= 0.0) return;
  const double off = left.box.width() - distance;
  // the binding rows touch exactly; keep them touching under rounding noise
  const double eps = 1e-9 * (1.0 + left.box.width() + right.box.width());
  const Staircase& a = left.left_right;
  const Staircase& b = right.left_right;
  for (std::size_t j = 0; j < a.extent.size(); ++j) {
    if (a.extent[j].empty()) continue;
    for (std::size_t m = 0; m < b.extent.size(); ++m) {
      if (b.extent[m].empty()) continue;
      // closed x-overlap: touching segments count
      if (!(a.extent[j].hi + eps >= off + b.extent[m].lo)) continue;
      // left segment j spans (a.breaks[j], a.breaks[j+1]); right segment m likewise
      if (a.breaks[j + 1] > b.breaks[m]) left_locked = true;
      if (b.breaks[m + 1] > a.breaks[j]) right_locked = true;
    }
  }
}

void obb_interlock(const Obb& left, const Obb& right, double left_width, double distance,
                   bool& left_locked, bool& right_locked)
{
  left_locked = false;
  right_locked = false;
  if (distance <= 0.0) return;
  const auto lc = left.corners();
  const auto rc = right.translated({left_width - distance, 0.0}).corners();
  constexpr double eps = 1e-9;
  Vec2 lp = lc[0];
  for (const auto& p : lc) {
    if (p.x > lp.x + eps || (std::abs(p.x - lp.x) <= eps && p.y > lp.y)) lp = p;
  }
  Vec2 rp = rc[0];
  for (const auto& p : rc) {
    if (p.x < rp.x - eps || (std::abs(p.x - rp.x) <= eps && p.y > rp.y)) rp = p;
  }
  if (lp.y >= rp.y) {
    left_locked = true;
  } else {
    right_locked = true;
  }
}

PairCompaction compact_pair(const PoseProxy& left, const PoseProxy& right)
{
  PairCompaction out;
  const double wl = left.aabb.width();
  const double cap = std::min(wl, right.aabb.width());
  const double dl = distance_local(left.local, right.local);
  const double dobb = distance_obb(left.obb, right.obb, wl, cap);
  if (dl <= 0.0 && dobb <= 0.0) return out;
  if (dl >= dobb) {
    out.distance = dl;
    out.source = CompactionSource::LocalAabb;
    local_interlock(left.local, right.local, dl, out.left_locked, out.right_locked);
  } else {
    out.distance = dobb;
    out.source = CompactionSource::Obb;
    obb_interlock(left.obb, right.obb, wl, dobb, out.left_locked, out.right_locked);
  }
  return out;
}

}  // namespace atlaspack
