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

#include <numbers>

#include "atlaspack/compact.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace atlaspack;
using namespace atlaspack::testing;

namespace {

Chart upper_left_triangle() { return fan_chart({{0, 0}, {8, 0}, {0, 8}}); }
Chart lower_right_triangle() { return fan_chart({{8, 0}, {8, 8}, {0, 8}}); }

PoseProxy proxy_of(const Chart& c, int k = 10) { return make_pose_proxy(c, Pose{}, k); }

double width_of(const Chart& c) { return compute_aabb(c).width(); }

Chart mirrored(const Chart& c)
{
  Chart m = c;
  for (auto& v : m.vertices) v.x = -v.x;
  return normalized(m);
}

}  // namespace

TEST_CASE("distance_local: flush rectangles and the triangle pair")
{
  CHECK(distance_local(compute_local_aabbs(rect_chart(4, 8), 2), compute_local_aabbs(rect_chart(4, 8), 2)) == 0.0);
  const double d = distance_local(compute_local_aabbs(upper_left_triangle(), 2),
                                  compute_local_aabbs(lower_right_triangle(), 2));
  CHECK(d == doctest::Approx(4.0));
  // the true slide is 8: the hypotenuses meet
  CHECK(exact_safe_slide(upper_left_triangle(), translated(lower_right_triangle(), {8, 0})) == doctest::Approx(8.0));
}

TEST_CASE("distance_local: a shorter right chart is constrained by the top slice only")
{
  // left: lower-left triangle, right boundary 4 on y in [0,4) and 8 below (k = 2)
  const Chart left = fan_chart({{0, 0}, {0, 8}, {8, 8}});
  const Chart right = rect_chart(6, 3);
  const double d = distance_local(compute_local_aabbs(left, 2), compute_local_aabbs(right, 2));
  // single overlapping range y in [0,3]: 8 + 0 - 4
  CHECK(d == doctest::Approx(4.0));
}

TEST_CASE("distance_obb: flush boxes, diamonds, disjoint boxes")
{
  const Obb a = compute_obb(rect_chart(4, 8));
  CHECK(distance_obb(a, a, 4.0, 4.0) == 0.0);

  // diamonds of different size, tops aligned at y = 0
  auto diamond = [](double side) {
    Chart c = rect_chart(side, side, -side / 2, -side / 2);
    for (auto& v : c.vertices) v = rotate(v, std::numbers::pi / 4);
    return normalized(c);
  };
  const Chart big = diamond(2.0);
  const Chart small = diamond(1.0);
  const double wl = width_of(big);
  const Chart small_at = translated(small, {wl, 0});
  const double d = distance_obb(compute_obb(big), compute_obb(small_at), 0.0, width_of(small));
  // brute-force slide oracle in 0.001 steps
  double t = 0.0;
  while (t < width_of(small) && !charts_overlap(big, translated(small_at, {-(t + 0.001), 0}))) t += 0.001;
  CHECK(d > 0.1);
  CHECK(d == doctest::Approx(t).epsilon(0.002));
  CHECK(d <= exact_safe_slide(big, small_at) + 1e-9);

  // never overlapping at any slide: capped
  const Obb low = compute_obb(rect_chart(3, 3, 0, 20));
  CHECK(distance_obb(compute_obb(rect_chart(4, 8)), low, 0.0, 3.0) == 3.0);
}

TEST_CASE("compact_pair: zero distance, triangle pair locks, obb corner rule")
{
  PairCompaction z = compact_pair(proxy_of(rect_chart(4, 8)), proxy_of(rect_chart(4, 8)));
  CHECK(z.distance == 0.0);
  CHECK_FALSE(z.left_locked);
  CHECK_FALSE(z.right_locked);
  CHECK(z.source == CompactionSource::Zero);

  const PairCompaction tri = compact_pair(proxy_of(upper_left_triangle(), 2), proxy_of(lower_right_triangle(), 2));
  CHECK(tri.distance == doctest::Approx(4.0));
  CHECK(tri.source == CompactionSource::LocalAabb);
  CHECK(tri.right_locked);

  // left box's rightmost corner sits lower than the right box's leftmost corner
  Obb left;
  left.angle = std::numbers::pi / 4;
  left.center = {2, 4};
  left.half_extents = {1, 1};
  Obb right = left;
  right.center = {6, 1};
  bool ll = false;
  bool rl = false;
  obb_interlock(left, right, 0.0, 1.0, ll, rl);
  CHECK(ll);
  CHECK_FALSE(rl);
  obb_interlock(right, left.translated({6, 0}), 0.0, 1.0, ll, rl);
  CHECK_FALSE(ll);
  CHECK(rl);
}

TEST_CASE("conservativeness: proxy distance never exceeds the exact safe slide")
{
  Rng rng(2024);
  int positive = 0;
  for (int n = 0; n < 1000; ++n) {
    const Chart l = normalized(random_star(rng, 10 + 40 * rng.uniform()));
    const Chart r = normalized(random_star(rng, 10 + 40 * rng.uniform()));
    const PoseProxy pl = proxy_of(l, 2 + static_cast<int>(rng.below(12)));
    const PoseProxy pr = proxy_of(r, pl.local.k);
    const PairCompaction c = compact_pair(pl, pr);
    const double exact = exact_safe_slide(l, translated(r, {pl.aabb.width(), 0}));
    REQUIRE(c.distance <= exact + 1e-9);
    CHECK(c.distance >= 0.0);
    if (c.distance == 0.0) {
      CHECK_FALSE(c.left_locked);
      CHECK_FALSE(c.right_locked);
    }
    if (c.source == CompactionSource::Obb) CHECK(c.left_locked != c.right_locked);
    positive += c.distance > 0.0;
  }
  CHECK(positive > 300);
}

TEST_CASE("safety under permitted vertical motion")
{
  Rng rng(31);
  for (int n = 0; n < 200; ++n) {
    const Chart l = normalized(random_star(rng, 10 + 40 * rng.uniform()));
    const Chart r = normalized(random_star(rng, 10 + 40 * rng.uniform()));
    const PoseProxy pl = proxy_of(l);
    const PoseProxy pr = proxy_of(r);
    const PairCompaction c = compact_pair(pl, pr);
    const Chart placed = translated(r, {pl.aabb.width() - c.distance, 0});
    const double reach = std::max(pl.aabb.height(), pr.aabb.height());
    for (int s = 1; s <= 16; ++s) {
      const double dy = reach * s / 16.0;
      if (!c.left_locked) CHECK_FALSE(charts_overlap(translated(l, {0, -dy}), placed));
      if (!c.right_locked) CHECK_FALSE(charts_overlap(l, translated(placed, {0, -dy})));
    }
  }
}

TEST_CASE("symmetry: mirror both and swap")
{
  Rng rng(4);
  for (int n = 0; n < 300; ++n) {
    const Chart l = normalized(random_star(rng, 30));
    const Chart r = normalized(random_star(rng, 30));
    const PairCompaction a = compact_pair(proxy_of(l), proxy_of(r));
    const PairCompaction b = compact_pair(proxy_of(mirrored(r)), proxy_of(mirrored(l)));
    CHECK(a.distance == doctest::Approx(b.distance).epsilon(1e-9));
    if (a.source == b.source && std::abs(a.distance - b.distance) < 1e-9 && a.source == CompactionSource::LocalAabb) {
      CHECK(a.left_locked == b.right_locked);
      CHECK(a.right_locked == b.left_locked);
    }
  }
}
