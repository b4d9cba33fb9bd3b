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

#include "atlaspack/metrics.hpp"
#include "atlaspack/packer.hpp"
#include "atlaspack/rowpack.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace atlaspack;
using namespace atlaspack::testing;

namespace {

Chart upper_left_triangle() { return fan_chart({{0, 0}, {8, 0}, {0, 8}}); }

TexelShape box_shape(int w, int h)
{
  return make_texel_shape(make_pose_proxy(rect_chart(w, h), Pose{}, 2), 1.0, true);
}

// Oracle for fold_row: the plain greedy fill written out step by step.
std::vector<int> greedy_offsets(const std::vector<int>& w, const std::vector<int>& d, int width, bool hc, int g)
{
  std::vector<int> out;
  int p = 0;
  int clear = 0;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (c >= 2) clear = std::max(clear, out[c - 2] + w[c - 2] + 2 * g);
    p = std::max(p, clear);
    if (p + w[c] > width) break;
    out.push_back(p);
    p += w[c] + 2 * g - (hc && c + 1 < w.size() ? d[c] : 0);
  }
  return out;
}

struct Fixture {
  ChartSet set;
  ProxySet proxies;
  std::vector<const ChartProxy*> ordered;

  explicit Fixture(std::vector<Chart> charts, bool orient = true)
  {
    set = make_set(std::move(charts));
    ProxyOptions po;
    po.orient = orient;
    proxies = build_proxies(set, po);
    for (int id : proxies.order) ordered.push_back(&proxies.proxies[static_cast<std::size_t>(id)]);
  }
};

}  // namespace

TEST_CASE("fold_row examples")
{
  const std::vector<int> w{4, 4, 4};
  FoldResult f = fold_row(0, 10, false, 0, w, std::vector<int>{});
  CHECK(f.offsets == std::vector<int>{0, 4});
  CHECK(f.row_end == 1);
  f = fold_row(0, 10, true, 0, w, std::vector<int>{2, 2});
  CHECK(f.offsets == std::vector<int>{0, 2, 4});
  CHECK(f.row_end == 2);
  f = fold_row(0, 10, false, 0, std::vector<int>{12, 1}, std::vector<int>{});
  CHECK(f.row_end == -1);
  CHECK(f.offsets.empty());
  // later start: row_end is row_start - 1 on first overflow
  f = fold_row(1, 10, false, 0, std::vector<int>{1, 12}, std::vector<int>{});
  CHECK(f.row_end == 0);
  // gutter 1 reserves 2 columns between charts
  f = fold_row(0, 14, false, 1, w, std::vector<int>{});
  CHECK(f.offsets == std::vector<int>{0, 6});
}

TEST_CASE("fold_row matches the greedy oracle")
{
  Rng rng(17);
  for (int n = 0; n < 500; ++n) {
    const int count = 1 + static_cast<int>(rng.below(12));
    const int g = static_cast<int>(rng.below(3));
    std::vector<int> w(static_cast<std::size_t>(count));
    std::vector<int> d(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) {
      w[c] = 1 + static_cast<int>(rng.below(20));
      d[c] = static_cast<int>(rng.below(10));
    }
    for (int c = 0; c + 1 < count; ++c) d[c] = std::min({d[c], w[c], w[c + 1]});
    const int width = 5 + static_cast<int>(rng.below(80));
    const bool hc = rng.below(2) == 1;
    const FoldResult f = fold_row(0, width, hc, g, w, d);
    const auto want = greedy_offsets(w, d, width, hc, g);
    CHECK(f.offsets == want);
    CHECK(f.row_end == static_cast<int>(want.size()) - 1);
  }
}

TEST_CASE("top and bottom edges")
{
  const PoseProxy rect = make_pose_proxy(rect_chart(5, 7), Pose{}, 10);
  for (int i = 0; i < 5; ++i) {
    CHECK(top_edge(rect, i, 1.0) == 0);
    CHECK(bottom_edge(rect, i, 1.0) == 7);
  }
  const PoseProxy tri = make_pose_proxy(upper_left_triangle(), Pose{}, 2);
  for (int i = 0; i < 8; ++i) {
    CHECK(top_edge(tri, i, 1.0) == 0);
    CHECK(bottom_edge(tri, i, 1.0) == (i < 4 ? 8 : 4));
  }
  // 45 degree diamond: the OBB edge is tighter than the coarse slices
  Chart d = rect_chart(20, 20, -10, -10);
  for (auto& v : d.vertices) v = rotate(v, std::numbers::pi / 4);
  const PoseProxy dia = make_pose_proxy(normalized(d), Pose{}, 2);
  const double half = 10 * std::numbers::sqrt2;
  int tighter = 0;
  for (int i = 0; i < static_cast<int>(std::ceil(2 * half)); ++i) {
    // lowest point of the diamond over column [i, i+1]
    const double x = std::clamp(half, double(i), double(i + 1));
    const double edge = half + (half - std::abs(x - half));
    CHECK(bottom_edge(dia, i, 1.0) == ceil_snap(edge));
    const Interval coarse = dia.local.y_extent_over(i, i + 1);
    if (ceil_snap(coarse.hi) > bottom_edge(dia, i, 1.0)) ++tighter;
  }
  CHECK(tighter > 10);
}

TEST_CASE("texel shapes contain the rasterized chart")
{
  Rng rng(41);
  for (int n = 0; n < 300; ++n) {
    const Chart c = normalized(random_star(rng, 40.0));
    const double s = rng.uniform(0.1, 1.5);
    for (bool reflect : {false, true}) {
      const Pose pose{0.0, 90 * static_cast<int>(rng.below(4)), reflect, rng.below(2) == 1};
      const PoseProxy p = make_pose_proxy(c, pose, 10);
      const TexelShape sh = make_texel_shape(p, s, true);
      auto v = posed_vertices(c, pose);
      for (auto& q : v) q = q * s;
      const Coverage cov = rasterize(v, c.triangles);
      for (int y = 0; y < cov.h; ++y) {
        for (int x = 0; x < cov.w; ++x) {
          if (!cov.bits[static_cast<std::size_t>(y * cov.w + x)]) continue;
          const int X = cov.x0 + x;
          const int Y = cov.y0 + y;
          REQUIRE(X >= 0);
          REQUIRE(X < sh.width);
          REQUIRE(Y >= 0);
          REQUIRE(Y < sh.height);
          CHECK(sh.top[X] <= Y);
          CHECK(Y < sh.bottom[X]);
          CHECK(sh.left[Y] <= X);
          CHECK(X < sh.right[Y]);
        }
      }
    }
  }
}

TEST_CASE("texel shapes equal the per-slab query construction")
{
  // direct construction: independent extent queries for every column and row
  auto direct = [](const PoseProxy& p, double s) {
    TexelShape t;
    t.width = scaled_extent(p.aabb.width(), s);
    t.height = scaled_extent(p.aabb.height(), s);
    const auto c = p.obb.corners();
    auto band = [&](Interval local, Interval obb, int limit, int& lo, int& hi) {
      if (local.empty()) {
        lo = 1;
        hi = 0;
        return;
      }
      Interval b = local;
      if (!obb.empty()) {
        const Interval cut{std::max(local.lo, obb.lo), std::min(local.hi, obb.hi)};
        if (!cut.empty()) b = cut;
      }
      lo = std::clamp(floor_snap(b.lo * s), 0, limit);
      hi = std::clamp(ceil_snap(b.hi * s), 0, limit);
    };
    t.top.resize(t.width);
    t.bottom.resize(t.width);
    t.left.resize(t.height);
    t.right.resize(t.height);
    for (int i = 0; i < t.width; ++i) {
      band(p.local.y_extent_over(i / s, (i + 1) / s), convex_extent_over(c, true, i / s, (i + 1) / s), t.height,
           t.top[i], t.bottom[i]);
    }
    for (int r = 0; r < t.height; ++r) {
      band(p.local.x_extent_over(r / s, (r + 1) / s), convex_extent_over(c, false, r / s, (r + 1) / s), t.width,
           t.left[r], t.right[r]);
    }
    return t;
  };
  Rng rng(99);
  for (int n = 0; n < 400; ++n) {
    const Chart c = normalized(random_star(rng, rng.uniform(3.0, 60.0)));
    const PoseProxy p = make_pose_proxy(c, Pose{0.0, 0, rng.below(2) == 1, false}, 1 + static_cast<int>(rng.below(12)));
    const double s = (1 + static_cast<double>(rng.below(64))) / 64.0;
    const TexelShape a = make_texel_shape(p, s, true);
    const TexelShape b = direct(p, s);
    CHECK(a.top == b.top);
    CHECK(a.bottom == b.bottom);
    CHECK(a.left == b.left);
    CHECK(a.right == b.right);
  }
}

TEST_CASE("mirror_shape reflects within the width")
{
  const TexelShape t = make_texel_shape(make_pose_proxy(upper_left_triangle(), Pose{}, 2), 1.0, true);
  const TexelShape m = mirror_shape(t);
  for (int i = 0; i < 8; ++i) CHECK(m.bottom[i] == t.bottom[7 - i]);
  for (int r = 0; r < 8; ++r) {
    CHECK(m.left[r] == 8 - t.right[r]);
    CHECK(m.right[r] == 8 - t.left[r]);
  }
}

TEST_CASE("texel_pair: flush boxes, triangles, gutter")
{
  TexelPair p = texel_pair(box_shape(4, 8), box_shape(4, 8), 0);
  CHECK(p.distance == 0);
  CHECK_FALSE(p.lock.left_locked);
  CHECK_FALSE(p.lock.right_locked);

  const TexelShape ul = make_texel_shape(make_pose_proxy(upper_left_triangle(), Pose{}, 10), 1.0, true);
  const TexelShape lr =
      make_texel_shape(make_pose_proxy(fan_chart({{8, 0}, {8, 8}, {0, 8}}), Pose{}, 10), 1.0, true);
  p = texel_pair(ul, lr, 0);
  CHECK(p.distance > 0);
  CHECK(p.distance <= 8);
  CHECK(p.lock.right_locked);
  // a wider gutter never allows a larger slide
  CHECK(texel_pair(ul, lr, 1).distance <= p.distance);
}

TEST_CASE("texel_pair keeps Chebyshev gutters under permitted vertical moves")
{
  Rng rng(12);
  for (int n = 0; n < 300; ++n) {
    const int g = static_cast<int>(rng.below(3));
    const TexelShape a = make_texel_shape(make_pose_proxy(normalized(random_star(rng, 30)), Pose{}, 10), 1.0, true);
    const TexelShape b = make_texel_shape(make_pose_proxy(normalized(random_star(rng, 30)), Pose{}, 10), 1.0, true);
    const TexelPair p = texel_pair(a, b, g);
    const int off = a.width + 2 * g - p.distance;
    auto clash = [&](int dy_left, int dy_right) {
      for (int ra = 0; ra < a.height; ++ra) {
        if (a.row_empty(ra)) continue;
        for (int rb = 0; rb < b.height; ++rb) {
          if (b.row_empty(rb)) continue;
          if (std::abs((ra + dy_left) - (rb + dy_right)) > 2 * g) continue;
          // horizontal Chebyshev gap between the two texel runs
          const int gap = off + b.left[rb] - a.right[ra];
          const int gap2 = a.left[ra] - (off + b.right[rb]);
          if (gap < 2 * g + 0 && gap2 < 2 * g) return true;
        }
      }
      return false;
    };
    CHECK_FALSE(clash(0, 0));
    for (int dy = 1; dy <= 40; dy += 3) {
      if (!p.lock.left_locked) CHECK_FALSE(clash(-dy, 0));
      if (!p.lock.right_locked) CHECK_FALSE(clash(0, -dy));
    }
  }
}

TEST_CASE("correct_y_offsets examples and fixpoint")
{
  std::vector<int> y{3, 5};
  std::vector<PairLock> locks{{true, false}};
  correct_y_offsets(y, locks);
  CHECK(y == std::vector<int>{5, 5});

  y = {1, 2, 3};
  locks = {{true, false}, {true, false}};
  CHECK(correct_y_offsets(y, locks) == 2);
  CHECK(y == std::vector<int>{3, 3, 3});

  y = {4, 1, 7};
  locks = {{}, {}};
  CHECK(correct_y_offsets(y, locks) == 0);
  CHECK(y == std::vector<int>{4, 1, 7});

  Rng rng(3);
  for (int n = 0; n < 500; ++n) {
    const int len = 2 + static_cast<int>(rng.below(12));
    std::vector<int> a(static_cast<std::size_t>(len));
    for (auto& v : a) v = static_cast<int>(rng.below(50));
    std::vector<PairLock> l(static_cast<std::size_t>(len - 1));
    for (auto& p : l) p = {rng.below(2) == 1, rng.below(2) == 1};
    std::vector<int> b = a;
    const int sweeps = correct_y_offsets(a, l, false);
    correct_y_offsets(b, l, true);
    CHECK(a == b);
    CHECK(sweeps <= len);
    for (int c = 0; c + 1 < len; ++c) {
      if (l[c].left_locked) CHECK(a[c] >= a[c + 1]);
      if (l[c].right_locked) CHECK(a[c + 1] >= a[c]);
    }
  }
}

TEST_CASE("push_row examples")
{
  std::vector<int> front(10, 0);
  const TexelShape a = box_shape(3, 5);
  const TexelShape b = box_shape(4, 2);
  std::vector<RowItem> items{{0, &a}, {3, &b}};
  auto y = push_row(front, items, {}, 0);
  CHECK(y == std::vector<int>{0, 0});
  CHECK(front == std::vector<int>{5, 5, 5, 2, 2, 2, 2, 0, 0, 0});

  std::vector<int> stair{5, 5, 9, 9};
  const TexelShape flat = box_shape(4, 1);
  std::vector<RowItem> one{{0, &flat}};
  y = push_row(stair, one, {}, 0);
  CHECK(y[0] == 9);

  // gutter: the frontline is raised by 2g and widened by 2g columns
  std::vector<int> fg(8, 0);
  const TexelShape c = box_shape(2, 3);
  std::vector<RowItem> mid{{3, &c}};
  push_row(fg, mid, {}, 1);
  CHECK(fg == std::vector<int>{0, 5, 5, 5, 5, 5, 5, 0});
}

TEST_CASE("push_row: complementary triangles nest")
{
  // upper-left triangle on top, lower-right triangle pushed under it
  const Chart top = upper_left_triangle();
  const Chart low = fan_chart({{8, 0}, {8, 8}, {0, 8}});
  const TexelShape st = make_texel_shape(make_pose_proxy(top, Pose{}, 10), 4.0, true);
  const TexelShape sl = make_texel_shape(make_pose_proxy(low, Pose{}, 10), 4.0, true);
  std::vector<int> front(32, 0);
  std::vector<RowItem> r1{{0, &st}};
  push_row(front, r1, {}, 0);
  std::vector<RowItem> r2{{0, &sl}};
  const int y = push_row(front, r2, {}, 0)[0];
  CHECK(y < 32);  // the flat box answer
  auto vt = posed_vertices(top, Pose{});
  auto vl = posed_vertices(low, Pose{});
  for (auto& v : vt) v = v * 4.0;
  for (auto& v : vl) v = v * 4.0 + Vec2{0, double(y)};
  const Coverage ct = rasterize(vt, top.triangles);
  const Coverage cl = rasterize(vl, low.triangles);
  for (int yy = 0; yy < cl.h; ++yy) {
    for (int xx = 0; xx < cl.w; ++xx) {
      if (cl.bits[yy * cl.w + xx]) CHECK_FALSE(ct.at(cl.x0 + xx, cl.y0 + yy));
    }
  }
}

TEST_CASE("push_row is independent of item order without locks")
{
  Rng rng(8);
  for (int n = 0; n < 100; ++n) {
    std::vector<TexelShape> shapes;
    for (int k = 0; k < 6; ++k) {
      shapes.push_back(
          make_texel_shape(make_pose_proxy(normalized(random_star(rng, 12)), Pose{}, 10), 1.0, true));
    }
    std::vector<int> base(80);
    for (auto& v : base) v = static_cast<int>(rng.below(30));
    std::vector<RowItem> items;
    int x = 0;
    for (auto& s : shapes) {
      items.push_back({x, &s});
      x += s.width + 2;
    }
    std::vector<int> f1 = base;
    std::vector<int> f2 = base;
    const auto y1 = push_row(f1, items, {}, 1);
    std::vector<RowItem> rev(items.rbegin(), items.rend());
    auto y2 = push_row(f2, rev, {}, 1);
    std::reverse(y2.begin(), y2.end());
    CHECK(f1 == f2);
    CHECK(y1 == y2);
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(f1[i] >= base[i]);
  }
}

TEST_CASE("detect_knee thresholds")
{
  auto k = detect_knee(std::vector<double>{100, 50, 48}, 256);
  REQUIRE(k);
  CHECK(k->index == 0);
  CHECK(k->height_diff == 50);
  CHECK_FALSE(detect_knee(std::vector<double>{100, 95}, 256));
  k = detect_knee(std::vector<double>{200, 100, 40}, 256);
  REQUIRE(k);
  CHECK(k->index == 0);
  // exactly at 20% of the taller chart, and just below
  CHECK(detect_knee(std::vector<double>{100, 80}, 100));
  CHECK_FALSE(detect_knee(std::vector<double>{100, 80.001}, 100));
  // exactly at 10% of the atlas, and just below
  CHECK(detect_knee(std::vector<double>{50, 30}, 200));
  CHECK_FALSE(detect_knee(std::vector<double>{50, 30.5}, 200));
  // equal drops: the earliest pair wins
  k = detect_knee(std::vector<double>{90, 60, 30}, 100);
  REQUIRE(k);
  CHECK(k->index == 0);
  // a rise counts as well
  k = detect_knee(std::vector<double>{20, 90}, 100);
  REQUIRE(k);
  CHECK(k->index == 0);
}

TEST_CASE("update_knee_location examples")
{
  Knee k{true, 0, 4, 1.0};
  CHECK(update_knee_location(k, std::vector<int>{10, 10, 2, 2, 3}));
  CHECK(k.chart_right_edge == 2);
  k = Knee{true, 0, 4, 1.0};
  CHECK(update_knee_location(k, std::vector<int>{10, 10, 10, 10, 3}));
  CHECK(k.chart_right_edge == 4);
  k = Knee{true, 0, 4, 1.0};
  CHECK_FALSE(update_knee_location(k, std::vector<int>{1, 1, 1, 1, 3}));
  // right-to-left: the left edge moves right
  k = Knee{false, 1, 5, 1.0};
  CHECK(update_knee_location(k, std::vector<int>{3, 2, 2, 10, 10}));
  CHECK(k.chart_left_edge == 3);
  // no concavity left at the atlas border
  k = Knee{true, 1, 5, 1.0};
  CHECK_FALSE(update_knee_location(k, std::vector<int>{0, 9, 9, 9, 9}));
}

TEST_CASE("update_knee_location never widens the concavity")
{
  Rng rng(6);
  for (int n = 0; n < 1000; ++n) {
    const int w = 3 + static_cast<int>(rng.below(30));
    std::vector<int> f(static_cast<std::size_t>(w));
    for (auto& v : f) v = static_cast<int>(rng.below(20));
    const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(w - 1)));
    const int b = a + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(w - a - 1)));
    Knee k{rng.below(2) == 1, a, b, 1.0};
    const Knee before = k;
    if (update_knee_location(k, f)) {
      CHECK(k.chart_left_edge >= before.chart_left_edge);
      CHECK(k.chart_right_edge <= before.chart_right_edge);
      CHECK(k.chart_left_edge < k.chart_right_edge);
    }
  }
}

TEST_CASE("row configurations: 4 without a knee, 8 with one")
{
  // one tall chart and many short ones: the first row has a knee
  std::vector<Chart> charts{rect_chart(20, 80)};
  for (int i = 0; i < 30; ++i) charts.push_back(rect_chart(12, 20));
  Fixture fx(charts);
  AtlasSpec spec;
  spec.width = spec.height = 100;
  spec.gutter = 0;
  RowPacker rp(fx.ordered, spec, Fraction{1, 1}, RowOptions{});
  REQUIRE(rp.commit_row());
  CHECK(rp.last_config_count() == 4);
  REQUIRE(rp.pending_knee());
  CHECK(rp.stats().knees_detected == 1);
  REQUIRE(rp.commit_row());
  CHECK(rp.last_config_count() == 8);
  CHECK(rp.stats().knee_folds == 1);
  // frontline monotone over rows
  std::vector<int> prev = rp.frontline();
  while (!rp.finished()) {
    REQUIRE(rp.commit_row());
    for (std::size_t i = 0; i < prev.size(); ++i) CHECK(rp.frontline()[i] >= prev[i]);
    prev = rp.frontline();
  }

  RowPacker plain(fx.ordered, spec, Fraction{1, 1}, RowOptions{true, false});
  plain.commit_row();
  CHECK(plain.last_config_count() == 2);
  RowPacker boxes(fx.ordered, spec, Fraction{1, 1}, RowOptions{false, true});
  boxes.commit_row();
  CHECK(boxes.last_config_count() == 2);
}

TEST_CASE("direction tie goes left to right; right-to-left rows reflect offsets")
{
  Fixture fx({rect_chart(10, 10), rect_chart(10, 10)});
  AtlasSpec spec;
  spec.width = spec.height = 64;
  RowPacker rp(fx.ordered, spec, Fraction{1, 1}, RowOptions{});
  const auto outs = rp.evaluate_row();
  const int best = rp.select(outs);
  REQUIRE(best >= 0);
  CHECK(outs[best].config.left_to_right);
  const RowOutcome rtl = rp.evaluate(RowConfig{false, false, false});
  CHECK(rtl.x == std::vector<int>{54, 42});
  const RowOutcome ltr = rp.evaluate(RowConfig{true, false, false});
  CHECK(ltr.x == std::vector<int>{0, 12});
  CHECK(ltr.score == rtl.score);
}

TEST_CASE("every committed row stays overlap free")
{
  SynthOptions o;
  o.seed = 5;
  o.count = 80;
  const ChartSet set = generate_chart_set(o);
  AtlasSpec spec;
  spec.width = spec.height = 512;
  const PreparedInput in = prepare_input(set, spec, {});
  RowPacker rp(in.ordered, spec, Fraction{24, 64}, RowOptions{});
  while (!rp.finished()) {
    rp.commit_row();
    // rasterize everything placed so far
    PackResult partial;
    partial.success = true;
    partial.scale_index = 24;
    ChartSet sub;
    for (std::size_t k = 0; k < rp.placed().size(); ++k) {
      if (!rp.placed()[k].placed) continue;
      const ChartProxy& p = *in.ordered[k];
      Chart c = set.charts[static_cast<std::size_t>(p.chart_id)];
      c.id = static_cast<int>(sub.charts.size());
      sub.charts.push_back(c);
      const Pose& pose = rp.placed()[k].mirrored ? p.mirrored.pose : p.forward.pose;
      Placement pl;
      pl.chart_id = c.id;
      pl.rotation_deg = pose.rotation_deg;
      pl.reflect_x = pose.reflect_x;
      pl.reflect_y = pose.reflect_y;
      pl.tx = rp.placed()[k].x;
      pl.ty = rp.placed()[k].y;
      pl.final_scale = rp.placed()[k].final_scale;
      partial.placements.push_back(pl);
    }
    AtlasSpec tall = spec;
    tall.height = 1 << 20;  // rows may still overflow; only overlaps matter here
    const ValidationReport v = validate_atlas(sub, partial, tall);
    CHECK(v.overlap_texels == 0);
    CHECK(v.gutter_violation_texels == 0);
  }
}
