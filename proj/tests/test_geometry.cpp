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
#include "doctest.h"
#include "test_util.hpp"

using namespace atlaspack;
using namespace atlaspack::testing;

TEST_CASE("fraction compares by value")
{
  CHECK(Fraction{1, 2} == Fraction{32, 64});
  CHECK_FALSE(Fraction{1, 2} == Fraction{33, 64});
  CHECK(Fraction{40, 64}.reduced().num == 5);
  CHECK(Fraction{40, 64}.reduced().den == 8);
  CHECK(Fraction{40, 64}.str() == "40/64");
  CHECK(Fraction{3, 4}.value() == 0.75);
}

TEST_CASE("snapped rounding ignores noise near integers")
{
  CHECK(floor_snap(2.9999999999) == 3);
  CHECK(floor_snap(2.99) == 2);
  CHECK(ceil_snap(3.0000000001) == 3);
  CHECK(ceil_snap(3.01) == 4);
  CHECK(ceil_snap(-0.0) == 0);
}

TEST_CASE("chart invariants")
{
  CHECK_NOTHROW(check_chart(rect_chart(2, 3)));
  Chart c = rect_chart(2, 3);
  c.triangles.push_back({0, 1, 9});
  CHECK_THROWS_AS(check_chart(c), AtlasError);
  Chart flat = fan_chart({{0, 0}, {1, 0}, {2, 0}});
  CHECK_THROWS_AS(check_chart(flat), AtlasError);
  Chart few;
  few.vertices = {{0, 0}, {1, 0}};
  few.triangles = {{0, 1, 0}};
  CHECK_THROWS_AS(check_chart(few), AtlasError);

  ChartSet s = make_set({rect_chart(1, 1), rect_chart(2, 2)});
  CHECK_NOTHROW(check_chart_set(s));
  s.charts[1].id = 5;
  CHECK_THROWS_AS(check_chart_set(s), AtlasError);
  CHECK_THROWS_AS(check_chart_set(ChartSet{}), AtlasError);
}

TEST_CASE("atlas spec invariants and t_opt policy")
{
  AtlasSpec s;
  CHECK_NOTHROW(s.check());
  CHECK(s.gutter == 1);
  CHECK(s.scale_count == 64);
  CHECK(s.local_aabb_count == 10);
  using Mutate = void (*)(AtlasSpec&);
  for (Mutate bad : std::initializer_list<Mutate>{[](AtlasSpec& a) { a.width = 0; }, [](AtlasSpec& a) { a.height = 0; },
                   [](AtlasSpec& a) { a.gutter = -1; }, [](AtlasSpec& a) { a.scale_count = 0; },
                   [](AtlasSpec& a) { a.t_opt_fraction = 1.5; }, [](AtlasSpec& a) { a.t_opt_fraction = -0.1; },
                   [](AtlasSpec& a) { a.local_aabb_count = 0; }}) {
    AtlasSpec a;
    bad(a);
    CHECK_THROWS_AS(a.check(), AtlasError);
  }
  CHECK(s.effective_t_opt(10000) == 0.0);
  CHECK(s.effective_t_opt(10001) == 0.01);
  s.t_opt_fraction = 0.0;
  CHECK(s.effective_t_opt(50000) == 0.0);
}

TEST_CASE("pose: rotation, then reflections, then normalization")
{
  // L-shaped marker: distinct vertices make the transform observable
  const Chart c = fan_chart({{0, 0}, {4, 0}, {4, 1}, {0, 2}});
  auto p = posed_vertices(c, Pose{0.0, 0, false, false});
  CHECK(p[1] == Vec2{4, 0});
  // 90 CCW maps (x,y) to (-y,x); the minimum moves to the origin
  p = posed_vertices(c, Pose{0.0, 90, false, false});
  CHECK(p[0] == Vec2{2, 0});
  CHECK(p[1] == Vec2{2, 4});
  CHECK(p[3] == Vec2{0, 0});
  p = posed_vertices(c, Pose{0.0, 0, true, false});
  CHECK(p[0] == Vec2{4, 0});
  CHECK(p[1] == Vec2{0, 0});
  p = posed_vertices(c, Pose{0.0, 0, false, true});
  CHECK(p[0] == Vec2{0, 2});
  CHECK(p[2] == Vec2{4, 1});
  p = posed_vertices(c, Pose{0.0, 180, false, false});
  auto q = posed_vertices(c, Pose{0.0, 0, true, true});
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == q[i]);
}

TEST_CASE("placement applies scale then translation")
{
  const Chart c = rect_chart(10, 20, 5, 5);
  Placement pl;
  pl.final_scale = {1, 2};
  pl.tx = 3;
  pl.ty = 7;
  const auto v = placed_vertices(c, pl);
  CHECK(v[0] == Vec2{3, 7});
  CHECK(v[2] == Vec2{8, 17});
}
