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
#include "atlaspack/metrics.hpp"
#include "atlaspack/packer.hpp"
#include "atlaspack/synth.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace atlaspack;
using namespace atlaspack::testing;

namespace {

AtlasSpec atlas(int w, int h, int gutter)
{
  AtlasSpec s;
  s.width = w;
  s.height = h;
  s.gutter = gutter;
  return s;
}

}  // namespace

TEST_CASE("single chart")
{
  const ChartSet set = make_set({rect_chart(10, 10)});
  const PackResult r = chameleon_pack(set, atlas(64, 64, 1));
  REQUIRE(r.success);
  CHECK(r.scale_index == 64);
  CHECK(r.placements[0].tx == 0);
  CHECK(r.placements[0].ty == 0);
  CHECK_FALSE(chameleon_pack(make_set({rect_chart(10000, 1)}), atlas(64, 64, 1)).success);
}

TEST_CASE("rows alternate direction")
{
  // two 30-wide boxes fill the first row; the short one opens row 2
  const ChartSet set = make_set({rect_chart(30, 30, 0, 0, 0), rect_chart(30, 30, 0, 0, 1), rect_chart(20, 20, 0, 0, 2)});
  const PackResult r = chameleon_pack_at_scale(set, atlas(64, 64, 1), 64);
  REQUIRE(r.success);
  CHECK(r.placements[0].tx == 0);
  CHECK(r.placements[1].tx == 32);
  CHECK(r.placements[2].tx == 44);  // right-aligned
  CHECK(r.placements[2].ty == 32);
  CHECK(r.stats.rows == 2);
}

TEST_CASE("wide boxes are turned upright")
{
  const ChartSet set = make_set({rect_chart(40, 10)});
  const PackResult r = chameleon_pack_at_scale(set, atlas(64, 64, 0), 64);
  REQUIRE(r.success);
  CHECK(r.placements[0].rotation_deg == 90);
}

TEST_CASE("compaction gives TABI an equal or larger scale on a triangle pair")
{
  const Chart ul = fan_chart({{0, 0}, {8, 0}, {0, 8}}, 0);
  const Chart lr = fan_chart({{8, 0}, {8, 8}, {0, 8}}, 1);
  const ChartSet set = make_set({ul, lr});
  bool strict = false;
  for (int w = 10; w <= 20; ++w) {
    const AtlasSpec spec = atlas(w, 9, 0);
    const PackResult c = chameleon_pack(set, spec);
    const PackResult t = pack(set, spec);
    REQUIRE(t.success);
    REQUIRE(c.success);
    CHECK(t.scale_index >= c.scale_index);
    strict = strict || t.scale_index > c.scale_index;
    CHECK(validate_atlas(set, t, spec).passed);
    CHECK(validate_atlas(set, c, spec).passed);
  }
  CHECK(strict);
}

TEST_CASE("chameleon outputs pass the validity oracle")
{
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SynthOptions o;
    o.seed = seed;
    o.count = 150;
    const ChartSet set = generate_chart_set(o);
    for (int gutter : {0, 1, 3}) {
      AtlasSpec spec = atlas(512, 512, gutter);
      spec.prerotate = seed % 2 == 0;
      const PackResult r = chameleon_pack(set, spec);
      REQUIRE(r.success);
      CHECK(validate_atlas(set, r, spec).passed);
    }
  }
}

TEST_CASE("serial and parallel scale search agree")
{
  SynthOptions o;
  o.seed = 9;
  o.count = 200;
  const ChartSet set = generate_chart_set(o);
  const AtlasSpec spec = atlas(700, 500, 1);
  const PackResult a = chameleon_pack(set, spec, Exec::Serial);
  const PackResult b = chameleon_pack(set, spec, Exec::Parallel);
  CHECK(a.scale_index == b.scale_index);
  CHECK(a.placements == b.placements);
  int best = 0;
  for (int i = 1; i <= spec.scale_count; ++i) {
    if (chameleon_pack_at_scale(set, spec, i).success) best = i;
  }
  CHECK(a.scale_index == best);
}
