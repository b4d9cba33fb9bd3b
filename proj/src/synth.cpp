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

#include "atlaspack/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace atlaspack {

namespace {

// Fan around vertex 0 over the closed outline v[1..].
Chart fan(Vec2 center, const std::vector<Vec2>& outline)
{
  Chart c;
  c.vertices.push_back(center);
  c.vertices.insert(c.vertices.end(), outline.begin(), outline.end());
  const auto m = static_cast<std::uint32_t>(outline.size());
  for (std::uint32_t i = 0; i < m; ++i) c.triangles.push_back({0, 1 + i, 1 + (i + 1) % m});
  return c;
}

Chart make_shape(Rng& rng, double w, double h)
{
  switch (rng.below(4)) {
    case 0:
      return fan({w / 2, h / 2}, {{0, 0}, {w, 0}, {w, h}, {0, h}});
    case 1:
      return fan({w / 3, 2 * h / 3}, {{0, 0}, {w, h}, {0, h}});
    case 2: {
      // vertical bar [0,a]x[0,h] joined with horizontal bar [0,w]x[b,h]
      const double a = w * rng.uniform(0.25, 0.7);
      const double b = h * rng.uniform(0.3, 0.75);
      return fan({a / 2, (b + h) / 2}, {{0, 0}, {a, 0}, {a, b}, {w, b}, {w, h}, {0, h}});
    }
    default: {
      const int m = 12 + static_cast<int>(rng.below(13));
      std::vector<Vec2> pts;
      for (int i = 0; i < m; ++i) {
        const double t = 2 * std::numbers::pi * i / m;
        pts.push_back({w / 2 * (1 + std::cos(t)), h / 2 * (1 + std::sin(t))});
      }
      return fan({w / 2, h / 2}, pts);
    }
  }
}

}  // namespace

ChartSet generate_chart_set(const SynthOptions& options)
{
  if (options.count <= 0) throw AtlasError("chart count must be positive");
  if (!(options.max_height > 0.0)) throw AtlasError("max height must be positive");
  Rng rng(options.seed);
  ChartSet set;
  set.source_name = "synth-" + std::to_string(options.seed) + "-" + std::to_string(options.count);
  const double hmax = options.max_height;
  const double hmin = hmax / 20.0;
  for (int i = 0; i < options.count; ++i) {
    double h = 0.0;
    if (i == 0) {
      h = hmax;  // pin the range ends so every set spans it
    } else if (i == 1) {
      h = hmin;
    } else if (options.profile == SynthProfile::Knee) {
      h = rng.uniform() < 0.12 ? hmax * rng.uniform(0.45, 1.0) : hmax * rng.uniform(0.05, 0.16);
    } else {
      h = hmin * std::pow(20.0, rng.uniform());
    }
    const double w = std::clamp(h * std::exp(rng.uniform(-1.1, 1.1)), hmin * 0.5, hmax * 1.5);
    Chart c = make_shape(rng, w, h);
    if (options.rotate) {
      const double angle = rng.uniform(0.0, 2 * std::numbers::pi);
      const Vec2 off{rng.uniform(0.0, 1000.0), rng.uniform(0.0, 1000.0)};
      for (auto& v : c.vertices) v = rotate(v, angle) + off;
    }
    c.id = i;
    set.charts.push_back(std::move(c));
  }
  return set;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace atlaspack
