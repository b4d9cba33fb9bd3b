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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "atlaspack/chart.hpp"
#include "atlaspack/parallel.hpp"

namespace atlaspack {

/// Texel squares are shrunk by this much before intersection tests, so that
/// geometry touching a texel only along its border does not cover it.
inline constexpr double kRasterTolerance = 1e-6;

/// Texels covered by one chart inside the box [x0, x0+w) x [y0, y0+h).
struct Coverage {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;
  std::vector<std::uint8_t> bits;  // row major

  bool at(int x, int y) const;
  std::int64_t count() const;
  /// Chebyshev dilation by r texels.
  Coverage dilated(int r) const;
};

/// True iff triangle abc intersects the texel square at (x, y) shrunk by
/// `tol` on every side.
bool triangle_touches_texel(Vec2 a, Vec2 b, Vec2 c, int x, int y, double tol = kRasterTolerance);

/// Conservative rasterization of a triangle soup. Zero-area triangles are
/// skipped.
Coverage rasterize(std::span<const Vec2> vertices, std::span<const Triangle> triangles,
                   double tol = kRasterTolerance);

struct ValidationReport {
  std::int64_t overlap_texels = 0;
  std::int64_t gutter_violation_texels = 0;
  std::int64_t out_of_bounds_texels = 0;
  bool passed = false;
};

ValidationReport validate_atlas(const ChartSet& set, const PackResult& result, const AtlasSpec& spec,
                                Exec exec = Exec::Parallel);

struct StretchReport {
  double l2_stretch = 0.0;
  std::vector<double> per_chart_stretch;  // by chart id
  double occupancy = 0.0;
};

/// Area-weighted RMS of the per-triangle stretch of the map from packed to
/// input triangles. Occupancy is left at 0; see occupancy().
StretchReport l2_stretch(const ChartSet& set, const PackResult& result);

/// Covered texels over atlas texels.
double occupancy(const ChartSet& set, const PackResult& result, const AtlasSpec& spec, Exec exec = Exec::Parallel);

}  // namespace atlaspack
