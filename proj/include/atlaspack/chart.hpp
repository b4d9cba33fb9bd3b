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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "atlaspack/geometry.hpp"

namespace atlaspack {

class AtlasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Triangle = std::array<std::uint32_t, 3>;

/// A polygonal chart in texel coordinates. The chart is the union of its
/// triangles.
struct Chart {
  int id = 0;
  std::vector<Vec2> vertices;
  std::vector<Triangle> triangles;

  /// Sum of absolute triangle areas.
  double area() const;
};

/// Throws AtlasError if the chart violates its invariants.
void check_chart(const Chart& chart);

struct ChartSet {
  std::vector<Chart> charts;
  std::string source_name;
};

/// Throws AtlasError unless ids are unique, contiguous from 0 and stored in id
/// order, and every chart is valid.
void check_chart_set(const ChartSet& set);

struct AtlasSpec {
  int width = 1024;
  int height = 1024;
  int gutter = 1;
  int scale_count = 64;
  bool prerotate = false;
  /// Unset selects the default policy: 0 up to 10,000 charts, 1% above.
  std::optional<double> t_opt_fraction;
  int local_aabb_count = 10;

  void check() const;
  double effective_t_opt(std::size_t chart_count) const;
};

/// Rigid pose applied to an input chart before scaling: pre-rotation by an
/// arbitrary angle, rotation by a multiple of 90 degrees, reflections, then a
/// translation that moves the bounding-box minimum to the origin.
struct Pose {
  double prerotation = 0.0;
  int rotation_deg = 0;
  bool reflect_x = false;
  bool reflect_y = false;
};

/// Vertices of `chart` under `pose`, normalized so the AABB minimum is (0, 0).
std::vector<Vec2> posed_vertices(const Chart& chart, const Pose& pose);

struct Placement {
  int chart_id = 0;
  int rotation_deg = 0;
  bool reflect_x = false;
  bool reflect_y = false;
  int tx = 0;
  int ty = 0;
  double prerotation_angle = 0.0;
  Fraction final_scale{1, 1};

  Pose pose() const { return {prerotation_angle, rotation_deg, reflect_x, reflect_y}; }
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Atlas-space vertices: posed, scaled by the final scale, then translated.
std::vector<Vec2> placed_vertices(const Chart& chart, const Placement& placement);

enum class ChartMode { Sequential, Prefix };

struct PackStats {
  int rows = 0;
  int knees_detected = 0;
  int knee_folds = 0;
  /// Indexed by chart id.
  std::vector<ChartMode> modes;
};

struct PackResult {
  bool success = false;
  int scale_index = 0;  // in [1, scale_count] on success
  int scale_count = 64;
  std::vector<Placement> placements;  // indexed by chart id
  PackStats stats;
  std::string diagnostic;

  Fraction scale() const { return {scale_index, scale_count}; }
  double scale_value() const { return scale().value(); }
  std::vector<double> per_chart_final_scale() const;
};

}  // namespace atlaspack
