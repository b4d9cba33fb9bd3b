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

#include "atlaspack/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace atlaspack {

bool Coverage::at(int x, int y) const
{
  if (x < x0 || y < y0 || x >= x0 + w || y >= y0 + h) return false;
  return bits[static_cast<std::size_t>(y - y0) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x - x0)] != 0;
}

std::int64_t Coverage::count() const { return std::count(bits.begin(), bits.end(), std::uint8_t{1}); }

Coverage Coverage::dilated(int r) const
{
  if (r <= 0) return *this;
  Coverage out;
  out.x0 = x0 - r;
  out.y0 = y0 - r;
  out.w = w + 2 * r;
  out.h = h + 2 * r;
  const auto ow = static_cast<std::size_t>(out.w);
  std::vector<std::uint8_t> wide(ow * static_cast<std::size_t>(h), 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)]) continue;
      for (int dx = 0; dx <= 2 * r; ++dx) wide[static_cast<std::size_t>(y) * ow + static_cast<std::size_t>(x + dx)] = 1;
    }
  }
  out.bits.assign(ow * static_cast<std::size_t>(out.h), 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < out.w; ++x) {
      if (!wide[static_cast<std::size_t>(y) * ow + static_cast<std::size_t>(x)]) continue;
      for (int dy = 0; dy <= 2 * r; ++dy) out.bits[static_cast<std::size_t>(y + dy) * ow + static_cast<std::size_t>(x)] = 1;
    }
  }
  return out;
}

bool triangle_touches_texel(Vec2 a, Vec2 b, Vec2 c, int x, int y, double tol)
{
  const double x0 = x + tol;
  const double x1 = x + 1 - tol;
  const double y0 = y + tol;
  const double y1 = y + 1 - tol;
  if (std::max({a.x, b.x, c.x}) <= x0 || std::min({a.x, b.x, c.x}) >= x1) return false;
  if (std::max({a.y, b.y, c.y}) <= y0 || std::min({a.y, b.y, c.y}) >= y1) return false;
  // edge normals: the square is separated if all its corners are strictly
  // outside one edge
  const double orient = cross(b - a, c - a);
  const Vec2 v[3] = {a, b, c};
  for (int e = 0; e < 3; ++e) {
    const Vec2 p = v[e];
    const Vec2 q = v[(e + 1) % 3];
    auto side = [&](double px, double py) { return cross(q - p, Vec2{px, py} - p) * orient; };
    if (side(x0, y0) <= 0 && side(x1, y0) <= 0 && side(x0, y1) <= 0 && side(x1, y1) <= 0) return false;
  }
  return true;
}

Coverage rasterize(std::span<const Vec2> vertices, std::span<const Triangle> triangles, double tol)
{
  Coverage cov;
  if (vertices.empty()) return cov;
  double minx = vertices[0].x, maxx = vertices[0].x, miny = vertices[0].y, maxy = vertices[0].y;
  for (const auto& p : vertices) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  cov.x0 = static_cast<int>(std::floor(minx));
  cov.y0 = static_cast<int>(std::floor(miny));
  cov.w = std::max(1, static_cast<int>(std::ceil(maxx)) - cov.x0);
  cov.h = std::max(1, static_cast<int>(std::ceil(maxy)) - cov.y0);
  cov.bits.assign(static_cast<std::size_t>(cov.w) * static_cast<std::size_t>(cov.h), 0);
  for (const auto& t : triangles) {
    const Vec2 a = vertices[t[0]];
    const Vec2 b = vertices[t[1]];
    const Vec2 c = vertices[t[2]];
    if (signed_triangle_area(a, b, c) == 0.0) continue;
    const int tx0 = static_cast<int>(std::floor(std::min({a.x, b.x, c.x})));
    const int tx1 = static_cast<int>(std::ceil(std::max({a.x, b.x, c.x})));
    const int ty0 = static_cast<int>(std::floor(std::min({a.y, b.y, c.y})));
    const int ty1 = static_cast<int>(std::ceil(std::max({a.y, b.y, c.y})));
    for (int y = ty0; y < ty1; ++y) {
      for (int x = tx0; x < tx1; ++x) {
        auto& bit = cov.bits[static_cast<std::size_t>(y - cov.y0) * static_cast<std::size_t>(cov.w) +
                             static_cast<std::size_t>(x - cov.x0)];
        if (!bit && triangle_touches_texel(a, b, c, x, y, tol)) bit = 1;
      }
    }
  }
  return cov;
}

namespace {

void require_success(const ChartSet& set, const PackResult& result)
{
  if (!result.success) throw AtlasError("packing result is not a success");
  if (result.placements.size() != set.charts.size()) throw AtlasError("placement count differs from chart count");
  for (std::size_t i = 0; i < set.charts.size(); ++i) {
    if (result.placements[i].chart_id != set.charts[i].id) throw AtlasError("placement ids do not match chart ids");
  }
}

std::vector<Coverage> chart_coverages(const ChartSet& set, const PackResult& result, Exec exec)
{
  std::vector<Coverage> cov(set.charts.size());
  for_each_index(exec, cov.size(), [&](std::size_t i) {
    const auto pts = placed_vertices(set.charts[i], result.placements[i]);
    cov[i] = rasterize(pts, set.charts[i].triangles);
  });
  return cov;
}

// Adds the in-atlas texels of `c` to the count grid; returns texels outside.
std::int64_t accumulate(const Coverage& c, std::vector<std::uint8_t>& grid, int width, int height)
{
  std::int64_t outside = 0;
  for (int y = 0; y < c.h; ++y) {
    for (int x = 0; x < c.w; ++x) {
      if (!c.bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(c.w) + static_cast<std::size_t>(x)]) continue;
      const int ax = c.x0 + x;
      const int ay = c.y0 + y;
      if (ax < 0 || ay < 0 || ax >= width || ay >= height) {
        ++outside;
        continue;
      }
      auto& g = grid[static_cast<std::size_t>(ay) * static_cast<std::size_t>(width) + static_cast<std::size_t>(ax)];
      if (g < 2) ++g;
    }
  }
  return outside;
}

std::int64_t multi_covered(const std::vector<std::uint8_t>& grid)
{
  return std::count_if(grid.begin(), grid.end(), [](std::uint8_t v) { return v >= 2; });
}

}  // namespace

ValidationReport validate_atlas(const ChartSet& set, const PackResult& result, const AtlasSpec& spec, Exec exec)
{
  require_success(set, result);
  const auto cov = chart_coverages(set, result, exec);
  const std::size_t cells = static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height);
  ValidationReport rep;
  std::vector<std::uint8_t> grid(cells, 0);
  for (const auto& c : cov) rep.out_of_bounds_texels += accumulate(c, grid, spec.width, spec.height);
  rep.overlap_texels = multi_covered(grid);

  std::vector<Coverage> dil(cov.size());
  for_each_index(exec, cov.size(), [&](std::size_t i) { dil[i] = cov[i].dilated(spec.gutter); });
  std::fill(grid.begin(), grid.end(), 0);
  // dilation past the atlas border is clipped, not reported
  for (const auto& c : dil) accumulate(c, grid, spec.width, spec.height);
  rep.gutter_violation_texels = multi_covered(grid);
  rep.passed = rep.overlap_texels == 0 && rep.gutter_violation_texels == 0 && rep.out_of_bounds_texels == 0;
  return rep;
}

StretchReport l2_stretch(const ChartSet& set, const PackResult& result)
{
  require_success(set, result);
  StretchReport rep;
  rep.per_chart_stretch.resize(set.charts.size());
  double sum = 0.0;
  double weight = 0.0;
  for (std::size_t i = 0; i < set.charts.size(); ++i) {
    const Chart& chart = set.charts[i];
    const auto packed = placed_vertices(chart, result.placements[i]);
    double csum = 0.0;
    double cweight = 0.0;
    for (const auto& t : chart.triangles) {
      const Vec2 i0 = chart.vertices[t[0]];
      const Vec2 e1 = chart.vertices[t[1]] - i0;
      const Vec2 e2 = chart.vertices[t[2]] - i0;
      const double area = 0.5 * std::abs(cross(e1, e2));
      if (area == 0.0) continue;
      const Vec2 p0 = packed[t[0]];
      const Vec2 f1 = packed[t[1]] - p0;
      const Vec2 f2 = packed[t[2]] - p0;
      const double det = cross(f1, f2);
      if (std::abs(det) <= 1e-12 * std::abs(cross(e1, e2))) {
        throw AtlasError("chart " + std::to_string(chart.id) + ": degenerate packed triangle");
      }
      // J = [e1 e2] * inverse([f1 f2])
      const double inv[2][2] = {{f2.y / det, -f2.x / det}, {-f1.y / det, f1.x / det}};
      const double j00 = e1.x * inv[0][0] + e2.x * inv[1][0];
      const double j01 = e1.x * inv[0][1] + e2.x * inv[1][1];
      const double j10 = e1.y * inv[0][0] + e2.y * inv[1][0];
      const double j11 = e1.y * inv[0][1] + e2.y * inv[1][1];
      const double s2 = 0.5 * (j00 * j00 + j01 * j01 + j10 * j10 + j11 * j11);
      csum += s2 * area;
      cweight += area;
    }
    rep.per_chart_stretch[i] = cweight > 0.0 ? std::sqrt(csum / cweight) : 1.0;
    sum += csum;
    weight += cweight;
  }
  rep.l2_stretch = weight > 0.0 ? std::sqrt(sum / weight) : 1.0;
  return rep;
}

double occupancy(const ChartSet& set, const PackResult& result, const AtlasSpec& spec, Exec exec)
{
  require_success(set, result);
  const auto cov = chart_coverages(set, result, exec);
  std::vector<std::uint8_t> grid(static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height), 0);
  for (const auto& c : cov) accumulate(c, grid, spec.width, spec.height);
  const auto covered = std::count_if(grid.begin(), grid.end(), [](std::uint8_t v) { return v >= 1; });
  return static_cast<double>(covered) / static_cast<double>(grid.size());
}

}  // namespace atlaspack
