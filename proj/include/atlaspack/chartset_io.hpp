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

// Chart set files, result files and SVG previews.
//
// chartset_json:
//   { "name": str, "charts": [ { "id": int, "vertices": [[x,y],...],
//                                "triangles": [[a,b,c],...] } ] }
//
// result file, one record per line:
//   scale <i>/<n>
//   chart <id> rot <deg> rx <0|1> ry <0|1> tx <int> ty <int> prerot <radians> final_scale <p>/<q>

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "atlaspack/chart.hpp"

namespace atlaspack {

enum class ChartFormat { ChartsetJson, ObjUv };

/// Picks ObjUv for a ".obj" extension, chartset_json otherwise.
ChartFormat format_from_path(const std::string& path);

struct LoadReport {
  /// Zero-area charts or islands that were dropped.
  int dropped_degenerate = 0;
};

ChartSet parse_chart_set_json(std::string_view text, std::string source_name = {}, LoadReport* report = nullptr);
std::string chart_set_to_json(const ChartSet& set);

/// UV islands of an OBJ file; each island becomes one chart. UVs are welded
/// within 1e-7 and mapped to texels as x = u * dim, y = (1 - v) * dim.
ChartSet parse_obj_uv(std::string_view text, double texture_dim, std::string source_name = {},
                      LoadReport* report = nullptr);

ChartSet load_chart_set(const std::string& path, ChartFormat format, double texture_dim = 1024.0,
                        LoadReport* report = nullptr);
void save_chart_set(const ChartSet& set, const std::string& path);

std::string format_result(const PackResult& result);
PackResult parse_result(std::string_view text);
void export_result(const PackResult& result, const std::string& path);
PackResult import_result(const std::string& path);

/// Vertex indices of the boundary loop enclosing the largest area.
std::vector<std::uint32_t> outer_boundary(const Chart& chart);

std::string render_atlas_svg(const ChartSet& set, const PackResult& result, const AtlasSpec& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace atlaspack
