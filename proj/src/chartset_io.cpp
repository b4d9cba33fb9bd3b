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

#include "atlaspack/chartset_io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace atlaspack {

using nlohmann::json;

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AtlasError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw AtlasError("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw AtlasError("write failed: " + path);
}

ChartFormat format_from_path(const std::string& path)
{
  std::string ext = path.size() >= 4 ? path.substr(path.size() - 4) : "";
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".obj" ? ChartFormat::ObjUv : ChartFormat::ChartsetJson;
}

namespace {

// Drops zero-area charts, renumbers the rest in order and validates.
ChartSet finish(std::vector<Chart> charts, std::string name, LoadReport* report)
{
  ChartSet set;
  set.source_name = std::move(name);
  int dropped = 0;
  for (auto& c : charts) {
    if (c.vertices.size() < 3) throw AtlasError("chart " + std::to_string(c.id) + ": fewer than 3 vertices");
    if (c.triangles.empty()) throw AtlasError("chart " + std::to_string(c.id) + ": no triangles");
    if (!(c.area() > 0.0)) {
      ++dropped;
      continue;
    }
    c.id = static_cast<int>(set.charts.size());
    set.charts.push_back(std::move(c));
  }
  if (report) report->dropped_degenerate = dropped;
  if (set.charts.empty()) throw AtlasError("no charts");
  check_chart_set(set);
  return set;
}

}  // namespace

ChartSet parse_chart_set_json(std::string_view text, std::string source_name, LoadReport* report)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw AtlasError(std::string("chartset parse error: ") + e.what());
  }
  try {
    if (source_name.empty() && doc.contains("name")) source_name = doc.at("name").get<std::string>();
    std::vector<Chart> charts;
    for (const auto& jc : doc.at("charts")) {
      Chart c;
      c.id = jc.at("id").get<int>();
      for (const auto& v : jc.at("vertices")) {
        if (v.size() != 2) throw AtlasError("vertex must have 2 coordinates");
        c.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
      }
      for (const auto& t : jc.at("triangles")) {
        if (t.size() != 3) throw AtlasError("triangle must have 3 indices");
        const auto a = t[0].get<std::int64_t>();
        const auto b = t[1].get<std::int64_t>();
        const auto d = t[2].get<std::int64_t>();
        const auto n = static_cast<std::int64_t>(c.vertices.size());
        for (auto idx : {a, b, d}) {
          if (idx < 0 || idx >= n) throw AtlasError("chart " + std::to_string(c.id) + ": triangle index out of range");
        }
        c.triangles.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(d)});
      }
      charts.push_back(std::move(c));
    }
    std::stable_sort(charts.begin(), charts.end(), [](const Chart& a, const Chart& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < charts.size(); ++i) {
      if (charts[i].id != static_cast<int>(i)) throw AtlasError("chart ids must be unique and contiguous from 0");
    }
    return finish(std::move(charts), std::move(source_name), report);
  } catch (const json::exception& e) {
    throw AtlasError(std::string("chartset format error: ") + e.what());
  }
}

std::string chart_set_to_json(const ChartSet& set)
{
  json doc;
  doc["name"] = set.source_name;
  doc["charts"] = json::array();
  for (const auto& c : set.charts) {
    json jc;
    jc["id"] = c.id;
    jc["vertices"] = json::array();
    for (const auto& p : c.vertices) jc["vertices"].push_back({p.x, p.y});
    jc["triangles"] = json::array();
    for (const auto& t : c.triangles) jc["triangles"].push_back({t[0], t[1], t[2]});
    doc["charts"].push_back(std::move(jc));
  }
  return doc.dump() + "\n";
}

ChartSet parse_obj_uv(std::string_view text, double texture_dim, std::string source_name, LoadReport* report)
{
  if (!(texture_dim > 0.0)) throw AtlasError("texture dimension must be positive");
  std::vector<Vec2> uvs;
  std::vector<std::vector<std::int64_t>> faces;  // uv indices, 0-based
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "vt") {
      double u = 0.0;
      double v = 0.0;
      if (!(ls >> u >> v)) throw AtlasError("obj line " + std::to_string(line_no) + ": bad vt");
      uvs.push_back({u, v});
    } else if (tag == "f") {
      std::vector<std::int64_t> face;
      std::string ref;
      bool has_uv = true;
      while (ls >> ref) {
        const auto s1 = ref.find('/');
        if (s1 == std::string::npos) {
          has_uv = false;
          break;
        }
        const auto s2 = ref.find('/', s1 + 1);
        const std::string vt = ref.substr(s1 + 1, s2 == std::string::npos ? std::string::npos : s2 - s1 - 1);
        if (vt.empty()) {
          has_uv = false;
          break;
        }
        std::int64_t idx = 0;
        try {
          idx = std::stoll(vt);
        } catch (const std::exception&) {
          throw AtlasError("obj line " + std::to_string(line_no) + ": bad face index");
        }
        idx = idx < 0 ? static_cast<std::int64_t>(uvs.size()) + idx : idx - 1;
        if (idx < 0 || idx >= static_cast<std::int64_t>(uvs.size())) {
          throw AtlasError("obj line " + std::to_string(line_no) + ": uv index out of range");
        }
        face.push_back(idx);
      }
      if (has_uv && face.size() >= 3) faces.push_back(std::move(face));
    }
  }

  // weld: equal quantized positions share one vertex
  constexpr double kWeld = 1e-7;
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint32_t> cell;
  std::vector<std::uint32_t> weld(uvs.size());
  std::vector<Vec2> welded;
  for (std::size_t i = 0; i < uvs.size(); ++i) {
    const auto key = std::make_pair(static_cast<std::int64_t>(std::llround(uvs[i].x / kWeld)),
                                    static_cast<std::int64_t>(std::llround(uvs[i].y / kWeld)));
    auto [it, inserted] = cell.emplace(key, static_cast<std::uint32_t>(welded.size()));
    if (inserted) welded.push_back(uvs[i]);
    weld[i] = it->second;
  }

  std::vector<std::uint32_t> parent(welded.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<Triangle> tris;
  for (const auto& f : faces) {
    for (std::size_t j = 1; j + 1 < f.size(); ++j) {
      tris.push_back({weld[static_cast<std::size_t>(f[0])], weld[static_cast<std::size_t>(f[j])],
                      weld[static_cast<std::size_t>(f[j + 1])]});
    }
  }
  for (const auto& t : tris) {
    for (int e = 1; e < 3; ++e) {
      const auto a = find(t[0]);
      const auto b = find(t[static_cast<std::size_t>(e)]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // islands in order of first appearance
  std::unordered_map<std::uint32_t, std::size_t> island;
  std::vector<Chart> charts;
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> local;
  for (const auto& t : tris) {
    const auto root = find(t[0]);
    auto [it, inserted] = island.emplace(root, charts.size());
    if (inserted) {
      charts.emplace_back();
      charts.back().id = static_cast<int>(charts.size()) - 1;
      local.emplace_back();
    }
    Chart& c = charts[it->second];
    auto& map = local[it->second];
    Triangle lt{};
    for (int k = 0; k < 3; ++k) {
      const auto v = t[static_cast<std::size_t>(k)];
      auto [vi, fresh] = map.emplace(v, static_cast<std::uint32_t>(c.vertices.size()));
      if (fresh) c.vertices.push_back({welded[v].x * texture_dim, (1.0 - welded[v].y) * texture_dim});
      lt[static_cast<std::size_t>(k)] = vi->second;
    }
    c.triangles.push_back(lt);
  }
  if (charts.empty()) throw AtlasError("no charts");
  // islands always have 3+ vertices; drop only zero-area ones
  return finish(std::move(charts), std::move(source_name), report);
}

ChartSet load_chart_set(const std::string& path, ChartFormat format, double texture_dim, LoadReport* report)
{
  const std::string text = read_file(path);
  if (format == ChartFormat::ObjUv) return parse_obj_uv(text, texture_dim, path, report);
  return parse_chart_set_json(text, {}, report);
}

void save_chart_set(const ChartSet& set, const std::string& path) { write_file(path, chart_set_to_json(set)); }

std::string format_result(const PackResult& result)
{
  if (!result.success) throw AtlasError("cannot export a failed packing");
  std::string out = "scale " + result.scale().str() + "\n";
  char buf[96];
  for (const auto& p : result.placements) {
    std::snprintf(buf, sizeof buf, "%.17g", p.prerotation_angle);
    out += "chart " + std::to_string(p.chart_id) + " rot " + std::to_string(p.rotation_deg) + " rx " +
           (p.reflect_x ? "1" : "0") + " ry " + (p.reflect_y ? "1" : "0") + " tx " + std::to_string(p.tx) + " ty " +
           std::to_string(p.ty) + " prerot " + buf + " final_scale " + p.final_scale.str() + "\n";
  }
  return out;
}

namespace {

Fraction parse_fraction(const std::string& s)
{
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw AtlasError("bad fraction '" + s + "'");
  try {
    Fraction f{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    if (f.den <= 0 || f.num < 0) throw AtlasError("bad fraction '" + s + "'");
    return f;
  } catch (const std::logic_error&) {
    throw AtlasError("bad fraction '" + s + "'");
  }
}

}  // namespace

PackResult parse_result(std::string_view text)
{
  PackResult r;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_scale = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    const std::string where = "result line " + std::to_string(line_no);
    if (tag == "scale") {
      std::string f;
      ls >> f;
      const Fraction s = parse_fraction(f);
      r.scale_index = static_cast<int>(s.num);
      r.scale_count = static_cast<int>(s.den);
      have_scale = true;
    } else if (tag == "chart") {
      Placement p;
      std::string k_rot, k_rx, k_ry, k_tx, k_ty, k_pr, k_fs, prerot, fs;
      int rx = 0;
      int ry = 0;
      if (!(ls >> p.chart_id >> k_rot >> p.rotation_deg >> k_rx >> rx >> k_ry >> ry >> k_tx >> p.tx >> k_ty >> p.ty >>
            k_pr >> prerot >> k_fs >> fs) ||
          k_rot != "rot" || k_rx != "rx" || k_ry != "ry" || k_tx != "tx" || k_ty != "ty" || k_pr != "prerot" ||
          k_fs != "final_scale") {
        throw AtlasError(where + ": malformed chart record");
      }
      p.reflect_x = rx != 0;
      p.reflect_y = ry != 0;
      p.prerotation_angle = std::strtod(prerot.c_str(), nullptr);
      p.final_scale = parse_fraction(fs);
      if (p.chart_id != static_cast<int>(r.placements.size())) throw AtlasError(where + ": chart ids out of order");
      r.placements.push_back(p);
    } else {
      throw AtlasError(where + ": unknown record '" + tag + "'");
    }
  }
  if (!have_scale) throw AtlasError("result file has no scale line");
  if (r.placements.empty()) throw AtlasError("result file has no charts");
  r.success = true;
  r.stats.modes.reserve(r.placements.size());
  for (const auto& p : r.placements) {
    r.stats.modes.push_back(p.final_scale == r.scale() ? ChartMode::Sequential : ChartMode::Prefix);
  }
  return r;
}

void export_result(const PackResult& result, const std::string& path) { write_file(path, format_result(result)); }

PackResult import_result(const std::string& path) { return parse_result(read_file(path)); }

std::vector<std::uint32_t> outer_boundary(const Chart& chart)
{
  // undirected edges used by exactly one triangle
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> uses;
  for (const auto& t : chart.triangles) {
    if (signed_triangle_area(chart.vertices[t[0]], chart.vertices[t[1]], chart.vertices[t[2]]) == 0.0) continue;
    for (int e = 0; e < 3; ++e) {
      auto a = t[static_cast<std::size_t>(e)];
      auto b = t[static_cast<std::size_t>((e + 1) % 3)];
      if (a > b) std::swap(a, b);
      ++uses[{a, b}];
    }
  }
  std::multimap<std::uint32_t, std::uint32_t> adj;
  for (const auto& [e, n] : uses) {
    if (n != 1) continue;
    adj.emplace(e.first, e.second);
    adj.emplace(e.second, e.first);
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> used;
  std::vector<std::uint32_t> best;
  double best_area = -1.0;
  for (const auto& [start, next0] : adj) {
    const auto key0 = std::minmax(start, next0);
    if (used[{key0.first, key0.second}]) continue;
    std::vector<std::uint32_t> loop{start};
    std::uint32_t prev = start;
    std::uint32_t cur = next0;
    used[{key0.first, key0.second}] = true;
    while (cur != start) {
      loop.push_back(cur);
      bool moved = false;
      auto range = adj.equal_range(cur);
      for (auto it = range.first; it != range.second; ++it) {
        const auto k = std::minmax(cur, it->second);
        if (used[{k.first, k.second}]) continue;
        used[{k.first, k.second}] = true;
        prev = cur;
        cur = it->second;
        moved = true;
        break;
      }
      if (!moved) break;
    }
    (void)prev;
    if (cur != start || loop.size() < 3) continue;
    double area = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
      area += cross(chart.vertices[loop[i]], chart.vertices[loop[(i + 1) % loop.size()]]);
    }
    area = std::abs(area) * 0.5;
    if (area > best_area) {
      best_area = area;
      best = std::move(loop);
    }
  }
  if (best.empty()) {
    // non-manifold soup: fall back to the first triangle
    const auto& t = chart.triangles.front();
    best = {t[0], t[1], t[2]};
  }
  return best;
}

namespace {

std::string color_for(int id)
{
  // golden-ratio hue walk, fixed saturation and value
  const double h = std::fmod(id * 0.618033988749895, 1.0) * 6.0;
  const double s = 0.55;
  const double v = 0.9;
  const int sector = static_cast<int>(h) % 6;
  const double f = h - std::floor(h);
  const double p = v * (1 - s);
  const double q = v * (1 - s * f);
  const double t = v * (1 - s * (1 - f));
  double r = v, g = t, b = p;
  switch (sector) {
    case 1: r = q, g = v, b = p; break;
    case 2: r = p, g = v, b = t; break;
    case 3: r = p, g = q, b = v; break;
    case 4: r = t, g = p, b = v; break;
    case 5: r = v, g = p, b = q; break;
    default: break;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r * 255)),
                static_cast<int>(std::lround(g * 255)), static_cast<int>(std::lround(b * 255)));
  return buf;
}

}  // namespace

std::string render_atlas_svg(const ChartSet& set, const PackResult& result, const AtlasSpec& spec)
{
  if (!result.success) throw AtlasError("cannot render a failed packing");
  if (result.placements.size() != set.charts.size()) throw AtlasError("placement count differs from chart count");
  std::string out;
  const std::string w = std::to_string(spec.width);
  const std::string h = std::to_string(spec.height);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h +
         "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  char buf[64];
  for (std::size_t i = 0; i < set.charts.size(); ++i) {
    const Chart& c = set.charts[i];
    const auto pts = placed_vertices(c, result.placements[i]);
    out += "<polygon id=\"chart-" + std::to_string(c.id) + "\" fill=\"" + color_for(c.id) + "\" points=\"";
    bool first = true;
    for (auto v : outer_boundary(c)) {
      std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", first ? "" : " ", pts[v].x, pts[v].y);
      out += buf;
      first = false;
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace atlaspack
