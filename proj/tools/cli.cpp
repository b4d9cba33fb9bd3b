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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <regex>

#include "CLI11.hpp"
#include "atlaspack/chameleon.hpp"
#include "atlaspack/chartset_io.hpp"
#include "atlaspack/metrics.hpp"
#include "atlaspack/packer.hpp"
#include "atlaspack/parallel.hpp"
#include "atlaspack/synth.hpp"
#include "json.hpp"

namespace atlaspack {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string result;
  std::string atlas = "1024x1024";
  int gutter = 1;
  int scales = 64;
  bool prerotate = false;
  double t_opt = -1.0;  // negative: default policy
  int local_aabbs = 10;
  std::string mode = "tabi";
  std::string bench_mode = "both";
  std::string out;
  std::string svg;
  std::string report = "text";
  std::uint64_t seed = 1;
  int count = 100;
  std::string profile = "mixed";
  double max_height = 256.0;
  bool no_rotate = false;
  int jobs = 0;
  double texture_size = 1024.0;
  bool no_tight = false;
  bool no_balance = false;
};

AtlasSpec make_spec(const RunConfig& c)
{
  static const std::regex re(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(c.atlas, m, re)) throw UsageError("--atlas expects WxH, got '" + c.atlas + "'");
  AtlasSpec spec;
  try {
    spec.width = std::stoi(m[1]);
    spec.height = std::stoi(m[2]);
  } catch (const std::exception&) {
    throw UsageError("--atlas out of range");
  }
  spec.gutter = c.gutter;
  spec.scale_count = c.scales;
  spec.prerotate = c.prerotate;
  if (c.t_opt >= 0.0) spec.t_opt_fraction = c.t_opt;
  spec.local_aabb_count = c.local_aabbs;
  try {
    spec.check();
  } catch (const AtlasError& e) {
    throw UsageError(e.what());
  }
  return spec;
}

ChartSet load_input(const RunConfig& c)
{
  if (!std::filesystem::exists(c.input)) throw UsageError("input not found: " + c.input);
  return load_chart_set(c.input, format_from_path(c.input), c.texture_size);
}

struct Packed {
  PackResult result;
  double millis = 0.0;
};

Packed run_packer(const ChartSet& set, const AtlasSpec& spec, const RunConfig& c)
{
  const auto t0 = std::chrono::steady_clock::now();
  Packed p;
  if (c.mode == "chameleon") {
    p.result = chameleon_pack(set, spec);
  } else {
    TabiOptions o;
    o.tight = !c.no_tight;
    o.balanced = !c.no_balance;
    p.result = pack(set, spec, o);
  }
  p.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return p;
}

std::string fmt(double v, const char* f = "%.6f")
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

int cmd_pack(const RunConfig& c, std::ostream& out, std::ostream& err)
{
  const AtlasSpec spec = make_spec(c);
  const ChartSet set = load_input(c);
  const Packed p = run_packer(set, spec, c);
  if (!p.result.success) {
    err << "packing failed: " << p.result.diagnostic << "\n";
    return kExitPackFailed;
  }
  const double stretch = l2_stretch(set, p.result).l2_stretch;
  const double occ = occupancy(set, p.result, spec);
  if (!c.out.empty()) export_result(p.result, c.out);
  if (!c.svg.empty()) write_file(c.svg, render_atlas_svg(set, p.result, spec));
  if (c.report == "json") {
    nlohmann::json j{{"input", c.input},       {"mode", c.mode},     {"charts", set.charts.size()},
                     {"scale", p.result.scale().str()}, {"stretch", stretch}, {"occupancy", occ},
                     {"time_ms", p.millis}};
    out << j.dump() << "\n";
  } else {
    out << "scale " << p.result.scale().str() << "\n"
        << "stretch " << fmt(stretch) << "\n"
        << "occupancy " << fmt(occ) << "\n"
        << "time_ms " << fmt(p.millis, "%.3f") << "\n";
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out, std::ostream&)
{
  const AtlasSpec spec = make_spec(c);
  const ChartSet set = load_input(c);
  if (!std::filesystem::exists(c.result)) throw UsageError("result not found: " + c.result);
  const PackResult r = import_result(c.result);
  if (r.placements.size() != set.charts.size()) {
    throw UsageError("result has " + std::to_string(r.placements.size()) + " charts, input has " +
                     std::to_string(set.charts.size()));
  }
  const ValidationReport v = validate_atlas(set, r, spec);
  if (c.report == "json") {
    nlohmann::json j{{"overlap_texels", v.overlap_texels},
                     {"gutter_violation_texels", v.gutter_violation_texels},
                     {"out_of_bounds_texels", v.out_of_bounds_texels},
                     {"passed", v.passed}};
    out << j.dump() << "\n";
  } else {
    out << "overlap_texels " << v.overlap_texels << "\n"
        << "gutter_violation_texels " << v.gutter_violation_texels << "\n"
        << "out_of_bounds_texels " << v.out_of_bounds_texels << "\n"
        << (v.passed ? "passed" : "FAILED") << "\n";
  }
  return v.passed ? kExitOk : kExitInvalid;
}

int cmd_render(const RunConfig& c, std::ostream&, std::ostream&)
{
  const AtlasSpec spec = make_spec(c);
  const ChartSet set = load_input(c);
  const PackResult r = import_result(c.result);
  if (r.placements.size() != set.charts.size()) throw UsageError("result and input chart counts differ");
  if (c.svg.empty()) throw UsageError("render needs --svg");
  write_file(c.svg, render_atlas_svg(set, r, spec));
  return kExitOk;
}

int cmd_gen(const RunConfig& c, std::ostream& out, std::ostream&)
{
  if (c.count <= 0) throw UsageError("--count must be positive");
  SynthOptions o;
  o.seed = c.seed;
  o.count = c.count;
  o.max_height = c.max_height;
  o.rotate = !c.no_rotate;
  if (c.profile == "knee") {
    o.profile = SynthProfile::Knee;
  } else if (c.profile != "mixed") {
    throw UsageError("--profile expects mixed or knee");
  }
  const std::string text = chart_set_to_json(generate_chart_set(o));
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& c, std::ostream& out, std::ostream& err)
{
  namespace fs = std::filesystem;
  if (!fs::is_directory(c.input)) throw UsageError("corpus directory not found: " + c.input);
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(c.input)) {
    const auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".json" || ext == ".obj")) files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("empty corpus: " + c.input);
  const AtlasSpec spec = make_spec(c);
  std::vector<std::string> modes;
  if (c.bench_mode == "both") {
    modes = {"tabi", "chameleon"};
  } else {
    modes = {c.bench_mode};
  }

  struct Row {
    std::string input, mode;
    bool success = false;
    std::string scale;
    double stretch = 0, occupancy = 0, millis = 0;
  };
  std::vector<Row> rows;
  for (const auto& mode : modes) {
    RunConfig mc = c;
    mc.mode = mode;
    for (const auto& f : files) {
      mc.input = f;
      const ChartSet set = load_input(mc);
      const Packed p = run_packer(set, spec, mc);
      Row r{fs::path(f).filename().string(), mode, p.result.success, "-", 0, 0, p.millis};
      if (p.result.success) {
        r.scale = p.result.scale().str();
        r.stretch = l2_stretch(set, p.result).l2_stretch;
        r.occupancy = occupancy(set, p.result, spec);
      } else {
        err << f << " (" << mode << "): " << p.result.diagnostic << "\n";
      }
      rows.push_back(r);
    }
  }
  // aggregates over successful inputs
  std::vector<Row> agg;
  for (const auto& mode : modes) {
    Row a{"MEAN", mode, true, "-", 0, 0, 0};
    int n = 0;
    for (const auto& r : rows) {
      if (r.mode != mode || !r.success) continue;
      a.stretch += r.stretch;
      a.occupancy += r.occupancy;
      a.millis += r.millis;
      ++n;
    }
    if (n > 0) {
      a.stretch /= n;
      a.occupancy /= n;
      a.millis /= n;
    }
    a.success = n > 0;
    agg.push_back(a);
  }
  if (c.report == "json") {
    nlohmann::json j{{"rows", nlohmann::json::array()}, {"aggregate", nlohmann::json::array()}};
    auto row_json = [](const Row& r) {
      return nlohmann::json{{"input", r.input},         {"mode", r.mode},          {"success", r.success},
                            {"scale", r.scale},         {"stretch", r.stretch},    {"occupancy", r.occupancy},
                            {"time_ms", r.millis}};
    };
    for (const auto& r : rows) j["rows"].push_back(row_json(r));
    for (const auto& r : agg) j["aggregate"].push_back(row_json(r));
    out << j.dump(2) << "\n";
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-28s %-10s %-9s %10s %10s %10s\n", "input", "mode", "scale", "stretch",
                  "occupancy", "time_ms");
    out << buf;
    for (const auto* set : {&rows, &agg}) {
      for (const auto& r : *set) {
        std::snprintf(buf, sizeof buf, "%-28s %-10s %-9s %10.4f %10.4f %10.3f\n", r.input.c_str(), r.mode.c_str(),
                      r.scale.c_str(), r.stretch, r.occupancy, r.millis);
        out << buf;
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"atlaspack: texture atlas packing"};
  app.require_subcommand(1);
  RunConfig c;

  auto atlas_flags = [&c](CLI::App* s) {
    s->add_option("--atlas", c.atlas, "atlas size WxH")->capture_default_str();
    s->add_option("--gutter", c.gutter, "gutter in texels")->capture_default_str();
    s->add_option("--scales", c.scales, "number of scale candidates")->capture_default_str();
    s->add_flag("--prerotate", c.prerotate, "pre-rotate charts by their OBB angle");
    s->add_option("--t-opt", c.t_opt, "prefix folding threshold, fraction of atlas height");
    s->add_option("--local-aabbs", c.local_aabbs, "local AABB count")->capture_default_str();
    s->add_option("--texture-size", c.texture_size, "UV to texel factor for OBJ input")->capture_default_str();
    s->add_option("--report", c.report, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--jobs", c.jobs, "worker cap, 0 for all cores")->check(CLI::NonNegativeNumber);
  };

  auto* pk = app.add_subcommand("pack", "pack a chart set");
  pk->add_option("input", c.input, "chartset .json or .obj")->required();
  atlas_flags(pk);
  pk->add_option("--mode", c.mode, "tabi or chameleon")->check(CLI::IsMember({"tabi", "chameleon"}));
  pk->add_option("--out", c.out, "result file");
  pk->add_option("--svg", c.svg, "SVG preview");
  pk->add_flag("--no-tight", c.no_tight, "box proxies only");
  pk->add_flag("--no-balance", c.no_balance, "alternate row directions, no knees");

  auto* va = app.add_subcommand("validate", "check a result for overlaps and gutters");
  va->add_option("input", c.input)->required();
  va->add_option("result", c.result)->required();
  atlas_flags(va);

  auto* re = app.add_subcommand("render", "write an SVG of a result");
  re->add_option("input", c.input)->required();
  re->add_option("result", c.result)->required();
  re->add_option("--svg", c.svg)->required();
  atlas_flags(re);

  auto* ge = app.add_subcommand("gen", "generate a synthetic chart set");
  ge->add_option("--seed", c.seed)->capture_default_str();
  ge->add_option("--count", c.count)->capture_default_str();
  ge->add_option("--profile", c.profile, "mixed or knee")->capture_default_str();
  ge->add_option("--max-height", c.max_height)->capture_default_str();
  ge->add_flag("--no-rotate", c.no_rotate);
  ge->add_option("--out", c.out);

  auto* be = app.add_subcommand("bench", "pack every file of a corpus");
  be->add_option("corpus", c.input, "directory")->required();
  atlas_flags(be);
  be->add_option("--mode", c.bench_mode, "tabi, chameleon or both")
      ->check(CLI::IsMember({"tabi", "chameleon", "both"}))
      ->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_worker_count(c.jobs);
    int code = kExitUsage;
    if (*pk) code = cmd_pack(c, out, err);
    if (*va) code = cmd_validate(c, out, err);
    if (*re) code = cmd_render(c, out, err);
    if (*ge) code = cmd_gen(c, out, err);
    if (*be) code = cmd_bench(c, out, err);
    set_worker_count(0);
    return code;
  } catch (const std::exception& e) {
    set_worker_count(0);
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace atlaspack
