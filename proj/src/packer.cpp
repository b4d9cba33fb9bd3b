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

#include "atlaspack/packer.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace atlaspack {

std::vector<double> prerotate(const ChartSet& set)
{
  std::vector<double> angles(set.charts.size(), 0.0);
  for_each_index(Exec::Parallel, set.charts.size(),
                 [&](std::size_t i) { angles[i] = -compute_obb(set.charts[i]).angle; });
  return angles;
}

PreparedInput prepare_input(const ChartSet& set, const AtlasSpec& spec, const TabiOptions& options)
{
  PreparedInput in;
  if (spec.prerotate) in.prerotation = prerotate(set);
  ProxyOptions po;
  po.local_aabb_count = spec.local_aabb_count;
  po.orient = options.tight;
  po.exec = options.exec;
  po.prerotation = in.prerotation;
  in.proxies = build_proxies(set, po);
  in.ordered.reserve(in.proxies.order.size());
  in.area.reserve(in.proxies.order.size());
  for (int id : in.proxies.order) {
    const ChartProxy& p = in.proxies.proxies[static_cast<std::size_t>(id)];
    in.ordered.push_back(&p);
    in.area.push_back(p.area);
  }
  return in;
}

bool should_switch_to_prefix(int next_tallest_height, double t_opt_fraction, int atlas_height, bool pending_knee)
{
  if (pending_knee) return false;
  return next_tallest_height < t_opt_fraction * atlas_height;
}

PrefixLayout prefix_layout(std::span<const std::int64_t> advance, int width, Exec exec)
{
  PrefixLayout out;
  std::vector<std::int64_t> end(advance.size());
  inclusive_scan(exec, advance, end);
  out.start.resize(advance.size());
  out.row.resize(advance.size());
  for_each_index(exec, advance.size(), [&](std::size_t j) {
    out.start[j] = end[j] - advance[j];
    out.row[j] = static_cast<int>(out.start[j] / width);
  });
  return out;
}

std::int64_t intermediate_subdivision(std::int64_t extent, int width)
{
  if (extent <= width) return kPrefixSubdiv;
  return (kPrefixSubdiv * width) / extent;
}

void prefix_fold_remaining(RowPacker& packer, Exec exec)
{
  ScaledCharts& charts = packer.charts();
  const int first = packer.row_start();
  const int n = charts.count();
  if (first >= n || packer.failed()) return;
  const AtlasSpec& spec = packer.spec();
  const int g2 = 2 * spec.gutter;
  const Fraction scale = packer.scale();
  const bool tight = charts.tight();

  charts.prepare(first, n, exec);
  const auto m = static_cast<std::size_t>(n - first);
  std::vector<std::int64_t> advance(m);
  for (std::size_t j = 0; j < m; ++j) {
    const int k = first + static_cast<int>(j);
    advance[j] = k + 1 < n ? charts.width(k) + g2 - charts.pair(k, false).distance : charts.width(k);
  }
  const PrefixLayout layout = prefix_layout(advance, spec.width, exec);
  const auto& row_of = layout.row;

  std::vector<int> frontline = packer.frontline();
  int prefix_row = 0;
  for (std::size_t a = 0; a < m;) {
    std::size_t b = a;
    while (b + 1 < m && row_of[b + 1] == row_of[a]) ++b;
    const int ka = first + static_cast<int>(a);
    const int kb = first + static_cast<int>(b);
    const bool ltr = prefix_row % 3 == 0;
    const bool mirrored = charts.uses_mirror(ltr);

    const std::int64_t extent = layout.start[b] - layout.start[a] + charts.width(kb);
    std::int64_t sub = intermediate_subdivision(extent, spec.width);
    const std::size_t len = b - a + 1;
    // placed (atlas frame) shapes; rescaled rows own theirs
    std::vector<const TexelShape*> placed(len);
    std::vector<TexelShape> owned;
    std::vector<TexelPair> pairs(len);
    FoldResult fold;
    if (sub == kPrefixSubdiv) {
      // the row keeps the candidate scale: reuse the cached shapes and pairs
      for_each_index(exec, len, [&](std::size_t j) { charts.shape(ka + static_cast<int>(j), mirrored); });
      for_each_index(exec, len - 1,
                     [&](std::size_t j) { pairs[j] = charts.pair(ka + static_cast<int>(j), mirrored); });
      for (std::size_t j = 0; j < len; ++j) placed[j] = &charts.shape(ka + static_cast<int>(j), mirrored);
      auto width = [&](int k) { return charts.width(k); };
      auto dist = [&](int k) { return pairs[static_cast<std::size_t>(k - ka)].distance; };
      fold = fold_row(ka, kb + 1, spec.width, true, spec.gutter, width, dist);
      if (fold.row_end != kb) {
        const FoldResult free = fold_row(ka, kb + 1, INT_MAX, true, spec.gutter, width, dist);
        const std::int64_t wide = free.offsets.back() + width(kb);
        sub = std::min(sub - 1, (sub * spec.width) / wide);
      }
    }
    if (fold.row_end != kb) {
      std::vector<TexelShape> line(len);
      owned.resize(len);
      for (;;) {
        if (sub < 1) {
          packer.fail("prefix row starting at sorted position " + std::to_string(ka) + " cannot be scaled to fit");
          return;
        }
        const double sc = static_cast<double>(scale.num * sub) / static_cast<double>(scale.den * kPrefixSubdiv);
        for_each_index(exec, len, [&](std::size_t j) {
          const ChartProxy& p = charts.proxy(ka + static_cast<int>(j));
          owned[j] = make_texel_shape(mirrored ? p.mirrored : p.forward, sc, tight);
          line[j] = mirrored ? mirror_shape(owned[j]) : owned[j];
        });
        for (std::size_t j = 0; j + 1 < len; ++j) {
          pairs[j] = tight ? texel_pair(line[j], line[j + 1], spec.gutter) : TexelPair{};
        }
        auto width = [&](int k) { return line[static_cast<std::size_t>(k - ka)].width; };
        auto dist = [&](int k) { return pairs[static_cast<std::size_t>(k - ka)].distance; };
        fold = fold_row(ka, kb + 1, spec.width, true, spec.gutter, width, dist);
        if (fold.row_end == kb) break;
        const FoldResult free = fold_row(ka, kb + 1, INT_MAX, true, spec.gutter, width, dist);
        const std::int64_t wide = free.offsets.back() + width(kb);
        sub = std::min(sub - 1, (sub * spec.width) / wide);
      }
      for (std::size_t j = 0; j < len; ++j) placed[j] = &owned[j];
    }

    std::vector<RowItem> items(len);
    std::vector<int> xs(len);
    std::vector<int> ks(len);
    std::vector<PairLock> locks(len - 1);
    for (std::size_t j = 0; j < len; ++j) {
      const int w = placed[j]->width;
      xs[j] = ltr ? fold.offsets[j] : spec.width - fold.offsets[j] - w;
      ks[j] = ka + static_cast<int>(j);
      items[j] = {xs[j], placed[j]};
      if (j + 1 < len) locks[j] = pairs[j].lock;
    }
    const std::vector<int> ys = push_row(frontline, items, locks, spec.gutter);
    const Fraction final_scale =
        sub == kPrefixSubdiv ? scale : Fraction{scale.num * sub, scale.den * kPrefixSubdiv};
    packer.commit_external(ks, xs, ys, mirrored, final_scale, frontline);
    if (packer.failed()) return;
    ++prefix_row;
    a = b + 1;
  }
}

ScaleCandidate pack_at_scale(const ChartSet& set, const PreparedInput& input, const AtlasSpec& spec, int scale_index,
                             const TabiOptions& options)
{
  ScaleCandidate cand;
  cand.index = scale_index;
  RowPacker packer(input.ordered, spec, Fraction{scale_index, spec.scale_count},
                   RowOptions{options.tight, options.balanced});
  const double t_opt = spec.effective_t_opt(set.charts.size());
  while (!packer.finished()) {
    packer.refresh_knee();
    if (t_opt > 0.0 && should_switch_to_prefix(packer.charts().height(packer.row_start()), t_opt, spec.height,
                                               packer.pending_knee().has_value())) {
      prefix_fold_remaining(packer, options.exec);
      cand.used_prefix = true;
      break;
    }
    packer.commit_row(false);
  }
  cand.working_bytes = packer.bytes();
  cand.stats = packer.stats();
  if (packer.failed()) {
    cand.diagnostic = packer.diagnostic();
    return cand;
  }

  cand.success = true;
  cand.placements.resize(set.charts.size());
  cand.stats.modes.assign(set.charts.size(), ChartMode::Sequential);
  const auto& placed = packer.placed();
  double weighted = 0.0;
  double total = 0.0;
  bool any_prefix = false;
  for (std::size_t k = 0; k < placed.size(); ++k) {
    const ChartProxy& proxy = *input.ordered[k];
    const PlacedChart& pc = placed[k];
    const Pose& pose = pc.mirrored ? proxy.mirrored.pose : proxy.forward.pose;
    Placement& pl = cand.placements[static_cast<std::size_t>(proxy.chart_id)];
    pl.chart_id = proxy.chart_id;
    pl.rotation_deg = pose.rotation_deg;
    pl.reflect_x = pose.reflect_x;
    pl.reflect_y = pose.reflect_y;
    pl.tx = pc.x;
    pl.ty = pc.y;
    pl.prerotation_angle = pose.prerotation;
    pl.final_scale = pc.final_scale;
    cand.stats.modes[static_cast<std::size_t>(proxy.chart_id)] = pc.mode;
    any_prefix = any_prefix || pc.mode == ChartMode::Prefix;
    weighted += input.area[k] * pc.final_scale.value();
    total += input.area[k];
  }
  // without prefix rows every chart has the candidate scale; keep it exact
  cand.area_weighted_final_scale = any_prefix ? weighted / total : Fraction{scale_index, spec.scale_count}.value();
  return cand;
}

std::vector<ScaleCandidate> pack_all_scales(const ChartSet& set, const AtlasSpec& spec, const TabiOptions& options)
{
  check_chart_set(set);
  spec.check();
  const PreparedInput input = prepare_input(set, spec, options);
  std::vector<ScaleCandidate> cands(static_cast<std::size_t>(spec.scale_count) + 1);
  // largest scales first: they fail fastest and balance the dynamic schedule
  for_each_index(options.exec, static_cast<std::size_t>(spec.scale_count), [&](std::size_t j) {
    const int index = spec.scale_count - static_cast<int>(j);
    cands[static_cast<std::size_t>(index)] = pack_at_scale(set, input, spec, index, options);
  });
  return cands;
}

int best_candidate(const std::vector<ScaleCandidate>& candidates)
{
  int best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const ScaleCandidate& c = candidates[i];
    if (!c.success) continue;
    if (best == 0 ||
        c.area_weighted_final_scale >= candidates[static_cast<std::size_t>(best)].area_weighted_final_scale) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

PackResult pack(const ChartSet& set, const AtlasSpec& spec, const TabiOptions& options)
{
  std::vector<ScaleCandidate> cands = pack_all_scales(set, spec, options);
  PackResult result;
  result.scale_count = spec.scale_count;
  const int best = best_candidate(cands);
  if (best == 0) {
    result.success = false;
    result.scale_index = 0;
    result.diagnostic = "no scale fits; at scale 1/" + std::to_string(spec.scale_count) + ": " + cands[1].diagnostic;
    return result;
  }
  ScaleCandidate& c = cands[static_cast<std::size_t>(best)];
  result.success = true;
  result.scale_index = best;
  result.placements = std::move(c.placements);
  result.stats = std::move(c.stats);
  return result;
}

}  // namespace atlaspack
