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

#include "atlaspack/rowpack.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cmath>
#include <limits>

namespace atlaspack {

std::size_t TexelShape::bytes() const
{
  return sizeof(int) * (top.capacity() + bottom.capacity() + left.capacity() + right.capacity());
}

int scaled_extent(double extent, double scale) { return std::max(1, ceil_snap(extent * scale)); }

namespace {

// Rounds a continuous [lo, hi] band (unscaled) outward onto the grid.
void round_band(double lo, double hi, double scale, int limit, int& first, int& last)
{
  first = std::clamp(floor_snap(lo * scale), 0, limit);
  last = std::clamp(ceil_snap(hi * scale), 0, limit);
}

// Tighter of the two bounds; falls back to the local one if they disagree
// through rounding noise.
Interval tighter(const Interval& local, const Interval& obb)
{
  if (obb.empty()) return local;
  Interval out{std::max(local.lo, obb.lo), std::min(local.hi, obb.hi)};
  return out.empty() ? local : out;
}

// Walks a staircase with slabs of increasing position; same result as
// Staircase::extent_over for each slab.
class StairSweep {
 public:
  explicit StairSweep(const Staircase& s) : s_(s) {}

  Interval over(double lo, double hi)
  {
    Interval out;
    const std::size_t n = s_.extent.size();
    while (m_ < n && s_.breaks[m_ + 1] <= lo) ++m_;
    for (std::size_t m = m_; m < n && s_.breaks[m] < hi; ++m) out.include(s_.extent[m]);
    return out;
  }

 private:
  const Staircase& s_;
  std::size_t m_ = 0;
};

// Cross-sections of a convex polygon over consecutive slabs along one axis.
// The extent over [lo, hi] is the union of the sections at lo and hi and the
// vertices strictly between, the same points convex_extent_over clips out.
class ConvexSweep {
 public:
  ConvexSweep(std::span<const Vec2> polygon, bool along_x)
  {
    const std::size_t n = polygon.size();
    a_.resize(n);
    b_.resize(n);
    slope_.resize(n);
    for (std::size_t e = 0; e < n; ++e) {
      a_[e] = along_x ? polygon[e].x : polygon[e].y;
      b_[e] = along_x ? polygon[e].y : polygon[e].x;
    }
    for (std::size_t e = 0; e < n; ++e) {
      const std::size_t f = e + 1 == n ? 0 : e + 1;
      slope_[e] = a_[e] == a_[f] ? 0.0 : edge_slope(a_[e], b_[e], a_[f], b_[f]);
    }
  }

  Interval section(double c) const
  {
    Interval out;
    const std::size_t n = a_.size();
    for (std::size_t e = 0; e < n; ++e) {
      const double pa = a_[e];
      const double qa = a_[e + 1 == n ? 0 : e + 1];
      if (pa == c) out.include(b_[e]);
      if ((pa < c && c < qa) || (qa < c && c < pa)) out.include(b_[e] + (c - pa) * slope_[e]);
    }
    return out;
  }

  void add_inside(double lo, double hi, Interval& out) const
  {
    for (std::size_t e = 0; e < a_.size(); ++e) {
      if (lo < a_[e] && a_[e] < hi) out.include(b_[e]);
    }
  }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> slope_;
};

}  // namespace

TexelShape make_texel_shape(const PoseProxy& proxy, double scale, bool tight)
{
  TexelShape s;
  s.width = scaled_extent(proxy.aabb.width(), scale);
  s.height = scaled_extent(proxy.aabb.height(), scale);
  const auto w = static_cast<std::size_t>(s.width);
  const auto h = static_cast<std::size_t>(s.height);
  if (!tight) {
    s.top.assign(w, 0);
    s.bottom.assign(w, s.height);
    s.left.assign(h, 0);
    s.right.assign(h, s.width);
    return s;
  }
  s.top.resize(w);
  s.bottom.resize(w);
  s.left.resize(h);
  s.right.resize(h);
  const auto corners = proxy.obb.corners();
  auto fill = [&](const Staircase& stair, bool along_x, int count, int limit, std::vector<int>& first,
                  std::vector<int>& last) {
    StairSweep local_sweep(stair);
    const ConvexSweep obb_sweep(corners, along_x);
    double b = 0.0;
    Interval at_b = obb_sweep.section(b);
    for (int i = 0; i < count; ++i) {
      const double a = b;
      const Interval at_a = at_b;
      b = (i + 1) / scale;
      at_b = obb_sweep.section(b);
      const Interval local = local_sweep.over(a, b);
      const auto k = static_cast<std::size_t>(i);
      if (local.empty()) {
        first[k] = 1;
        last[k] = 0;
        continue;
      }
      Interval obb = at_a;
      obb.include(at_b);
      obb_sweep.add_inside(a, b, obb);
      const Interval band = tighter(local, obb);
      round_band(band.lo, band.hi, scale, limit, first[k], last[k]);
    }
  };
  fill(proxy.local.top_bottom, true, s.width, s.height, s.top, s.bottom);
  fill(proxy.local.left_right, false, s.height, s.width, s.left, s.right);
  return s;
}

int top_edge(const PoseProxy& proxy, int i, double scale)
{
  return make_texel_shape(proxy, scale, true).top.at(static_cast<std::size_t>(i));
}

int bottom_edge(const PoseProxy& proxy, int i, double scale)
{
  return make_texel_shape(proxy, scale, true).bottom.at(static_cast<std::size_t>(i));
}

TexelPair texel_pair(const TexelShape& left, const TexelShape& right, int gutter)
{
  TexelPair out;
  const int g2 = 2 * gutter;
  const int hl = left.height;
  const int hr = right.height;

  int gap = INT_MAX;
  for (int rr = 0; rr < hr; ++rr) {
    if (right.row_empty(rr)) continue;
    int reach = INT_MIN;
    for (int rl = std::max(0, rr - g2); rl <= std::min(hl - 1, rr + g2); ++rl) {
      if (!left.row_empty(rl)) reach = std::max(reach, left.right[static_cast<std::size_t>(rl)]);
    }
    if (reach == INT_MIN) continue;
    gap = std::min(gap, left.width - reach + right.left[static_cast<std::size_t>(rr)]);
  }
  out.distance = std::max(0, std::min({gap, left.width, right.width}));
  if (out.distance == 0) return out;

  const int off = left.width + g2 - out.distance;
  // suffix max of the left chart's right edge, suffix min of the right chart's left edge
  std::vector<int> reach_below(static_cast<std::size_t>(hl) + 1, INT_MIN);
  for (int r = hl - 1; r >= 0; --r) {
    const int v = left.row_empty(r) ? INT_MIN : left.right[static_cast<std::size_t>(r)];
    reach_below[static_cast<std::size_t>(r)] = std::max(reach_below[static_cast<std::size_t>(r) + 1], v);
  }
  std::vector<int> start_below(static_cast<std::size_t>(hr) + 1, INT_MAX);
  for (int r = hr - 1; r >= 0; --r) {
    const int v = right.row_empty(r) ? INT_MAX : right.left[static_cast<std::size_t>(r)];
    start_below[static_cast<std::size_t>(r)] = std::min(start_below[static_cast<std::size_t>(r) + 1], v);
  }
  // Left moving up brings its row rl level with right rows above it: a
  // conflict needs rl > rr - 2g.
  for (int rr = 0; rr < hr && !out.lock.left_locked; ++rr) {
    if (right.row_empty(rr)) continue;
    const int from = std::max(0, rr - g2 + 1);
    if (from >= hl) continue;
    const int reach = reach_below[static_cast<std::size_t>(from)];
    if (reach == INT_MIN) continue;
    if (right.left[static_cast<std::size_t>(rr)] + off - reach < g2) out.lock.left_locked = true;
  }
  for (int rl = 0; rl < hl && !out.lock.right_locked; ++rl) {
    if (left.row_empty(rl)) continue;
    const int from = std::max(0, rl - g2 + 1);
    if (from >= hr) continue;
    const int start = start_below[static_cast<std::size_t>(from)];
    if (start == INT_MAX) continue;
    if (start + off - left.right[static_cast<std::size_t>(rl)] < g2) out.lock.right_locked = true;
  }
  return out;
}

FoldResult fold_row(int row_start, int chart_count, int fold_width, bool enable_hc, int gutter,
                    const std::function<int(int)>& width, const std::function<int(int)>& distance)
{
  FoldResult out;
  out.row_end = row_start - 1;
  const std::int64_t g2 = 2 * gutter;
  std::int64_t next = 0;
  std::int64_t clear = 0;                                    // padded right edge of charts before the previous one
  std::int64_t pending = std::numeric_limits<std::int64_t>::min();  // padded right edge of the previous chart
  for (int c = row_start; c < chart_count; ++c) {
    const std::int64_t w = width(c);
    const std::int64_t p = std::max(next, clear);
    if (p + w > fold_width) return out;
    out.offsets.push_back(static_cast<int>(p));
    out.row_end = c;
    clear = std::max(clear, pending);
    pending = p + w + g2;
    next = p + w + g2;
    if (enable_hc && c + 1 < chart_count) next -= distance(c);
  }
  return out;
}

FoldResult fold_row(int row_start, int fold_width, bool enable_hc, int gutter, std::span<const int> widths,
                    std::span<const int> distances)
{
  return fold_row(
      row_start, static_cast<int>(widths.size()), fold_width, enable_hc, gutter,
      [&](int c) { return widths[static_cast<std::size_t>(c)]; },
      [&](int c) { return static_cast<std::size_t>(c) < distances.size() ? distances[static_cast<std::size_t>(c)] : 0; });
}

int correct_y_offsets(std::span<int> y, std::span<const PairLock> locks, bool reverse_sweep)
{
  const int pairs = static_cast<int>(std::min(locks.size(), y.empty() ? 0 : y.size() - 1));
  int sweeps = 0;
  for (;;) {
    bool changed = false;
    for (int n = 0; n < pairs; ++n) {
      const auto c = static_cast<std::size_t>(reverse_sweep ? pairs - 1 - n : n);
      if (locks[c].left_locked && y[c] < y[c + 1]) {
        y[c] = y[c + 1];
        changed = true;
      }
      if (locks[c].right_locked && y[c + 1] < y[c]) {
        y[c + 1] = y[c];
        changed = true;
      }
    }
    if (!changed) return sweeps;
    ++sweeps;
  }
}

std::vector<int> push_row(std::vector<int>& frontline, std::span<const RowItem> items,
                          std::span<const PairLock> locks, int gutter)
{
  const int atlas_width = static_cast<int>(frontline.size());
  std::vector<int> y(items.size(), 0);
  for (std::size_t k = 0; k < items.size(); ++k) {
    const TexelShape& s = *items[k].shape;
    int v = 0;
    for (int i = 0; i < s.width; ++i) {
      if (s.column_empty(i)) continue;
      const int x = items[k].x + i;
      if (x < 0 || x >= atlas_width) continue;
      v = std::max(v, frontline[static_cast<std::size_t>(x)] - s.top[static_cast<std::size_t>(i)]);
    }
    y[k] = v;
  }
  if (!locks.empty()) correct_y_offsets(y, locks);

  const int g2 = 2 * gutter;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const TexelShape& s = *items[k].shape;
    for (int i = 0; i < s.width; ++i) {
      if (s.column_empty(i)) continue;
      const int v = y[k] + s.bottom[static_cast<std::size_t>(i)] + g2;
      const int x = items[k].x + i;
      for (int xx = std::max(0, x - g2); xx <= std::min(atlas_width - 1, x + g2); ++xx) {
        int& f = frontline[static_cast<std::size_t>(xx)];
        f = std::max(f, v);
      }
    }
  }
  return y;
}

std::optional<KneePair> detect_knee(std::span<const double> heights, double atlas_height)
{
  std::optional<KneePair> best;
  for (std::size_t j = 0; j + 1 < heights.size(); ++j) {
    const double taller = std::max(heights[j], heights[j + 1]);
    const double diff = std::abs(heights[j] - heights[j + 1]);
    // 10% of the atlas height and 20% of the taller chart, written without
    // the inexact constants 0.1 and 0.2
    if (10.0 * diff >= atlas_height && 5.0 * diff >= taller) {
      if (!best || diff > best->height_diff) best = KneePair{static_cast<int>(j), diff};
    }
  }
  return best;
}

bool update_knee_location(Knee& knee, std::span<const int> frontline)
{
  const int width = static_cast<int>(frontline.size());
  if (knee.left_to_right) {
    if (knee.chart_right_edge >= width || knee.chart_right_edge <= knee.chart_left_edge) return false;
    const int height = frontline[static_cast<std::size_t>(knee.chart_right_edge)];
    int found = knee.chart_left_edge - 1;
    for (int x = knee.chart_left_edge; x < knee.chart_right_edge; ++x) {
      if (frontline[static_cast<std::size_t>(x)] >= height) found = std::max(found, x);
    }
    knee.chart_right_edge = found + 1;
  } else {
    if (knee.chart_left_edge <= 0 || knee.chart_right_edge <= knee.chart_left_edge) return false;
    const int height = frontline[static_cast<std::size_t>(knee.chart_left_edge - 1)];
    int found = knee.chart_right_edge;
    for (int x = knee.chart_left_edge; x < knee.chart_right_edge; ++x) {
      if (frontline[static_cast<std::size_t>(x)] >= height) found = std::min(found, x);
    }
    knee.chart_left_edge = found;
  }
  return knee.chart_left_edge < knee.chart_right_edge;
}

TexelShape mirror_shape(const TexelShape& shape)
{
  TexelShape m = shape;
  std::reverse(m.top.begin(), m.top.end());
  std::reverse(m.bottom.begin(), m.bottom.end());
  for (std::size_t r = 0; r < m.left.size(); ++r) {
    m.left[r] = shape.width - shape.right[r];
    m.right[r] = shape.width - shape.left[r];
  }
  return m;
}

ScaledCharts::ScaledCharts(std::span<const ChartProxy* const> ordered, double scale, int gutter, bool tight)
    : ordered_(ordered), scale_(scale), gutter_(gutter), tight_(tight)
{
  widths_.reserve(ordered.size());
  heights_.reserve(ordered.size());
  for (const ChartProxy* p : ordered) {
    widths_.push_back(scaled_extent(p->forward.aabb.width(), scale));
    heights_.push_back(scaled_extent(p->forward.aabb.height(), scale));
  }
  for (int m = 0; m < 2; ++m) {
    shapes_[m].resize(ordered.size());
    pairs_[m].resize(ordered.size());
  }
}

const TexelShape& ScaledCharts::shape(int k, bool mirrored)
{
  const int m = (mirrored && tight_) ? 1 : 0;
  auto& slot = shapes_[m][static_cast<std::size_t>(k)];
  if (!slot) {
    const ChartProxy& p = proxy(k);
    slot = make_texel_shape(m == 1 ? p.mirrored : p.forward, scale_, tight_);
    assert(slot->width == width(k));
  }
  return *slot;
}

const TexelPair& ScaledCharts::pair(int k, bool mirrored)
{
  const int m = (mirrored && tight_) ? 1 : 0;
  auto& slot = pairs_[m][static_cast<std::size_t>(k)];
  if (!slot) {
    if (!tight_ || k + 1 >= count()) {
      slot = TexelPair{};
    } else if (m == 0) {
      slot = texel_pair(shape(k, false), shape(k + 1, false), gutter_);
    } else {
      // line frame of a right-to-left row: the atlas shapes read from the right
      slot = texel_pair(mirror_shape(shape(k, true)), mirror_shape(shape(k + 1, true)), gutter_);
    }
  }
  return *slot;
}

void ScaledCharts::prepare(int first, int last, Exec exec)
{
  if (first >= last) return;
  const auto n = static_cast<std::size_t>(last - first);
  for_each_index(exec, n, [&](std::size_t j) { shape(first + static_cast<int>(j), false); });
  // shapes of k and k+1 exist except possibly at the range end
  if (last < count()) shape(last, false);
  for_each_index(exec, n, [&](std::size_t j) { pair(first + static_cast<int>(j), false); });
}

std::size_t ScaledCharts::bytes() const
{
  std::size_t total = sizeof(int) * (widths_.capacity() + heights_.capacity());
  for (int m = 0; m < 2; ++m) {
    total += shapes_[m].capacity() * sizeof(std::optional<TexelShape>);
    total += pairs_[m].capacity() * sizeof(std::optional<TexelPair>);
    for (const auto& s : shapes_[m]) {
      if (s) total += s->bytes();
    }
  }
  return total;
}

RowPacker::RowPacker(std::span<const ChartProxy* const> ordered, const AtlasSpec& spec, Fraction scale,
                     RowOptions options)
    : spec_(spec),
      scale_(scale),
      options_(options),
      charts_(ordered, scale.value(), spec.gutter, options.tight),
      frontline_(static_cast<std::size_t>(spec.width), 0),
      placed_(ordered.size())
{
}

void RowPacker::refresh_knee()
{
  if (knee_ && !update_knee_location(*knee_, frontline_)) knee_.reset();
}

RowOutcome RowPacker::evaluate(const RowConfig& config)
{
  RowOutcome out;
  out.config = config;
  int origin = 0;
  int fold_width = spec_.width;
  if (config.knee) {
    if (!knee_) return out;
    if (knee_->left_to_right) {
      origin = knee_->chart_right_edge;
      fold_width = spec_.width - origin;
    } else {
      fold_width = knee_->chart_left_edge;
    }
  }
  const bool mirrored = charts_.uses_mirror(config.left_to_right);
  const FoldResult fold = fold_row(
      row_start_, charts_.count(), fold_width, config.hc, spec_.gutter, [&](int c) { return charts_.width(c); },
      [&](int c) { return charts_.pair(c, mirrored).distance; });
  out.row_end = fold.row_end;
  if (fold.row_end < row_start_) return out;

  const std::size_t n = fold.offsets.size();
  std::vector<RowItem> items(n);
  out.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int k = row_start_ + static_cast<int>(j);
    const int w = charts_.width(k);
    const int x = config.left_to_right ? origin + fold.offsets[j] : origin + fold_width - fold.offsets[j] - w;
    out.x[j] = x;
    items[j] = {x, &charts_.shape(k, mirrored)};
  }
  std::vector<PairLock> locks;
  if (config.hc) {
    locks.resize(n > 0 ? n - 1 : 0);
    for (std::size_t j = 0; j + 1 < n; ++j) locks[j] = charts_.pair(row_start_ + static_cast<int>(j), mirrored).lock;
  }
  out.frontline = frontline_;
  out.y = push_row(out.frontline, items, locks, spec_.gutter);
  out.score = *std::max_element(out.frontline.begin(), out.frontline.end());
  if (config.knee) {
    out.score_knee = *std::max_element(out.frontline.begin() + origin, out.frontline.begin() + origin + fold_width);
  }
  out.valid = true;
  return out;
}

std::vector<RowOutcome> RowPacker::evaluate_row()
{
  std::vector<bool> directions;
  if (options_.balanced) {
    directions = {true, false};
  } else {
    directions = {row_index_ % 2 == 0};
  }
  std::vector<bool> hcs = options_.tight ? std::vector<bool>{false, true} : std::vector<bool>{false};
  std::vector<bool> knees = {false};
  if (options_.balanced && knee_) knees.push_back(true);

  std::vector<RowOutcome> out;
  for (bool knee : knees) {
    for (bool ltr : directions) {
      for (bool hc : hcs) out.push_back(evaluate(RowConfig{ltr, knee, hc}));
    }
  }
  return out;
}

int RowPacker::select(const std::vector<RowOutcome>& outcomes) const
{
  auto find = [&](bool ltr, bool knee, bool hc) -> int {
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
      const RowConfig& c = outcomes[j].config;
      if (c.left_to_right == ltr && c.knee == knee && c.hc == hc && outcomes[j].valid) return static_cast<int>(j);
    }
    return -1;
  };
  // HC only if it fits strictly more charts
  auto pick_hc = [&](bool ltr, bool knee) -> int {
    const int off = find(ltr, knee, false);
    const int on = find(ltr, knee, true);
    if (off < 0) return on;
    if (on < 0) return off;
    return outcomes[static_cast<std::size_t>(on)].row_end > outcomes[static_cast<std::size_t>(off)].row_end ? on : off;
  };
  auto pick_direction = [&](bool knee) -> int {
    const int l = pick_hc(true, knee);
    const int r = pick_hc(false, knee);
    if (l < 0) return r;
    if (r < 0) return l;
    auto score = [&](int j) {
      const RowOutcome& o = outcomes[static_cast<std::size_t>(j)];
      return knee ? o.score_knee : o.score;
    };
    return score(r) < score(l) ? r : l;
  };
  const int atlas = pick_direction(false);
  const int knee = pick_direction(true);
  if (knee < 0) return atlas;
  if (atlas < 0) return knee;
  return outcomes[static_cast<std::size_t>(knee)].score <= outcomes[static_cast<std::size_t>(atlas)].score - 1 ? knee
                                                                                                                : atlas;
}

void RowPacker::commit(const RowOutcome& outcome)
{
  const bool mirrored = charts_.uses_mirror(outcome.config.left_to_right);
  for (std::size_t j = 0; j < outcome.x.size(); ++j) {
    const auto k = static_cast<std::size_t>(row_start_) + j;
    placed_[k] = PlacedChart{true, outcome.x[j], outcome.y[j], mirrored, scale_, ChartMode::Sequential};
  }
  frontline_ = outcome.frontline;
  ++stats_.rows;
  if (outcome.config.knee) {
    ++stats_.knee_folds;
  } else if (options_.balanced) {
    std::vector<double> heights;
    heights.reserve(outcome.x.size());
    for (int k = row_start_; k <= outcome.row_end; ++k) heights.push_back(charts_.proxy(k).forward.aabb.height());
    knee_.reset();
    if (auto kp = detect_knee(heights, spec_.height)) {
      const auto j = static_cast<std::size_t>(kp->index);
      const int k = row_start_ + kp->index;
      const int x = outcome.x[j];
      const int w = charts_.width(k);
      const int g2 = 2 * spec_.gutter;
      Knee knee;
      knee.left_to_right = outcome.config.left_to_right;
      knee.height_diff = kp->height_diff;
      // the knee chart's footprint includes its gutter band on the concavity side
      if (knee.left_to_right) {
        knee.chart_left_edge = x;
        knee.chart_right_edge = std::min(spec_.width, x + w + g2);
      } else {
        knee.chart_left_edge = std::max(0, x - g2);
        knee.chart_right_edge = x + w;
      }
      knee_ = knee;
      ++stats_.knees_detected;
    }
  }
  if (overflows(outcome.score)) {
    fail("frontline reaches " + std::to_string(outcome.score - 2 * spec_.gutter) + " below atlas height " +
         std::to_string(spec_.height));
  }
  row_start_ = outcome.row_end + 1;
  ++row_index_;
}

bool RowPacker::commit_row(bool refresh)
{
  if (finished()) return !failed_;
  if (refresh) refresh_knee();
  const auto outcomes = evaluate_row();
  last_config_count_ = static_cast<int>(outcomes.size());
  const int best = select(outcomes);
  if (best < 0) {
    fail("chart at sorted position " + std::to_string(row_start_) + " is " + std::to_string(charts_.width(row_start_)) +
         " texels wide, atlas is " + std::to_string(spec_.width));
    return false;
  }
  commit(outcomes[static_cast<std::size_t>(best)]);
  return !failed_;
}

void RowPacker::commit_external(std::span<const int> charts, std::span<const int> x, std::span<const int> y,
                                bool mirrored, Fraction final_scale, std::vector<int> frontline)
{
  for (std::size_t j = 0; j < charts.size(); ++j) {
    placed_[static_cast<std::size_t>(charts[j])] =
        PlacedChart{true, x[j], y[j], mirrored, final_scale, ChartMode::Prefix};
  }
  frontline_ = std::move(frontline);
  ++stats_.rows;
  ++row_index_;
  knee_.reset();
  if (!charts.empty()) row_start_ = charts.back() + 1;
  const int score = *std::max_element(frontline_.begin(), frontline_.end());
  if (overflows(score)) {
    fail("prefix row reaches " + std::to_string(score - 2 * spec_.gutter) + " below atlas height " +
         std::to_string(spec_.height));
  }
}

void RowPacker::fail(std::string why)
{
  failed_ = true;
  if (diagnostic_.empty()) diagnostic_ = std::move(why);
}

std::size_t RowPacker::bytes() const
{
  return charts_.bytes() + frontline_.capacity() * sizeof(int) + placed_.capacity() * sizeof(PlacedChart);
}

}  // namespace atlaspack
