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

// Row folding and pushing on the texel grid for one scale factor.
//
// Gutters: every occupied texel of one chart is at Chebyshev distance of at
// least 2g+1 from every occupied texel of another chart. Within a row this is
// kept by the folding arithmetic (2g columns between charts, compaction
// measured per texel row), across rows by a frontline that stores the first
// free row plus 2g and is dilated horizontally by 2g.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atlaspack/chart.hpp"
#include "atlaspack/proxies.hpp"

namespace atlaspack {

/// Texel footprint of one posed chart at one scale. Column i spans scaled
/// chart x in [i, i+1]; its occupied texels are rows [top[i], bottom[i]).
/// Row r spans scaled y in [r, r+1] with occupied columns [left[r], right[r]).
/// Columns or rows without geometry have top > bottom (left > right).
struct TexelShape {
  int width = 0;
  int height = 0;
  std::vector<int> top;
  std::vector<int> bottom;
  std::vector<int> left;
  std::vector<int> right;

  bool column_empty(int i) const { return top[static_cast<std::size_t>(i)] > bottom[static_cast<std::size_t>(i)]; }
  bool row_empty(int r) const { return left[static_cast<std::size_t>(r)] > right[static_cast<std::size_t>(r)]; }
  std::size_t bytes() const;
};

/// ceil(extent * scale), at least 1.
int scaled_extent(double extent, double scale);

/// With `tight` the edges are the tighter of the local-AABB and OBB bounds per
/// texel, rounded outward; otherwise the plain box.
TexelShape make_texel_shape(const PoseProxy& proxy, double scale, bool tight);

/// Offset of the first occupied row of column i (rounded toward the top).
int top_edge(const PoseProxy& proxy, int i, double scale);
/// Offset one past the last occupied row of column i (rounded toward the bottom
/// of the atlas).
int bottom_edge(const PoseProxy& proxy, int i, double scale);

struct PairLock {
  bool left_locked = false;   // left chart cannot move above the right one
  bool right_locked = false;  // right chart cannot move above the left one
  friend bool operator==(const PairLock&, const PairLock&) = default;
};

/// Horizontal reflection of a shape within its width.
TexelShape mirror_shape(const TexelShape& shape);

/// Texel compaction of two charts adjacent in a row (line order). The right
/// chart starts at left.width + 2g - distance.
struct TexelPair {
  int distance = 0;
  PairLock lock;
};

TexelPair texel_pair(const TexelShape& left, const TexelShape& right, int gutter);

struct FoldResult {
  /// Last chart in the row; row_start - 1 when the first chart does not fit.
  int row_end = -1;
  /// Line-frame x of charts row_start..row_end.
  std::vector<int> offsets;
};

/// Greedy folding into [0, fold_width). Charts are spaced by 2g; with
/// `enable_hc` the spacing to chart c+1 shrinks by distances[c]. A chart never
/// starts before the gutter-padded right edge of any chart two or more places
/// before it.
FoldResult fold_row(int row_start, int fold_width, bool enable_hc, int gutter, std::span<const int> widths,
                    std::span<const int> distances);

/// Same with lazily evaluated widths and distances.
FoldResult fold_row(int row_start, int chart_count, int fold_width, bool enable_hc, int gutter,
                    const std::function<int(int)>& width, const std::function<int(int)>& distance);

/// Raises offsets until every locked pair satisfies its constraint. locks[c]
/// relates y[c] and y[c+1]. Returns the number of sweeps that changed values.
int correct_y_offsets(std::span<int> y, std::span<const PairLock> locks, bool reverse_sweep = false);

struct RowItem {
  int x = 0;
  const TexelShape* shape = nullptr;
};

/// Pushes a folded row up against the frontline and advances the frontline.
/// Returns the y offsets in item order.
std::vector<int> push_row(std::vector<int>& frontline, std::span<const RowItem> items,
                          std::span<const PairLock> locks, int gutter);

struct KneePair {
  int index = 0;  // knee between row charts index and index + 1
  double height_diff = 0.0;
};

/// Largest qualifying height drop in a row; ties keep the earliest pair.
std::optional<KneePair> detect_knee(std::span<const double> heights, double atlas_height);

struct Knee {
  bool left_to_right = true;
  int chart_left_edge = 0;   // inclusive
  int chart_right_edge = 0;  // exclusive
  double height_diff = 0.0;
};

/// Shrinks the knee chart edge facing the concavity to the frontline. Returns
/// false if the knee must be dropped: the edge collapsed or no concavity is
/// left between the edge and the atlas border.
bool update_knee_location(Knee& knee, std::span<const int> frontline);

struct RowOptions {
  /// Tight proxies, compaction and orientation; off packs plain boxes.
  bool tight = true;
  /// Per-row direction choice and knees; off alternates directions.
  bool balanced = true;
};

/// Charts in packing order with lazily built texel data at one scale.
class ScaledCharts {
 public:
  ScaledCharts(std::span<const ChartProxy* const> ordered, double scale, int gutter, bool tight);

  int count() const { return static_cast<int>(ordered_.size()); }
  double scale() const { return scale_; }
  bool tight() const { return tight_; }
  int gutter() const { return gutter_; }
  int width(int k) const { return widths_[static_cast<std::size_t>(k)]; }
  int height(int k) const { return heights_[static_cast<std::size_t>(k)]; }
  const ChartProxy& proxy(int k) const { return *ordered_[static_cast<std::size_t>(k)]; }
  /// Right-to-left rows place the mirrored pose, so that in line order (read
  /// from the right) every chart looks as it does in a left-to-right row.
  /// Box-only packing has no need to.
  bool uses_mirror(bool left_to_right) const { return tight_ && !left_to_right; }

  /// Atlas-frame shape of the forward or mirrored pose.
  const TexelShape& shape(int k, bool mirrored);
  /// Compaction between k and k+1 in line order. For mirrored rows the line
  /// is read from the right, so the shapes are the reflected atlas shapes.
  const TexelPair& pair(int k, bool mirrored);
  /// Builds forward shapes and pairs for [first, last) up front, in parallel.
  void prepare(int first, int last, Exec exec);

  std::size_t bytes() const;

 private:
  std::span<const ChartProxy* const> ordered_;
  double scale_;
  int gutter_;
  bool tight_;
  std::vector<int> widths_;
  std::vector<int> heights_;
  std::vector<std::optional<TexelShape>> shapes_[2];
  std::vector<std::optional<TexelPair>> pairs_[2];
};

struct RowConfig {
  bool left_to_right = true;
  bool knee = false;
  bool hc = false;
};

struct RowOutcome {
  RowConfig config;
  bool valid = false;
  int row_end = -1;
  std::vector<int> x;  // atlas x of row charts
  std::vector<int> y;
  std::vector<int> frontline;
  int score = 0;
  int score_knee = 0;
};

struct PlacedChart {
  bool placed = false;
  int x = 0;
  int y = 0;
  bool mirrored = false;
  Fraction final_scale{1, 1};
  ChartMode mode = ChartMode::Sequential;
};

/// Sequential row-by-row packing at one scale.
class RowPacker {
 public:
  RowPacker(std::span<const ChartProxy* const> ordered, const AtlasSpec& spec, Fraction scale, RowOptions options);

  int chart_count() const { return charts_.count(); }
  int row_start() const { return row_start_; }
  bool failed() const { return failed_; }
  bool finished() const { return failed_ || row_start_ >= charts_.count(); }
  const std::optional<Knee>& pending_knee() const { return knee_; }
  const std::vector<int>& frontline() const { return frontline_; }
  const std::vector<PlacedChart>& placed() const { return placed_; }
  const PackStats& stats() const { return stats_; }
  int last_config_count() const { return last_config_count_; }
  ScaledCharts& charts() { return charts_; }
  const AtlasSpec& spec() const { return spec_; }
  Fraction scale() const { return scale_; }

  /// Applies the knee refinement before the next row.
  void refresh_knee();
  /// Folds and pushes every configuration of the next row.
  std::vector<RowOutcome> evaluate_row();
  /// Index into `outcomes` of the hierarchical winner, or -1 if none is valid.
  int select(const std::vector<RowOutcome>& outcomes) const;
  /// Optional refresh_knee, then evaluate_row, select and commit. Returns
  /// false on failure.
  bool commit_row(bool refresh = true);

  /// Commits a row built elsewhere (prefix folding). Marks failure on overflow.
  void commit_external(std::span<const int> charts, std::span<const int> x, std::span<const int> y, bool mirrored,
                       Fraction final_scale, std::vector<int> frontline);
  void fail(std::string why);
  const std::string& diagnostic() const { return diagnostic_; }

  RowOutcome evaluate(const RowConfig& config);
  std::size_t bytes() const;

 private:
  void commit(const RowOutcome& outcome);
  bool overflows(int score) const { return score - 2 * spec_.gutter > spec_.height; }

  AtlasSpec spec_;
  Fraction scale_;
  RowOptions options_;
  ScaledCharts charts_;
  std::vector<int> frontline_;
  std::vector<PlacedChart> placed_;  // by packing position
  std::optional<Knee> knee_;
  int row_start_ = 0;
  int row_index_ = 0;
  bool failed_ = false;
  int last_config_count_ = 0;
  PackStats stats_;
  std::string diagnostic_;
};

}  // namespace atlaspack
