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

// Horizontal compaction of two charts placed side by side with flush AABBs
// and aligned tops. Distances are in the charts' own (unscaled) units.

#pragma once

#include "atlaspack/proxies.hpp"

namespace atlaspack {

enum class CompactionSource { LocalAabb, Obb, Zero };

struct PairCompaction {
  double distance = 0.0;
  /// Moving the left chart up relative to the right one may cause overlap.
  bool left_locked = false;
  /// Moving the right chart up relative to the left one may cause overlap.
  bool right_locked = false;
  CompactionSource source = CompactionSource::Zero;
};

/// Smallest horizontal gap between the right boundary of `left` and the left
/// boundary of `right` over y ranges where both exist. Capped at the smaller
/// of the two widths.
double distance_local(const LocalAabbProxy& left, const LocalAabbProxy& right);

/// How far `right` can slide left before its OBB overlaps the OBB of `left`.
/// `left_width` is the AABB width of the left chart (the right chart starts
/// there); the result is capped at `cap`.
double distance_obb(const Obb& left, const Obb& right, double left_width, double cap);

/// Left chart locked iff one of its boundary segments reaches right of a
/// segment of the other chart that starts higher than it ends.
void local_interlock(const LocalAabbProxy& left, const LocalAabbProxy& right, double distance,
                     bool& left_locked, bool& right_locked);

/// Compares the rightmost corner of the left box with the leftmost corner of
/// the right box; the lower one is locked. Ties lock the left chart.
void obb_interlock(const Obb& left, const Obb& right, double left_width, double distance,
                   bool& left_locked, bool& right_locked);

/// Larger of the two distances (ties prefer the local proxy) with the flags of
/// the winning source.
PairCompaction compact_pair(const PoseProxy& left, const PoseProxy& right);

}  // namespace atlaspack
