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

// Box-only fold-and-push baseline: rows alternate direction, boxes are
// pushed up against the frontline, no compaction and no knees.

#pragma once

#include "atlaspack/chart.hpp"
#include "atlaspack/parallel.hpp"

namespace atlaspack {

/// Packs at one scale; `success` is false on overflow.
PackResult chameleon_pack_at_scale(const ChartSet& set, const AtlasSpec& spec, int scale_index);

/// Largest successful scale over all candidates.
PackResult chameleon_pack(const ChartSet& set, const AtlasSpec& spec, Exec exec = Exec::Parallel);

}  // namespace atlaspack
