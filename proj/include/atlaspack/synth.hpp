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

// Seeded synthetic chart sets: rectangles, right triangles, L-shapes and
// convex blobs, each fanned from an interior point so it is simple.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "atlaspack/chart.hpp"

namespace atlaspack {

/// mt19937_64 with a fixed double mapping, so corpora match across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

enum class SynthProfile {
  /// Log-uniform heights over a 20x range.
  Mixed,
  /// A few tall charts among many short ones; rows with knees are common.
  Knee,
};

struct SynthOptions {
  std::uint64_t seed = 1;
  int count = 100;
  /// Tallest chart height in input texels.
  double max_height = 256.0;
  SynthProfile profile = SynthProfile::Mixed;
  /// Random rotation and offset of every chart.
  bool rotate = true;
};

ChartSet generate_chart_set(const SynthOptions& options);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace atlaspack
