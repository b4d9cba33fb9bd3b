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

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace atlaspack {

/// Point or vector in texel space. y grows downward.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double signed_triangle_area(Vec2 a, Vec2 b, Vec2 c) { return 0.5 * cross(b - a, c - a); }

inline Vec2 rotate(Vec2 p, double radians)
{
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {p.x * c - p.y * s, p.x * s + p.y * c};
}

/// Closed interval [lo, hi]; empty when lo > hi.
struct Interval {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  bool empty() const { return lo > hi; }
  void include(double v)
  {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  void include(const Interval& o)
  {
    if (o.empty()) return;
    include(o.lo);
    include(o.hi);
  }
  double length() const { return empty() ? 0.0 : hi - lo; }
};

/// Exact non-negative rational; used for scale factors so that result files
/// round-trip without loss.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Fraction reduced() const
  {
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? *this : Fraction{num / g, den / g};
  }
  friend bool operator==(const Fraction& a, const Fraction& b)
  {
    // compare by value, not representation
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Rounding used when proxy bounds are snapped to the texel grid. Values within
/// kSnap of an integer are treated as that integer so that exact inputs are not
/// inflated by floating-point noise.
inline constexpr double kSnap = 1e-7;

/// floor and ceil for values well inside the int range, without a libm call.
inline int floor_int(double v)
{
  const int i = static_cast<int>(v);
  return i - (v < i);
}
inline int ceil_int(double v)
{
  const int i = static_cast<int>(v);
  return i + (v > i);
}
inline int floor_snap(double v) { return floor_int(v + kSnap); }
inline int ceil_snap(double v) { return ceil_int(v - kSnap); }

}  // namespace atlaspack
