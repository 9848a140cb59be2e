// Copyright 2026 The fastrobber Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <vector>

namespace fastrobber {

// A square of the grid. Columns and rows are 1-based; (1,1) is bottom left.
struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const Coord&) const = default;
};

struct GridSpec {
  std::int64_t n = 0;      // side length in squares
  std::int64_t speed = 1;  // maximum robber walk length in edges

  bool contains(Coord p) const { return p.x >= 1 && p.x <= n && p.y >= 1 && p.y <= n; }
  bool operator==(const GridSpec&) const = default;
};

// Ordered squares visited by the robber in one turn, starting at his current
// square. A single-square walk is the stay move.
using Walk = std::vector<Coord>;

inline std::int64_t l1_distance(Coord a, Coord b) {
  return std::llabs(a.x - b.x) + std::llabs(a.y - b.y);
}

inline bool adjacent(Coord a, Coord b) { return l1_distance(a, b) == 1; }

inline std::int64_t walk_length(const Walk& w) {
  return w.empty() ? 0 : static_cast<std::int64_t>(w.size()) - 1;
}

// Appends the straight run from the last square of `w` to `to` (exclusive of
// the start). `to` must share a row or a column with the current end.
void append_straight(Walk& w, Coord to);

// Appends an L1-monotone route (columns first, then rows).
void append_manhattan(Walk& w, Coord to);

// Run-length form of a walk: the turning points, including both ends.
// Consecutive corners always share a row or column.
std::vector<Coord> compress_walk(std::span<const Coord> w);

// Inverse of compress_walk. Throws std::invalid_argument on non-collinear
// consecutive corners.
Walk expand_walk(std::span<const Coord> corners);

struct CoordHash {
  std::size_t operator()(Coord c) const noexcept {
    auto h = static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(c.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fastrobber
