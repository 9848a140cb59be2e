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

// Randomized check of the "one of two separated siblings is safe" selection,
// shared by the property tests and the acceptance run. Cop distances are
// recomputed here from first principles.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fastrobber/hierarchy.hpp"

namespace fastrobber::testing {

struct SafePairReport {
  std::int64_t trials = 0;
  std::int64_t both = 0;
  std::int64_t one = 0;
  std::string failure;  // empty on success
};

inline SafePairReport check_safe_pair_random(std::int64_t trials, std::uint64_t seed) {
  HierarchyParams p;
  p.C = 40;
  p.N = 3;
  p.R = 151;
  p.k_max = 2;
  const Hierarchy h(p);
  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  // L1 distance from a square to the box of a cell, from the tiling alone.
  auto dist = [&](Coord q, CellCoord c) {
    const std::int64_t side = h.side(c.level);
    const std::int64_t x0 = c.i * side + 1, x1 = (c.i + 1) * side;
    const std::int64_t y0 = c.j * side + 1, y1 = (c.j + 1) * side;
    const std::int64_t dx = q.x < x0 ? x0 - q.x : (q.x > x1 ? q.x - x1 : 0);
    const std::int64_t dy = q.y < y0 ? y0 - q.y : (q.y > y1 ? q.y - y1 : 0);
    return dx + dy;
  };
  auto count = [&](const std::vector<Coord>& cops, CellCoord c, std::int64_t t) {
    std::int64_t n = 0;
    for (Coord q : cops) n += dist(q, c) <= t;
    return n;
  };

  SafePairReport rep;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    const int level = static_cast<int>(pick(1, 2));
    const CellCoord parent{level, pick(-2, 2), pick(-2, 2)};
    const std::int64_t sub = Hierarchy::subcells(level);
    const std::int64_t child_side = h.side(level - 1);
    const std::int64_t t = pick(0, (child_side - 1) / 2);

    CellCoord a, b;
    do {
      a = {level - 1, parent.i * sub + pick(0, sub - 1), parent.j * sub + pick(0, sub - 1)};
      b = {level - 1, parent.i * sub + pick(0, sub - 1), parent.j * sub + pick(0, sub - 1)};
    } while (std::max(std::llabs(a.i - b.i), std::llabs(a.j - b.j)) < 2);

    // Fewer than 2^level cops near the parent, a few more beyond reach.
    const std::int64_t side = h.side(level);
    const Coord lo{parent.i * side + 1, parent.j * side + 1};
    std::vector<Coord> cops;
    const std::int64_t near = pick(0, (std::int64_t{1} << level) - 1);
    while (static_cast<std::int64_t>(cops.size()) < near) {
      // Half of them are pushed toward the two chosen cells.
      Coord q;
      if (pick(0, 1) == 0) {
        const CellCoord& c = pick(0, 1) ? a : b;
        q = {c.i * child_side + pick(-t, child_side + t), c.j * child_side + pick(-t, child_side + t)};
      } else {
        q = {lo.x + pick(-t, side + t), lo.y + pick(-t, side + t)};
      }
      if (dist(q, parent) <= t) cops.push_back(q);
    }
    for (std::int64_t far = pick(0, 3); far > 0;) {
      Coord q{lo.x + pick(-2 * side, 3 * side), lo.y + pick(-2 * side, 3 * side)};
      if (dist(q, parent) > t) {
        cops.push_back(q);
        --far;
      }
    }

    const std::int64_t cap = std::int64_t{1} << (level - 1);
    const bool safe_a = count(cops, a, t) < cap, safe_b = count(cops, b, t) < cap;
    const SafetyContext ctx{cops, h};
    PairSelection got;
    try {
      got = select_safe_of_pair(a, b, t, ctx);
    } catch (const std::exception& e) {
      rep.failure = "trial " + std::to_string(trial) + ": " + e.what();
      return rep;
    }
    const bool ok = (safe_a || safe_b) &&
                    ((got == PairSelection::kBoth && safe_a && safe_b) ||
                     (got == PairSelection::kFirst && safe_a && !safe_b) ||
                     (got == PairSelection::kSecond && !safe_a && safe_b));
    if (!ok) {
      rep.failure = "trial " + std::to_string(trial) + ": wrong selection";
      return rep;
    }
    ++rep.trials;
    (got == PairSelection::kBoth ? rep.both : rep.one) += 1;
  }
  return rep;
}

}  // namespace fastrobber::testing
