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

#include "fastrobber/coord.hpp"

#include <stdexcept>

namespace fastrobber {

namespace {

std::int64_t sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

void append_straight(Walk& w, Coord to) {
  if (w.empty()) {
    w.push_back(to);
    return;
  }
  Coord cur = w.back();
  if (cur.x != to.x && cur.y != to.y) {
    throw std::invalid_argument("append_straight: target not collinear");
  }
  const std::int64_t dx = sign(to.x - cur.x);
  const std::int64_t dy = sign(to.y - cur.y);
  w.reserve(w.size() + static_cast<std::size_t>(l1_distance(cur, to)));
  while (cur != to) {
    cur.x += dx;
    cur.y += dy;
    w.push_back(cur);
  }
}

void append_manhattan(Walk& w, Coord to) {
  if (w.empty()) {
    w.push_back(to);
    return;
  }
  append_straight(w, Coord{to.x, w.back().y});
  append_straight(w, to);
}

std::vector<Coord> compress_walk(std::span<const Coord> w) {
  std::vector<Coord> corners;
  if (w.empty()) return corners;
  corners.push_back(w.front());
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    const Coord a = w[i - 1], b = w[i], c = w[i + 1];
    const bool straight = (b.x - a.x == c.x - b.x) && (b.y - a.y == c.y - b.y);
    if (!straight) corners.push_back(b);
  }
  if (w.size() > 1) corners.push_back(w.back());
  return corners;
}

Walk expand_walk(std::span<const Coord> corners) {
  Walk w;
  for (const Coord c : corners) {
    if (!w.empty() && c == w.back()) continue;
    append_straight(w, c);
  }
  return w;
}

}  // namespace fastrobber
