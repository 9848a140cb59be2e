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

#include "fastrobber/game.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace fastrobber {

namespace {

std::string str(Coord c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

void expect_phase(const GameState& s, Phase want) {
  if (s.phase != want) {
    throw MoveError(MoveErrorKind::kWrongPhase,
                    "expected phase " + std::string(phase_name(want)) + ", got " +
                        std::string(phase_name(s.phase)));
  }
}

void expect_in_bounds(const GameState& s, Coord c) {
  if (!s.spec.contains(c)) {
    throw MoveError(MoveErrorKind::kOutOfBounds, "square " + str(c) + " is off the grid");
  }
}

}  // namespace

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::kCopsPlacing: return "cops-placing";
    case Phase::kRobberPlacing: return "robber-placing";
    case Phase::kCopsToMove: return "cops-to-move";
    case Phase::kRobberToMove: return "robber-to-move";
    case Phase::kCaptured: return "captured";
  }
  return "?";
}

bool GameState::cop_at(Coord p) const {
  return std::find(cops.begin(), cops.end(), p) != cops.end();
}

GameState initial_state(GridSpec spec) {
  if (spec.n < 2) throw std::invalid_argument("grid side must be at least 2");
  if (spec.speed < 1) throw std::invalid_argument("robber speed must be at least 1");
  GameState s;
  s.spec = spec;
  return s;
}

GameState place_cops(const GameState& s, std::span<const Coord> cops) {
  expect_phase(s, Phase::kCopsPlacing);
  for (const Coord c : cops) expect_in_bounds(s, c);
  GameState next = s;
  next.cops.assign(cops.begin(), cops.end());
  next.phase = Phase::kRobberPlacing;
  return next;
}

GameState place_robber(const GameState& s, Coord robber) {
  expect_phase(s, Phase::kRobberPlacing);
  expect_in_bounds(s, robber);
  if (s.cop_at(robber)) {
    throw MoveError(MoveErrorKind::kThroughCop, "robber placed on cop square " + str(robber));
  }
  GameState next = s;
  next.robber = robber;
  next.phase = Phase::kCopsToMove;
  return next;
}

GameState apply_cop_move(const GameState& s, std::span<const Coord> dests) {
  expect_phase(s, Phase::kCopsToMove);
  if (dests.size() != s.cops.size()) {
    throw MoveError(MoveErrorKind::kWrongArity,
                    "expected " + std::to_string(s.cops.size()) + " cop destinations, got " +
                        std::to_string(dests.size()));
  }
  for (std::size_t i = 0; i < dests.size(); ++i) {
    expect_in_bounds(s, dests[i]);
    if (dests[i] != s.cops[i] && !adjacent(dests[i], s.cops[i])) {
      throw MoveError(MoveErrorKind::kNotAdjacent,
                      "cop " + std::to_string(i) + " cannot move " + str(s.cops[i]) + " -> " +
                          str(dests[i]));
    }
  }
  GameState next = s;
  next.cops.assign(dests.begin(), dests.end());
  next.phase = next.cop_at(*next.robber) ? Phase::kCaptured : Phase::kRobberToMove;
  return next;
}

GameState apply_robber_walk(const GameState& s, std::span<const Coord> walk) {
  expect_phase(s, Phase::kRobberToMove);
  if (walk.empty()) throw MoveError(MoveErrorKind::kEmptyWalk, "walk has no squares");
  if (walk.front() != *s.robber) {
    throw MoveError(MoveErrorKind::kWrongStart,
                    "walk starts at " + str(walk.front()) + " but robber is at " + str(*s.robber));
  }
  if (static_cast<std::int64_t>(walk.size()) - 1 > s.spec.speed) {
    throw MoveError(MoveErrorKind::kTooLong, "walk of length " + std::to_string(walk.size() - 1) +
                                                 " exceeds speed " +
                                                 std::to_string(s.spec.speed));
  }
  for (std::size_t i = 0; i < walk.size(); ++i) {
    expect_in_bounds(s, walk[i]);
    if (i > 0 && !adjacent(walk[i - 1], walk[i])) {
      throw MoveError(MoveErrorKind::kNotAdjacent,
                      "walk step " + str(walk[i - 1]) + " -> " + str(walk[i]) + " is not an edge");
    }
    if (s.cop_at(walk[i])) {
      throw MoveError(MoveErrorKind::kThroughCop, "walk passes cop square " + str(walk[i]));
    }
  }
  GameState next = s;
  next.robber = walk.back();
  next.phase = Phase::kCopsToMove;
  ++next.round;
  return next;
}

std::vector<Coord> reachable_set(const GameState& s) {
  expect_phase(s, Phase::kRobberToMove);
  std::unordered_set<Coord, CoordHash> seen{*s.robber};
  std::deque<std::pair<Coord, std::int64_t>> queue{{*s.robber, 0}};
  constexpr std::int64_t kDx[] = {0, 0, -1, 1};
  constexpr std::int64_t kDy[] = {1, -1, 0, 0};
  while (!queue.empty()) {
    auto [p, d] = queue.front();
    queue.pop_front();
    if (d == s.spec.speed) continue;
    for (int dir = 0; dir < 4; ++dir) {
      const Coord q{p.x + kDx[dir], p.y + kDy[dir]};
      if (!s.spec.contains(q) || s.cop_at(q) || seen.contains(q)) continue;
      seen.insert(q);
      queue.emplace_back(q, d + 1);
    }
  }
  std::vector<Coord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fastrobber
