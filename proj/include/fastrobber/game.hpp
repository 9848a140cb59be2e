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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fastrobber/coord.hpp"

namespace fastrobber {

enum class Phase { kCopsPlacing, kRobberPlacing, kCopsToMove, kRobberToMove, kCaptured };

std::string_view phase_name(Phase p);

// Why a move was rejected. Every validator failure maps to exactly one kind.
enum class MoveErrorKind {
  kWrongPhase,
  kWrongArity,
  kNotAdjacent,
  kOutOfBounds,
  kWrongStart,
  kTooLong,
  kThroughCop,
  kEmptyWalk,
};

class MoveError : public std::runtime_error {
 public:
  MoveError(MoveErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  MoveErrorKind kind() const { return kind_; }

 private:
  MoveErrorKind kind_;
};

// Sparse position: only coordinates are stored, never a board.
struct GameState {
  GridSpec spec;
  std::vector<Coord> cops;
  std::optional<Coord> robber;
  Phase phase = Phase::kCopsPlacing;
  std::int64_t round = 0;  // completed cop+robber rounds

  bool cop_at(Coord p) const;
  bool operator==(const GameState&) const = default;
};

GameState initial_state(GridSpec spec);

// Cops choose their squares first; duplicates are allowed.
GameState place_cops(const GameState& s, std::span<const Coord> cops);

// The robber may not start on a cop square.
GameState place_robber(const GameState& s, Coord robber);

// One entry per cop, in the same order as s.cops. Each entry stays put or
// steps to an adjacent in-bounds square.
GameState apply_cop_move(const GameState& s, std::span<const Coord> dests);

// The walk starts at the robber, has at most `speed` edges, and never touches
// a cop square (including its last square).
GameState apply_robber_walk(const GameState& s, std::span<const Coord> walk);

// Every square the robber can end a legal walk on, sorted.
std::vector<Coord> reachable_set(const GameState& s);

}  // namespace fastrobber
