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
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fastrobber/game.hpp"
#include "fastrobber/match.hpp"

namespace fastrobber {

// Tie-breaking in every baseline is fixed so traces are reproducible.

// "greedy-pursuer": all cops start at the grid center. A cop next to the
// robber captures; otherwise it closes the row gap first, then the column gap.
class GreedyPursuer : public CopStrategy {
 public:
  std::string name() const override { return "greedy-pursuer"; }
  std::vector<Coord> place(const GameState& s, int cop_count, Rng& rng) override;
  std::vector<Coord> move(const GameState& s, Rng& rng) override;
};

// One greedy step from `cop` toward `target`.
Coord greedy_step(Coord cop, Coord target);

// "shadow-pursuer": heads for the robber's extrapolated square 2r - r_prev
// (clamped to the grid), columns first; captures when adjacent.
class ShadowPursuer : public CopStrategy {
 public:
  std::string name() const override { return "shadow-pursuer"; }
  std::vector<Coord> place(const GameState& s, int cop_count, Rng& rng) override;
  std::vector<Coord> move(const GameState& s, Rng& rng) override;

 private:
  std::optional<Coord> prev_;
};

// "random-cop": uniform placement, then uniform among stay and the in-bounds
// neighbours.
class RandomCop : public CopStrategy {
 public:
  std::string name() const override { return "random-cop"; }
  std::vector<Coord> place(const GameState& s, int cop_count, Rng& rng) override;
  std::vector<Coord> move(const GameState& s, Rng& rng) override;
};

// "ambush-script": JSON lines, each an array of [x, y] pairs. The first line
// is the placement, each later line one cop move; after the script the cops
// hold. An empty script places every cop at the grid center.
struct AmbushScript {
  std::vector<Coord> placement;
  std::vector<std::vector<Coord>> moves;
};
AmbushScript parse_ambush_script(std::istream& in);

class AmbushCops : public CopStrategy {
 public:
  explicit AmbushCops(AmbushScript script) : script_(std::move(script)) {}
  std::string name() const override { return "ambush-script"; }
  std::vector<Coord> place(const GameState& s, int cop_count, Rng& rng) override;
  std::vector<Coord> move(const GameState& s, Rng& rng) override;

 private:
  AmbushScript script_;
  std::size_t next_ = 0;
};

// Robber walk to `target` along a shortest cop-free path, or nullopt when it
// is not reachable this turn.
std::optional<Walk> walk_to(const GameState& s, Coord target);

// Smallest L1 distance to any cop; INT64_MAX without cops.
std::int64_t distance_to_cops(const GameState& s, Coord p);

// Free square maximizing the distance to the cops; ties to the smallest (x, y).
Coord farthest_free_square(const GameState& s);

// "greedy-evader": starts on the farthest free square; each turn moves to the
// reachable square farthest from the cops (ties to the smallest (x, y)), but
// only when that strictly improves on staying.
class GreedyEvader : public RobberStrategy {
 public:
  std::string name() const override { return "greedy-evader"; }
  std::optional<Coord> place(const GameState& s, Rng& rng) override;
  std::optional<Walk> move(const GameState& s, Rng& rng) override;
};

// "random-evader": uniform free start, uniform reachable destination.
class RandomEvader : public RobberStrategy {
 public:
  std::string name() const override { return "random-evader"; }
  std::optional<Coord> place(const GameState& s, Rng& rng) override;
  std::optional<Walk> move(const GameState& s, Rng& rng) override;
};

// "stationary": starts like greedy-evader, never moves.
class StationaryRobber : public RobberStrategy {
 public:
  std::string name() const override { return "stationary"; }
  std::optional<Coord> place(const GameState& s, Rng& rng) override;
  std::optional<Walk> move(const GameState& s, Rng& rng) override;
};

}  // namespace fastrobber
