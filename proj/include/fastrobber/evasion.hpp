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
#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fastrobber/game.hpp"
#include "fastrobber/hierarchy.hpp"
#include "fastrobber/match.hpp"

namespace fastrobber {

// A condition that the evasion argument guarantees did not hold at runtime.
// Always indicates bad parameters, too many cops, or an implementation bug.
class ProofAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// --- one-round dash between two 0-cells -----------------------------------

// Turning points of the index-th route of the dash family, from the exit
// square of `from` to the entry square of `to`. Routes with distinct indices
// share no square. Both cells are 0-cells and must differ.
std::vector<Coord> dash_route(CellCoord from, CellCoord to, std::int64_t index,
                              const Hierarchy& h);

// Turning points of the complete dash: `start` (inside `from`) to the exit
// square, the index-th route, then on to the center of `to`.
std::vector<Coord> dash_corners(Coord start, CellCoord from, CellCoord to, std::int64_t index,
                                const Hierarchy& h);

struct DashResult {
  Walk walk;
  CellCoord target;
  std::int64_t route_index = 0;
};

// The level-1 move: from the robber's 0-cell in a landing zone of the 1-cell
// `cell`, one walk into the entry zone of the neighbouring 1-cell in direction
// `exit`. The target 0-cell is the edge or the far cell of that zone, whichever
// is safe for 2 steps (edge preferred); the lowest-index cop-free route is used.
DashResult base_dash(const GameState& s, const Hierarchy& h, CellCoord cell, Direction exit);

// --- recursive traversal ----------------------------------------------------

struct TraversalRecord {
  int level = 0;
  Direction exit = Direction::kUp;
  std::int64_t rounds = 0;
  std::int64_t first_leg_rounds = 0;
  std::int64_t second_leg_rounds = 0;
  int detours = 0;
  int second_leg_path = -1;
};

struct EvasionStats {
  std::vector<TraversalRecord> completed;
  std::int64_t dashes = 0;
  std::int64_t max_dash_length = 0;

  std::int64_t count(int level) const;
  std::int64_t max_rounds(int level) const;
  int max_detours(int level) const;
  std::int64_t total_detours(int level) const;
};

// --- canonical-frame geometry ------------------------------------------------
// A level-k cell split into sub x sub cells, exit at the top, target cell
// directly above (rows sub..2*sub-1); m = (sub-1)/2.

// Next cell of the first leg: along row m toward column m, then up column m.
RelCell route_step(std::int64_t sub, RelCell c);

// Cells around the blocked next cell `blocked`, from the neighbour of `here`
// on the left (side = +1) or right (side = -1) of the travel direction to the
// first route cell beyond `blocked` that is separated from it. Shortest such
// path staying inside the cell and off the 3x3 block around `blocked`.
std::deque<RelCell> detour_ring(std::int64_t sub, RelCell here, RelCell blocked, int side);

// The five candidate routes from a top-zone cell into the target's entry zone,
// in preference order: straight up; around at column offset -2, +2 ending at
// the zone's edge cell; around at offset -4, +4 ending at its far cell.
std::vector<std::deque<RelCell>> final_stretch_paths(std::int64_t sub, RelCell from);

// Moves the robber from a landing square of a k-cell to a landing square in
// the entry zone of its neighbour in direction `exit`, one walk per call.
//
// The level-k plan is kept in a canonical frame where the exit is "up" and the
// current cell occupies sub-cells (a, b), 0 <= a, b < (2k+1)^2; the target
// cell is the same block shifted up by (2k+1)^2. The other three exits are
// handled by rotating the frame.
class Traversal {
 public:
  Traversal(const Hierarchy& h, int level, CellCoord cell, Direction exit);

  Walk step(const GameState& s, EvasionStats& stats);
  bool done() const { return done_; }
  int level() const { return level_; }

  // Appends one entry per active level, outermost first.
  void describe(nlohmann::json& stack) const;

 private:
  enum class Stage { kNotStarted, kFirstLeg, kSecondLeg };

  CellCoord to_actual(RelCell rel) const;
  RelCell to_canonical(CellCoord c) const;
  Direction actual_direction(RelCell step) const;
  bool safe_for(RelCell rel, std::int64_t t, const SafetyContext& ctx) const;

  void check_start(const GameState& s) const;
  void finish(const GameState& s, Coord arrival, EvasionStats& stats);
  RelCell choose_next(const GameState& s, RelCell here);

  const Hierarchy* h_;
  int level_;
  CellCoord cell_;
  Direction exit_;
  std::int64_t sub_;  // sub-cells per side
  std::int64_t mid_;

  Stage stage_ = Stage::kNotStarted;
  bool done_ = false;
  std::deque<RelCell> pending_;
  RelCell target_{};
  std::unique_ptr<Traversal> child_;
  std::int64_t rounds_ = 0;
  std::int64_t first_leg_rounds_ = 0;
  int detours_ = 0;
  int second_leg_path_ = -1;
};

// --- placement and the eternal loop -----------------------------------------

// 0-cell centers that are k-landing squares of a k-cell, in row-major order
// (bottom row first, then by column).
std::vector<Coord> landing_candidates(CellCoord cell, const Hierarchy& h);

// Completely k-safe, k-landing square in the 2x2 array of k-cells anchored at
// (1,1): bottom-left cell first, then the others clockwise. Throws
// PreconditionError when the hypotheses (fewer than 2^k cops, grid side at
// least 2*N*L_k) fail, ProofAssertion when no square qualifies.
Coord place_robber_square(const GameState& s, const Hierarchy& h, int k);

// The robber runs around the 2x2 array of k-cells clockwise (up, right, down,
// left), one traversal per leg.
class HierarchicalEvader : public RobberStrategy {
 public:
  HierarchicalEvader(const Hierarchy& h, int k);

  std::string name() const override { return "hierarchical"; }
  std::optional<Coord> place(const GameState& s, Rng& rng) override;
  std::optional<Walk> move(const GameState& s, Rng& rng) override;
  nlohmann::json diagnostics() const override { return diag_; }

  const EvasionStats& stats() const { return stats_; }
  std::int64_t legs_completed() const { return legs_completed_; }

 private:
  Hierarchy h_;
  int k_;
  std::unique_ptr<Traversal> leg_;
  EvasionStats stats_;
  std::int64_t legs_completed_ = 0;
  nlohmann::json diag_;
};

}  // namespace fastrobber
