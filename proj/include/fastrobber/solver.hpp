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
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fastrobber/game.hpp"
#include "fastrobber/match.hpp"

namespace fastrobber {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cop decision rule used to solve the game restricted to one cop strategy.
// Receives a cops-to-move position with cops listed in increasing (y, x)
// order and returns their destinations.
using CopPolicy = std::function<std::vector<Coord>(const GameState&)>;

struct SolverInstance {
  std::int64_t n = 2;
  std::int64_t speed = 1;
  int cops = 1;
  std::int64_t budget = 100'000'000;  // max state encodings
  CopPolicy policy;                   // empty: cops play freely
};

// multichoose(n^2, cops) * n^2 * 2, saturating at INT64_MAX.
std::int64_t state_count(std::int64_t n, int cops);

// Capture depth of every position. Cop placements are sorted multisets of
// squares, indexed by combinatorial rank; squares are indexed (y-1)*n + (x-1).
// Depth counts cop turns until capture under optimal play on both sides;
// kRobberWin marks positions the robber can hold forever.
class WinTable {
 public:
  static constexpr std::uint16_t kRobberWin = 0xFFFF;

  std::int64_t n() const { return n_; }
  std::int64_t speed() const { return speed_; }
  int cops() const { return cops_; }
  bool restricted() const { return restricted_; }
  int iterations() const { return iterations_; }
  std::int64_t placement_count() const { return placements_; }

  std::int64_t rank(std::vector<Coord> cops) const;
  std::vector<Coord> unrank(std::int64_t rank) const;
  std::int64_t square_index(Coord p) const { return (p.y - 1) * n_ + (p.x - 1); }
  Coord square(std::int64_t index) const { return Coord{index % n_ + 1, index / n_ + 1}; }

  // Phase must be kCopsToMove or kRobberToMove.
  std::uint16_t depth(const std::vector<Coord>& cops, Coord robber, Phase to_move) const;
  bool cop_win(const std::vector<Coord>& cops, Coord robber, Phase to_move) const {
    return depth(cops, robber, to_move) != kRobberWin;
  }
  // Every robber start off the cop squares loses.
  bool placement_wins(std::int64_t rank) const;
  std::optional<std::vector<Coord>> winning_placement() const;

  void write_binary(std::ostream& out) const;
  static WinTable read_binary(std::istream& in);
  nlohmann::json summary() const;

  bool operator==(const WinTable&) const = default;

 private:
  friend WinTable solve(const SolverInstance& inst);

  std::int64_t n_ = 0, speed_ = 0;
  int cops_ = 0;
  bool restricted_ = false;
  int iterations_ = 0;
  std::int64_t placements_ = 0;
  std::vector<std::uint16_t> cop_depth_;     // [rank * n^2 + square]
  std::vector<std::uint16_t> robber_depth_;  // same layout
};

// Throws BudgetExceeded when state_count exceeds the budget and
// std::invalid_argument for n outside [2, 8], speed < 1 or cops < 1.
WinTable solve(const SolverInstance& inst);

// Least c in [1, max_cops] whose cops win, or nullopt.
std::optional<int> cop_number(std::int64_t n, std::int64_t speed, int max_cops,
                              std::int64_t budget = 100'000'000);

struct StrategyReport {
  bool applicable = true;
  std::string reason;
  bool captured = false;
  std::int64_t rounds = 0;
  bool region_preserved = true;
  nlohmann::json to_json() const;
};

// Plays a cop policy from `placement` against the robber that is optimal in
// `table`, which must be the table solved with that policy. The region is
// preserved when every robber start is a loss for him.
StrategyReport verify_cop_policy(const WinTable& table, const std::vector<Coord>& placement,
                                 const CopPolicy& policy, std::int64_t max_rounds);

// Plays a robber strategy against the optimal cops of an unrestricted table.
// The region is preserved when the robber never steps from a winning position
// into a losing one. A strategy whose hypotheses cannot hold on this grid
// (PreconditionError at placement) is reported as not applicable.
StrategyReport verify_robber_strategy(const WinTable& table, RobberStrategy& robber,
                                      std::int64_t max_rounds, std::uint64_t seed = 0);

}  // namespace fastrobber
