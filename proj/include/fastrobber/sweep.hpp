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
#include <stdexcept>
#include <string>
#include <vector>

#include "fastrobber/game.hpp"
#include "fastrobber/match.hpp"

namespace fastrobber {

class SweepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Half-width L = ceil(n(R-1)/(2R-1)) + 2, the smallest integer meeting the
// proven bound. Not checked against n.
std::int64_t sweep_half_width_unchecked(std::int64_t n, std::int64_t speed);

// As above; throws SweepError when the 2L+1 line does not fit in a row.
std::int64_t sweep_half_width(std::int64_t n, std::int64_t speed);
std::int64_t sweep_cop_count(std::int64_t n, std::int64_t speed);

// 2L+1 cops on the top row, flush left: columns 1..2L+1, center L+1.
std::vector<Coord> sweep_place(std::int64_t n, std::int64_t half_width);

// The line as read back from the cop positions.
struct SweepState {
  std::int64_t half_width = 0;
  std::int64_t x = 0;  // central cop
  std::int64_t y = 0;
};

// Throws std::logic_error unless cops[i] = (x - L + i, y) for all i.
SweepState formation_of(const std::vector<Coord>& cops);

enum class SweepAction { kDown, kLeft, kRight, kHold };
std::string_view sweep_action_name(SweepAction a);

// Step down when the robber column is within R of the center, or the line is
// flush against the edge on the robber's side; otherwise step toward him.
// A step down from the bottom row becomes a hold.
SweepAction sweep_decide(const SweepState& f, Coord robber, const GridSpec& spec);

std::vector<Coord> sweep_move(const GameState& s);

struct SweepInvariants {
  bool descended = false;
  std::int64_t robber_not_below = 0;  // y_r >= y_c seen after the first descent
  std::int64_t crossing_without_descent = 0;
  std::int64_t rises = 0;
  std::int64_t violations() const { return robber_not_below + crossing_without_descent + rises; }
};

// "line-sweep". With the default half-width every invariant violation throws
// std::logic_error; an overridden (smaller) width only counts them.
class LineSweepCops : public CopStrategy {
 public:
  explicit LineSweepCops(std::optional<std::int64_t> half_width = std::nullopt);

  std::string name() const override { return "line-sweep"; }
  std::vector<Coord> place(const GameState& s, int cop_count, Rng& rng) override;
  std::vector<Coord> move(const GameState& s, Rng& rng) override;

  const SweepInvariants& invariants() const { return inv_; }
  std::optional<SweepAction> last_action() const { return last_; }

 private:
  void violation(std::int64_t& counter, const std::string& what);

  std::optional<std::int64_t> override_;
  bool strict_ = true;
  SweepInvariants inv_;
  std::optional<SweepAction> last_;
  std::int64_t last_y_ = 0;
  std::int64_t last_gap_ = 0;  // x_c - x_r at the previous cop turn
};

}  // namespace fastrobber
