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

#include "fastrobber/sweep.hpp"

namespace fastrobber {

std::int64_t sweep_half_width_unchecked(std::int64_t n, std::int64_t speed) {
  if (n < 1 || speed < 1) throw SweepError("grid side and speed must be positive");
  const std::int64_t den = 2 * speed - 1;
  return (n * (speed - 1) + den - 1) / den + 2;
}

std::int64_t sweep_half_width(std::int64_t n, std::int64_t speed) {
  const std::int64_t L = sweep_half_width_unchecked(n, speed);
  if (2 * L + 1 > n) {
    throw SweepError("grid too small: line of " + std::to_string(2 * L + 1) +
                     " cops does not fit in " + std::to_string(n) + " columns");
  }
  return L;
}

std::int64_t sweep_cop_count(std::int64_t n, std::int64_t speed) {
  return 2 * sweep_half_width(n, speed) + 1;
}

std::vector<Coord> sweep_place(std::int64_t n, std::int64_t half_width) {
  if (half_width < 0 || 2 * half_width + 1 > n) throw SweepError("line does not fit the grid");
  std::vector<Coord> cops;
  for (std::int64_t x = 1; x <= 2 * half_width + 1; ++x) cops.push_back(Coord{x, n});
  return cops;
}

SweepState formation_of(const std::vector<Coord>& cops) {
  if (cops.empty() || cops.size() % 2 == 0) throw std::logic_error("formation needs 2L+1 cops");
  const auto L = static_cast<std::int64_t>(cops.size() / 2);
  const SweepState f{L, cops[L].x, cops[L].y};
  for (std::size_t i = 0; i < cops.size(); ++i) {
    if (cops[i] != Coord{f.x - L + static_cast<std::int64_t>(i), f.y}) {
      throw std::logic_error("cop line is no longer contiguous");
    }
  }
  return f;
}

std::string_view sweep_action_name(SweepAction a) {
  switch (a) {
    case SweepAction::kDown: return "down";
    case SweepAction::kLeft: return "left";
    case SweepAction::kRight: return "right";
    case SweepAction::kHold: return "hold";
  }
  return "?";
}

SweepAction sweep_decide(const SweepState& f, Coord robber, const GridSpec& spec) {
  const std::int64_t lo = f.half_width + 1;           // line flush left
  const std::int64_t hi = spec.n - f.half_width;      // line flush right
  const std::int64_t xr = robber.x;
  const bool down = std::llabs(f.x - xr) <= spec.speed ||
                    (f.x == lo && xr < f.x - spec.speed) ||
                    (f.x == hi && xr > f.x + spec.speed);
  if (down) return f.y > 1 ? SweepAction::kDown : SweepAction::kHold;
  const SweepAction lateral = f.x > xr ? SweepAction::kLeft : SweepAction::kRight;
  const std::int64_t next = f.x + (lateral == SweepAction::kLeft ? -1 : 1);
  if (next < lo || next > hi) throw std::logic_error("line would leave the grid");
  return lateral;
}

std::vector<Coord> sweep_move(const GameState& s) {
  if (!s.robber) throw std::logic_error("sweep needs a placed robber");
  const SweepState f = formation_of(s.cops);
  Coord d{0, 0};
  switch (sweep_decide(f, *s.robber, s.spec)) {
    case SweepAction::kDown: d = {0, -1}; break;
    case SweepAction::kLeft: d = {-1, 0}; break;
    case SweepAction::kRight: d = {1, 0}; break;
    case SweepAction::kHold: break;
  }
  std::vector<Coord> out = s.cops;
  for (Coord& c : out) c = Coord{c.x + d.x, c.y + d.y};
  return out;
}

LineSweepCops::LineSweepCops(std::optional<std::int64_t> half_width) : override_(half_width) {}

std::vector<Coord> LineSweepCops::place(const GameState& s, int cop_count, Rng&) {
  const std::int64_t proven = sweep_half_width_unchecked(s.spec.n, s.spec.speed);
  const std::int64_t L = override_ ? *override_ : sweep_half_width(s.spec.n, s.spec.speed);
  strict_ = L >= proven;
  if (cop_count != 2 * L + 1) {
    throw SweepError("line-sweep needs exactly " + std::to_string(2 * L + 1) + " cops, got " +
                     std::to_string(cop_count));
  }
  inv_ = {};
  last_.reset();
  last_y_ = s.spec.n;
  last_gap_ = 0;
  return sweep_place(s.spec.n, L);
}

void LineSweepCops::violation(std::int64_t& counter, const std::string& what) {
  ++counter;
  if (strict_) throw std::logic_error("line-sweep invariant violated: " + what);
}

std::vector<Coord> LineSweepCops::move(const GameState& s, Rng&) {
  const SweepState f = formation_of(s.cops);
  const Coord r = *s.robber;
  if (f.y > last_y_) violation(inv_.rises, "line moved up");
  if (inv_.descended && r.y >= f.y) violation(inv_.robber_not_below, "robber is not below the line");
  const std::int64_t gap = f.x - r.x;
  if (last_ && (gap > 0) != (last_gap_ > 0) && gap != 0 && last_gap_ != 0 &&
      *last_ != SweepAction::kDown) {
    violation(inv_.crossing_without_descent, "robber crossed the center without a descent");
  }
  const SweepAction a = sweep_decide(f, r, s.spec);
  if (a == SweepAction::kDown) inv_.descended = true;
  last_ = a;
  last_y_ = f.y;
  last_gap_ = gap;
  return sweep_move(s);
}

}  // namespace fastrobber
