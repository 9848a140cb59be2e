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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fastrobber/coord.hpp"

namespace fastrobber {

using BigInt = boost::multiprecision::cpp_int;

// Parses decimal integers with an optional exponent ("6401", "1e20",
// "1.8e21"). The value must be an exact integer.
BigInt parse_exact_integer(std::string_view text);

// Side of a k-cell in units of N: prod_{j=0..k} (2j+1)^2.
BigInt cell_scale(int k);

// Round budget of a level-k traversal: 1 at level 0, then
// ((2k+1)^2 + C) times the previous level.
BigInt step_budget(int k, const BigInt& C);

// lhs < e^C * rhs, decided with a rational lower bound of e. A true result is
// a proof; false means the inequality could not be confirmed.
bool less_than_exp_times(const BigInt& lhs, const BigInt& C, const BigInt& rhs);

// lhs > factor * e^C, decided with a rational upper bound of e.
bool greater_than_exp_times(const BigInt& lhs, const BigInt& C, const BigInt& factor);

enum class ParamMode { kCanonical, kRelaxed };

struct HierarchyParams {
  BigInt C = 40;
  BigInt N = 128;
  BigInt R = 6401;
  int k_max = 1;
  ParamMode mode = ParamMode::kRelaxed;
};

// Returns the violated inequalities; empty means valid.
std::vector<std::string> validate_params(const HierarchyParams& p);

// Flat "key = value" block with keys C, N, R, k_max, mode.
std::string format_params(const HierarchyParams& p);
HierarchyParams parse_params(std::string_view text);

class ParamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Machine-integer view of a parameter set, used by everything that runs on
// an actual grid. Construction fails when N * L(k_max) does not fit.
class Hierarchy {
 public:
  explicit Hierarchy(const HierarchyParams& p);

  std::int64_t N() const { return n_; }
  std::int64_t R() const { return r_; }
  std::int64_t C() const { return c_; }
  int k_max() const { return k_max_; }

  std::int64_t scale(int k) const { return scale_.at(k); }    // L_k
  std::int64_t budget(int k) const { return budget_.at(k); }  // T_k
  std::int64_t side(int k) const { return n_ * scale_.at(k); }
  static std::int64_t subcells(int k) { return (2 * k + 1) * (2 * k + 1); }

 private:
  std::int64_t n_, r_, c_;
  int k_max_;
  std::vector<std::int64_t> scale_, budget_;
};

// A k-cell of the tiling anchored at square (1,1).
struct CellCoord {
  int level = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;

  auto operator<=>(const CellCoord&) const = default;
};

// Sub-cell offset inside a parent cell (columns a, rows b).
struct RelCell {
  std::int64_t a = 0;
  std::int64_t b = 0;

  auto operator<=>(const RelCell&) const = default;
};

enum class ZoneSide { kBottom, kTop, kLeft, kRight };
enum class Direction { kUp, kRight, kDown, kLeft };

std::string_view zone_side_name(ZoneSide s);
std::string_view direction_name(Direction d);
RelCell direction_step(Direction d);
Direction opposite(Direction d);
// Moving in direction d, the robber enters the next cell through this side.
ZoneSide entry_side(Direction d);

CellCoord cell_of(Coord p, int k, const Hierarchy& h);
CellCoord subcell(CellCoord parent, RelCell rel);
RelCell relative_in_parent(CellCoord child);
CellCoord neighbour(CellCoord c, Direction d);

// Lowest-left and top-right squares of a cell.
Coord cell_min(CellCoord c, const Hierarchy& h);
Coord cell_max(CellCoord c, const Hierarchy& h);
// Floor midpoint of the cell.
Coord cell_center(CellCoord c, const Hierarchy& h);

// Relative sub-cells of a level-k zone, listed from the cell edge inwards.
std::array<RelCell, 3> zone_subcells(int k, ZoneSide side);
std::optional<ZoneSide> zone_side_of(int k, RelCell rel);

// Absolute level-(k-1) cells of the zone; c.level must be at least 1.
std::array<CellCoord, 3> landing_zone(CellCoord c, ZoneSide side);

bool is_k_landing_square(Coord p, int k, const Hierarchy& h);

// Same-level cells sharing neither an edge nor a corner.
bool is_separated(CellCoord a, CellCoord b);

// Grid (L1) distance from p to the nearest square of c.
std::int64_t cell_distance(Coord p, CellCoord c, const Hierarchy& h);

struct SafetyContext {
  std::span<const Coord> cops;
  const Hierarchy& h;
};

int cops_within(CellCoord c, std::int64_t t, const SafetyContext& ctx);

// Fewer than 2^k cops within distance t of the k-cell.
bool is_safe_for(CellCoord c, std::int64_t t, const SafetyContext& ctx);

bool is_k_safe(Coord p, int k, const SafetyContext& ctx);

// Still k-safe after any single cop move: every containing k'-cell is safe for
// T_k' + 1 steps.
bool is_completely_k_safe(Coord p, int k, const SafetyContext& ctx);

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class PairSelection { kFirst, kSecond, kBoth };

// Given separated sibling cells inside a parent that is safe for t steps with
// 2t below the sibling side, reports which of them is safe for t steps. At
// least one always is; a violated precondition or an empty answer throws.
PairSelection select_safe_of_pair(CellCoord first, CellCoord second, std::int64_t t,
                                  const SafetyContext& ctx);

}  // namespace fastrobber
