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

#include "fastrobber/hierarchy.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace fastrobber {

namespace {

// Nine-digit rational bounds around e: 2.718281828 < e < 2.718281829.
const BigInt kELowNum{2718281828};
const BigInt kEHighNum{2718281829};
const BigInt kEDen{1000000000};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

unsigned small_exponent(const BigInt& C) {
  if (C < 0 || C > 100000) throw ParamError("C out of supported range");
  return C.convert_to<unsigned>();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ParamError(std::string(what) + " does not fit a 64-bit integer");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

BigInt parse_exact_integer(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParamError("empty number");
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  std::int64_t frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    const char ch = s[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else if (ch != '_' && ch != '\'') {
      throw ParamError("not a number: '" + s + "'");
    }
  }
  if (digits.empty()) throw ParamError("not a number: '" + s + "'");
  std::int64_t exponent = 0;
  if (pos < s.size()) {
    const std::string e = s.substr(pos + 1);
    if (e.empty() || e.size() > 6) throw ParamError("bad exponent in '" + s + "'");
    std::size_t used = 0;
    exponent = std::stoll(e, &used);
    if (used != e.size()) throw ParamError("bad exponent in '" + s + "'");
  }
  BigInt value(digits);
  std::int64_t shift = exponent - frac_digits;
  if (shift >= 0) {
    value *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift));
  } else {
    const BigInt div = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-shift));
    if (value % div != 0) throw ParamError("'" + s + "' is not an exact integer");
    value /= div;
  }
  return negative ? BigInt(-value) : value;
}

BigInt cell_scale(int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  BigInt v = 1;
  for (int j = 0; j <= k; ++j) v *= (2 * j + 1) * (2 * j + 1);
  return v;
}

BigInt step_budget(int k, const BigInt& C) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  BigInt t = 1;
  for (int j = 1; j <= k; ++j) t = (2 * j + 1) * (2 * j + 1) * t + C * t;
  return t;
}

bool less_than_exp_times(const BigInt& lhs, const BigInt& C, const BigInt& rhs) {
  const unsigned c = small_exponent(C);
  return lhs * boost::multiprecision::pow(kEDen, c) < boost::multiprecision::pow(kELowNum, c) * rhs;
}

bool greater_than_exp_times(const BigInt& lhs, const BigInt& C, const BigInt& factor) {
  const unsigned c = small_exponent(C);
  return lhs * boost::multiprecision::pow(kEDen, c) >
         factor * boost::multiprecision::pow(kEHighNum, c);
}

std::vector<std::string> validate_params(const HierarchyParams& p) {
  std::vector<std::string> bad;
  if (p.k_max < 1) bad.emplace_back("k_max >= 1");
  if (p.C < 40) bad.emplace_back("C >= 40");
  if (!(p.R > 50 * p.N)) bad.emplace_back("R > 50*N");
  if (p.mode == ParamMode::kCanonical) {
    if (p.C >= 0 && !greater_than_exp_times(p.N, p.C, 100)) bad.emplace_back("N > 100*e^C");
    return bad;
  }
  if (!(36 * p.N <= p.R)) bad.emplace_back("36*N <= R");
  if (!(p.N > 4)) bad.emplace_back("N > 4");
  for (int j = 1; j <= p.k_max; ++j) {
    const BigInt t = step_budget(j - 1, p.C);
    const BigInt side = p.N * cell_scale(j - 1);
    const std::string at = " (level " + std::to_string(j) + ")";
    if (!(2 * (8 * t + 1) < side)) bad.push_back("2*(8*T_{j-1}+1) < N*L_{j-1}" + at);
    if (!(2 * (2 * t + 1) < side)) bad.push_back("2*(2*T_{j-1}+1) < N*L_{j-1}" + at);
    if (!(100 * t < side)) bad.push_back("100*T_{j-1} < N*L_{j-1}" + at);
    if (!(2 * (14 * t + 1) < side)) bad.push_back("2*(14*T_{j-1}+1) < N*L_{j-1}" + at);
  }
  return bad;
}

std::string format_params(const HierarchyParams& p) {
  std::ostringstream os;
  os << "C = " << p.C << "\nN = " << p.N << "\nR = " << p.R << "\nk_max = " << p.k_max
     << "\nmode = " << (p.mode == ParamMode::kCanonical ? "canonical" : "relaxed") << "\n";
  return os.str();
}

HierarchyParams parse_params(std::string_view text) {
  HierarchyParams p;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto sep = line.find_first_of("=:");
    if (sep == std::string::npos) throw ParamError("expected 'key = value': " + line);
    const std::string key = trim(line.substr(0, sep));
    const std::string value = trim(line.substr(sep + 1));
    if (key == "C") {
      p.C = parse_exact_integer(value);
    } else if (key == "N") {
      p.N = parse_exact_integer(value);
    } else if (key == "R") {
      p.R = parse_exact_integer(value);
    } else if (key == "k_max" || key == "k") {
      p.k_max = parse_exact_integer(value).convert_to<int>();
    } else if (key == "mode") {
      if (value == "canonical") {
        p.mode = ParamMode::kCanonical;
      } else if (value == "relaxed") {
        p.mode = ParamMode::kRelaxed;
      } else {
        throw ParamError("mode must be canonical or relaxed");
      }
    } else {
      throw ParamError("unknown parameter key '" + key + "'");
    }
  }
  return p;
}

Hierarchy::Hierarchy(const HierarchyParams& p)
    : n_(to_i64(p.N, "N")), r_(to_i64(p.R, "R")), c_(to_i64(p.C, "C")), k_max_(p.k_max) {
  if (n_ < 1) throw ParamError("N must be positive");
  if (k_max_ < 0) throw ParamError("k_max must be nonnegative");
  for (int k = 0; k <= k_max_ + 1; ++k) {
    const BigInt scale = cell_scale(k);
    const BigInt budget = step_budget(k, p.C);
    if (scale * p.N > std::numeric_limits<std::int64_t>::max() / 4 ||
        budget > std::numeric_limits<std::int64_t>::max() / 4) {
      if (k <= k_max_) throw ParamError("N*L(k) exceeds the runnable range");
      break;
    }
    scale_.push_back(scale.convert_to<std::int64_t>());
    budget_.push_back(budget.convert_to<std::int64_t>());
  }
}

std::string_view zone_side_name(ZoneSide s) {
  switch (s) {
    case ZoneSide::kBottom: return "bottom";
    case ZoneSide::kTop: return "top";
    case ZoneSide::kLeft: return "left";
    case ZoneSide::kRight: return "right";
  }
  return "?";
}

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::kUp: return "up";
    case Direction::kRight: return "right";
    case Direction::kDown: return "down";
    case Direction::kLeft: return "left";
  }
  return "?";
}

RelCell direction_step(Direction d) {
  switch (d) {
    case Direction::kUp: return {0, 1};
    case Direction::kRight: return {1, 0};
    case Direction::kDown: return {0, -1};
    case Direction::kLeft: return {-1, 0};
  }
  return {0, 0};
}

Direction opposite(Direction d) {
  switch (d) {
    case Direction::kUp: return Direction::kDown;
    case Direction::kRight: return Direction::kLeft;
    case Direction::kDown: return Direction::kUp;
    case Direction::kLeft: return Direction::kRight;
  }
  return d;
}

ZoneSide entry_side(Direction d) {
  switch (d) {
    case Direction::kUp: return ZoneSide::kBottom;
    case Direction::kRight: return ZoneSide::kLeft;
    case Direction::kDown: return ZoneSide::kTop;
    case Direction::kLeft: return ZoneSide::kRight;
  }
  return ZoneSide::kBottom;
}

CellCoord cell_of(Coord p, int k, const Hierarchy& h) {
  const std::int64_t side = h.side(k);
  return CellCoord{k, floor_div(p.x - 1, side), floor_div(p.y - 1, side)};
}

CellCoord subcell(CellCoord parent, RelCell rel) {
  const std::int64_t sub = Hierarchy::subcells(parent.level);
  return CellCoord{parent.level - 1, parent.i * sub + rel.a, parent.j * sub + rel.b};
}

RelCell relative_in_parent(CellCoord child) {
  const std::int64_t sub = Hierarchy::subcells(child.level + 1);
  return RelCell{child.i - floor_div(child.i, sub) * sub, child.j - floor_div(child.j, sub) * sub};
}

CellCoord neighbour(CellCoord c, Direction d) {
  const RelCell s = direction_step(d);
  return CellCoord{c.level, c.i + s.a, c.j + s.b};
}

Coord cell_min(CellCoord c, const Hierarchy& h) {
  const std::int64_t side = h.side(c.level);
  return Coord{c.i * side + 1, c.j * side + 1};
}

Coord cell_max(CellCoord c, const Hierarchy& h) {
  const std::int64_t side = h.side(c.level);
  return Coord{(c.i + 1) * side, (c.j + 1) * side};
}

Coord cell_center(CellCoord c, const Hierarchy& h) {
  const Coord lo = cell_min(c, h), hi = cell_max(c, h);
  return Coord{lo.x + (hi.x - lo.x) / 2, lo.y + (hi.y - lo.y) / 2};
}

std::array<RelCell, 3> zone_subcells(int k, ZoneSide side) {
  if (k < 1) throw std::invalid_argument("0-cells have no landing zones");
  const std::int64_t h = Hierarchy::subcells(k);
  const std::int64_t m = (h - 1) / 2;
  switch (side) {
    case ZoneSide::kBottom: return {RelCell{m, 0}, RelCell{m, 1}, RelCell{m, 2}};
    case ZoneSide::kTop: return {RelCell{m, h - 1}, RelCell{m, h - 2}, RelCell{m, h - 3}};
    case ZoneSide::kLeft: return {RelCell{0, m}, RelCell{1, m}, RelCell{2, m}};
    case ZoneSide::kRight: return {RelCell{h - 1, m}, RelCell{h - 2, m}, RelCell{h - 3, m}};
  }
  return {};
}

std::optional<ZoneSide> zone_side_of(int k, RelCell rel) {
  for (ZoneSide s : {ZoneSide::kBottom, ZoneSide::kTop, ZoneSide::kLeft, ZoneSide::kRight}) {
    const auto zone = zone_subcells(k, s);
    if (std::find(zone.begin(), zone.end(), rel) != zone.end()) return s;
  }
  return std::nullopt;
}

std::array<CellCoord, 3> landing_zone(CellCoord c, ZoneSide side) {
  const auto rel = zone_subcells(c.level, side);
  return {subcell(c, rel[0]), subcell(c, rel[1]), subcell(c, rel[2])};
}

bool is_k_landing_square(Coord p, int k, const Hierarchy& h) {
  for (int level = 1; level <= k; ++level) {
    if (!zone_side_of(level, relative_in_parent(cell_of(p, level - 1, h)))) return false;
  }
  return true;
}

bool is_separated(CellCoord a, CellCoord b) {
  if (a.level != b.level) throw std::invalid_argument("is_separated: level mismatch");
  return std::max(std::llabs(a.i - b.i), std::llabs(a.j - b.j)) >= 2;
}

std::int64_t cell_distance(Coord p, CellCoord c, const Hierarchy& h) {
  const Coord lo = cell_min(c, h), hi = cell_max(c, h);
  const std::int64_t dx = std::max<std::int64_t>({0, lo.x - p.x, p.x - hi.x});
  const std::int64_t dy = std::max<std::int64_t>({0, lo.y - p.y, p.y - hi.y});
  return dx + dy;
}

int cops_within(CellCoord c, std::int64_t t, const SafetyContext& ctx) {
  int count = 0;
  for (const Coord cop : ctx.cops) count += cell_distance(cop, c, ctx.h) <= t;
  return count;
}

bool is_safe_for(CellCoord c, std::int64_t t, const SafetyContext& ctx) {
  if (c.level >= 62) return true;
  return cops_within(c, t, ctx) < (std::int64_t{1} << c.level);
}

bool is_k_safe(Coord p, int k, const SafetyContext& ctx) {
  for (int level = 0; level <= k; ++level) {
    if (!is_safe_for(cell_of(p, level, ctx.h), ctx.h.budget(level), ctx)) return false;
  }
  return true;
}

bool is_completely_k_safe(Coord p, int k, const SafetyContext& ctx) {
  for (int level = 0; level <= k; ++level) {
    if (!is_safe_for(cell_of(p, level, ctx.h), ctx.h.budget(level) + 1, ctx)) return false;
  }
  return true;
}

PairSelection select_safe_of_pair(CellCoord first, CellCoord second, std::int64_t t,
                                  const SafetyContext& ctx) {
  if (first.level != second.level) throw PreconditionError("cells on different levels");
  if (!is_separated(first, second)) throw PreconditionError("cells are not separated");
  if (t < 0) throw PreconditionError("negative step count");
  const CellCoord parent = cell_of(cell_min(first, ctx.h), first.level + 1, ctx.h);
  if (cell_of(cell_min(second, ctx.h), first.level + 1, ctx.h) != parent) {
    throw PreconditionError("cells do not share a parent");
  }
  if (2 * t >= ctx.h.side(first.level)) throw PreconditionError("2t must be below the cell side");
  if (!is_safe_for(parent, t, ctx)) throw PreconditionError("parent is not safe for t steps");
  const bool a = is_safe_for(first, t, ctx);
  const bool b = is_safe_for(second, t, ctx);
  if (a && b) return PairSelection::kBoth;
  if (a) return PairSelection::kFirst;
  if (b) return PairSelection::kSecond;
  throw std::logic_error("neither separated cell is safe: counting argument violated");
}

}  // namespace fastrobber
