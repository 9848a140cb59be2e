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

#include "fastrobber/evasion.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace fastrobber {

namespace {

std::int64_t sign(std::int64_t v) { return (v > 0) - (v < 0); }

std::string str(Coord c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::string str(CellCoord c) {
  return "L" + std::to_string(c.level) + "(" + std::to_string(c.i) + "," + std::to_string(c.j) +
         ")";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ProofAssertion(what);
}

void push_corner(std::vector<Coord>& corners, Coord c) {
  if (corners.empty() || corners.back() != c) corners.push_back(c);
}

// Columns first, then rows.
void push_manhattan(std::vector<Coord>& corners, Coord to) {
  push_corner(corners, Coord{to.x, corners.back().y});
  push_corner(corners, to);
}

bool on_segment(Coord p, Coord a, Coord b) {
  if (a.x == b.x && p.x == a.x) return p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
  if (a.y == b.y && p.y == a.y) return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x);
  return false;
}

bool hits_cop(const std::vector<Coord>& corners, std::span<const Coord> cops) {
  for (const Coord cop : cops) {
    if (corners.size() == 1 && corners[0] == cop) return true;
    for (std::size_t i = 1; i < corners.size(); ++i) {
      if (on_segment(cop, corners[i - 1], corners[i])) return true;
    }
  }
  return false;
}

std::int64_t corners_length(const std::vector<Coord>& corners) {
  std::int64_t len = 0;
  for (std::size_t i = 1; i < corners.size(); ++i) len += l1_distance(corners[i - 1], corners[i]);
  return len;
}

std::int64_t chebyshev(RelCell a, RelCell b) {
  return std::max(std::llabs(a.a - b.a), std::llabs(a.b - b.b));
}

RelCell plus(RelCell a, RelCell b) { return RelCell{a.a + b.a, a.b + b.b}; }

RelCell scaled(RelCell a, std::int64_t s) { return RelCell{a.a * s, a.b * s}; }

Direction direction_of(RelCell step) {
  for (Direction d : {Direction::kUp, Direction::kRight, Direction::kDown, Direction::kLeft}) {
    if (direction_step(d) == step) return d;
  }
  throw ProofAssertion("consecutive planned cells are not neighbours");
}

std::string_view stage_name(int stage) {
  switch (stage) {
    case 0: return "start";
    case 1: return "first-leg";
    default: return "second-leg";
  }
}

}  // namespace

// --- dash ----------------------------------------------------------------

std::vector<Coord> dash_route(CellCoord from, CellCoord to, std::int64_t index,
                              const Hierarchy& h) {
  if (from.level != 0 || to.level != 0) throw std::invalid_argument("dash_route needs 0-cells");
  if (from == to) throw std::invalid_argument("dash_route needs distinct cells");
  const std::int64_t n = h.N();
  if (index < 0 || index >= n) throw std::out_of_range("dash route index");
  const Coord flo = cell_min(from, h), fhi = cell_max(from, h);
  const Coord tlo = cell_min(to, h), thi = cell_max(to, h);
  const std::int64_t sx = sign(to.i - from.i);
  const std::int64_t sy = sign(to.j - from.j);
  if (sx == 0) {
    const std::int64_t x = flo.x + index;
    return {Coord{x, sy > 0 ? fhi.y : flo.y}, Coord{x, sy > 0 ? tlo.y : thi.y}};
  }
  if (sy == 0) {
    const std::int64_t y = flo.y + index;
    return {Coord{sx > 0 ? fhi.x : flo.x, y}, Coord{sx > 0 ? tlo.x : thi.x, y}};
  }
  // Nested L shapes: the row farthest from `to` turns in the column farthest
  // from `from`, so no two routes cross.
  const std::int64_t row = sy > 0 ? flo.y + index : fhi.y - index;
  const std::int64_t col = sx > 0 ? thi.x - index : tlo.x + index;
  const std::int64_t exit_x = sx > 0 ? fhi.x : flo.x;
  const std::int64_t entry_y = sy > 0 ? tlo.y : thi.y;
  return {Coord{exit_x, row}, Coord{col, row}, Coord{col, entry_y}};
}

std::vector<Coord> dash_corners(Coord start, CellCoord from, CellCoord to, std::int64_t index,
                                const Hierarchy& h) {
  const std::vector<Coord> route = dash_route(from, to, index, h);
  std::vector<Coord> corners{start};
  push_manhattan(corners, route.front());
  for (std::size_t i = 1; i < route.size(); ++i) push_corner(corners, route[i]);
  push_manhattan(corners, cell_center(to, h));
  return corners;
}

DashResult base_dash(const GameState& s, const Hierarchy& h, CellCoord cell, Direction exit) {
  require(s.phase == Phase::kRobberToMove && s.robber.has_value(), "dash outside robber turn");
  require(cell.level == 1, "dash works on 1-cells");
  const Coord p = *s.robber;
  const SafetyContext ctx{s.cops, h};
  require(cell_of(p, 1, h) == cell, "robber " + str(p) + " is not in " + str(cell));
  require(is_k_landing_square(p, 1, h), "dash start " + str(p) + " is not a landing square");
  require(is_k_safe(p, 1, ctx), "dash start " + str(p) + " is not 1-safe");
  const CellCoord next = neighbour(cell, exit);
  require(is_safe_for(next, 2 * h.budget(1) + 1, ctx),
          "target " + str(next) + " is not safe for 2*T_1+1 steps");

  const auto zone = landing_zone(next, entry_side(exit));
  CellCoord target;
  if (is_safe_for(zone[0], 2, ctx)) {
    target = zone[0];
  } else if (is_safe_for(zone[2], 2, ctx)) {
    target = zone[2];
  } else {
    throw ProofAssertion("neither separated zone cell of " + str(next) + " is safe for 2 steps");
  }

  const CellCoord from = cell_of(p, 0, h);
  for (std::int64_t i = 0; i < h.N(); ++i) {
    const std::vector<Coord> corners = dash_corners(p, from, target, i, h);
    if (hits_cop(corners, s.cops)) continue;
    const std::int64_t len = corners_length(corners);
    require(len <= 36 * h.N(), "dash of length " + std::to_string(len) + " exceeds 36N");
    require(len <= h.R(), "dash of length " + std::to_string(len) + " exceeds robber speed");
    return DashResult{expand_walk(corners), target, i};
  }
  throw ProofAssertion("every dash route from " + str(p) + " is blocked by a cop");
}

// --- stats ---------------------------------------------------------------

std::int64_t EvasionStats::count(int level) const {
  return std::count_if(completed.begin(), completed.end(),
                       [&](const TraversalRecord& r) { return r.level == level; });
}

std::int64_t EvasionStats::max_rounds(int level) const {
  std::int64_t best = 0;
  for (const auto& r : completed) {
    if (r.level == level) best = std::max(best, r.rounds);
  }
  return best;
}

int EvasionStats::max_detours(int level) const {
  int best = 0;
  for (const auto& r : completed) {
    if (r.level == level) best = std::max(best, r.detours);
  }
  return best;
}

std::int64_t EvasionStats::total_detours(int level) const {
  std::int64_t total = 0;
  for (const auto& r : completed) {
    if (r.level == level) total += r.detours;
  }
  return total;
}

// --- traversal -------------------------------------------------------------

Traversal::Traversal(const Hierarchy& h, int level, CellCoord cell, Direction exit)
    : h_(&h),
      level_(level),
      cell_(cell),
      exit_(exit),
      sub_(Hierarchy::subcells(level)),
      mid_((Hierarchy::subcells(level) - 1) / 2) {
  if (level < 1) throw std::invalid_argument("traversal level must be at least 1");
  if (cell.level != level) throw std::invalid_argument("traversal cell level mismatch");
}

CellCoord Traversal::to_actual(RelCell rel) const {
  std::int64_t x = 0, y = 0;
  switch (exit_) {
    case Direction::kUp: x = rel.a; y = rel.b; break;
    case Direction::kRight: x = rel.b; y = sub_ - 1 - rel.a; break;
    case Direction::kDown: x = sub_ - 1 - rel.a; y = sub_ - 1 - rel.b; break;
    case Direction::kLeft: x = sub_ - 1 - rel.b; y = rel.a; break;
  }
  return CellCoord{level_ - 1, cell_.i * sub_ + x, cell_.j * sub_ + y};
}

RelCell Traversal::to_canonical(CellCoord c) const {
  const std::int64_t x = c.i - cell_.i * sub_;
  const std::int64_t y = c.j - cell_.j * sub_;
  switch (exit_) {
    case Direction::kUp: return {x, y};
    case Direction::kRight: return {sub_ - 1 - y, x};
    case Direction::kDown: return {sub_ - 1 - x, sub_ - 1 - y};
    case Direction::kLeft: return {y, sub_ - 1 - x};
  }
  return {x, y};
}

Direction Traversal::actual_direction(RelCell step) const {
  RelCell v = step;
  switch (exit_) {
    case Direction::kUp: break;
    case Direction::kRight: v = {step.b, -step.a}; break;
    case Direction::kDown: v = {-step.a, -step.b}; break;
    case Direction::kLeft: v = {-step.b, step.a}; break;
  }
  return direction_of(v);
}

bool Traversal::safe_for(RelCell rel, std::int64_t t, const SafetyContext& ctx) const {
  return is_safe_for(to_actual(rel), t, ctx);
}

void Traversal::check_start(const GameState& s) const {
  const Coord p = *s.robber;
  const SafetyContext ctx{s.cops, *h_};
  require(cell_of(p, level_, *h_) == cell_,
          "level-" + std::to_string(level_) + " start " + str(p) + " is not in " + str(cell_));
  require(is_k_landing_square(p, level_, *h_),
          "level-" + std::to_string(level_) + " start " + str(p) + " is not a landing square");
  require(is_k_safe(p, level_, ctx),
          "level-" + std::to_string(level_) + " start " + str(p) + " is not k-safe");
  require(is_safe_for(neighbour(cell_, exit_), 2 * h_->budget(level_) + 1, ctx),
          "level-" + std::to_string(level_) + " target " + str(neighbour(cell_, exit_)) +
              " is not safe for 2*T_k+1 steps");
}

void Traversal::finish(const GameState& s, Coord arrival, EvasionStats& stats) {
  const SafetyContext ctx{s.cops, *h_};
  const std::string lvl = "level-" + std::to_string(level_);
  require(rounds_ <= h_->budget(level_), lvl + " traversal took " + std::to_string(rounds_) +
                                             " rounds, budget " +
                                             std::to_string(h_->budget(level_)));
  const std::int64_t second = rounds_ - first_leg_rounds_;
  if (level_ >= 2) {
    require(second <= 13 * h_->budget(level_ - 1),
            lvl + " second leg took " + std::to_string(second) + " rounds");
  }
  const CellCoord next = neighbour(cell_, exit_);
  require(cell_of(arrival, level_, *h_) == next, lvl + " arrival " + str(arrival) +
                                                     " is not in " + str(next));
  const auto zone = zone_subcells(level_, entry_side(exit_));
  const RelCell rel = relative_in_parent(cell_of(arrival, level_ - 1, *h_));
  require(std::find(zone.begin(), zone.end(), rel) != zone.end(),
          lvl + " arrival " + str(arrival) + " is outside the entry zone");
  require(is_k_landing_square(arrival, level_, *h_),
          lvl + " arrival " + str(arrival) + " is not a landing square");
  require(is_completely_k_safe(arrival, level_, ctx),
          lvl + " arrival " + str(arrival) + " is not completely k-safe");

  TraversalRecord rec;
  rec.level = level_;
  rec.exit = exit_;
  rec.rounds = rounds_;
  rec.first_leg_rounds = first_leg_rounds_;
  rec.second_leg_rounds = level_ >= 2 ? second : 0;
  rec.detours = detours_;
  rec.second_leg_path = second_leg_path_;
  stats.completed.push_back(rec);
  done_ = true;
}

Walk Traversal::step(const GameState& s, EvasionStats& stats) {
  require(!done_, "traversal stepped after completion");
  require(s.phase == Phase::kRobberToMove && s.robber.has_value(), "traversal outside robber turn");
  if (level_ == 1) {
    check_start(s);
    DashResult dash = base_dash(s, *h_, cell_, exit_);
    ++stats.dashes;
    stats.max_dash_length = std::max(stats.max_dash_length, walk_length(dash.walk));
    rounds_ = 1;
    finish(s, dash.walk.back(), stats);
    return std::move(dash.walk);
  }

  if (stage_ == Stage::kNotStarted) {
    check_start(s);
    stage_ = Stage::kFirstLeg;
  }
  if (!child_) {
    const RelCell here = to_canonical(cell_of(*s.robber, level_ - 1, *h_));
    const RelCell next = choose_next(s, here);
    const RelCell step{next.a - here.a, next.b - here.b};
    child_ = std::make_unique<Traversal>(*h_, level_ - 1, to_actual(here), actual_direction(step));
    target_ = next;
  }
  Walk w = child_->step(s, stats);
  ++rounds_;
  require(rounds_ <= h_->budget(level_),
          "level-" + std::to_string(level_) + " traversal exceeded its round budget");
  if (child_->done()) {
    child_.reset();
    require(to_canonical(cell_of(w.back(), level_ - 1, *h_)) == target_,
            "child traversal ended outside its target cell");
    if (stage_ == Stage::kSecondLeg && pending_.empty()) finish(s, w.back(), stats);
  }
  return w;
}

RelCell route_step(std::int64_t sub, RelCell c) {
  const std::int64_t mid = (sub - 1) / 2;
  if (c.a == mid) return RelCell{mid, c.b + 1};
  require(c.b == mid, "robber left the planned route");
  return RelCell{c.a + sign(mid - c.a), mid};
}

RelCell Traversal::choose_next(const GameState& s, RelCell here) {
  const SafetyContext ctx{s.cops, *h_};
  const std::int64_t t = h_->budget(level_ - 1);
  auto pop = [&] {
    const RelCell c = pending_.front();
    pending_.pop_front();
    return c;
  };
  if (!pending_.empty()) return pop();
  require(stage_ == Stage::kFirstLeg, "second leg ran out of planned cells");

  const bool in_top_zone = here.a == mid_ && here.b >= sub_ - 3 && here.b < sub_;
  if (in_top_zone) {
    first_leg_rounds_ = rounds_;
    require(first_leg_rounds_ <= (sub_ + 3) * t,
            "first leg took " + std::to_string(first_leg_rounds_) + " rounds");
    const auto paths = final_stretch_paths(sub_, here);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const bool all_safe = std::all_of(paths[i].begin(), paths[i].end(),
                                        [&](RelCell c) { return safe_for(c, 14 * t + 1, ctx); });
      if (all_safe) {
        second_leg_path_ = static_cast<int>(i);
        pending_ = paths[i];
        stage_ = Stage::kSecondLeg;
        return pop();
      }
    }
    throw ProofAssertion("no final-stretch path is safe for 14*T+1 steps at level " +
                         std::to_string(level_));
  }

  const RelCell ahead = route_step(sub_, here);
  if (safe_for(ahead, 2 * t + 1, ctx)) return ahead;

  require(detours_ == 0, "second detour needed in one level-" + std::to_string(level_) +
                             " traversal");
  ++detours_;
  for (int side : {+1, -1}) {
    std::deque<RelCell> ring = detour_ring(sub_, here, ahead, side);
    const bool all_safe = std::all_of(ring.begin(), ring.end(),
                                      [&](RelCell c) { return safe_for(c, 8 * t + 1, ctx); });
    if (all_safe) {
      pending_ = std::move(ring);
      return pop();
    }
  }
  throw ProofAssertion("neither detour ring is safe for 8*T+1 steps at level " +
                       std::to_string(level_));
}

std::deque<RelCell> detour_ring(std::int64_t sub, RelCell here, RelCell blocked, int side) {
  const RelCell dir{blocked.a - here.a, blocked.b - here.b};
  const RelCell left{-dir.b, dir.a};
  const RelCell first = plus(here, scaled(left, side));

  RelCell rejoin = blocked;
  do {
    rejoin = route_step(sub, rejoin);
  } while (chebyshev(rejoin, blocked) < 2);

  auto inside = [&](RelCell c) { return c.a >= 0 && c.a < sub && c.b >= 0 && c.b < sub; };
  std::map<RelCell, RelCell> parent;
  std::queue<RelCell> queue;
  queue.push(first);
  parent[first] = first;
  static constexpr RelCell kSteps[] = {{0, 1}, {-1, 0}, {1, 0}, {0, -1}};
  while (!queue.empty() && !parent.contains(rejoin)) {
    const RelCell c = queue.front();
    queue.pop();
    for (const RelCell st : kSteps) {
      const RelCell nb = plus(c, st);
      if (!inside(nb) || chebyshev(nb, blocked) < 2 || parent.contains(nb)) continue;
      parent[nb] = c;
      queue.push(nb);
    }
  }
  require(parent.contains(rejoin), "no detour ring around the blocked cell");
  std::deque<RelCell> ring;
  for (RelCell c = rejoin; c != first; c = parent[c]) ring.push_front(c);
  ring.push_front(first);
  return ring;
}

std::vector<std::deque<RelCell>> final_stretch_paths(std::int64_t sub, RelCell from) {
  const std::int64_t m = from.a, f = from.b, top = sub;
  std::vector<std::deque<RelCell>> paths;
  std::deque<RelCell> straight;
  for (std::int64_t b = f + 1; b <= top; ++b) straight.push_back({m, b});
  paths.push_back(std::move(straight));
  for (std::int64_t offset : {2, 4}) {
    const std::int64_t end_row = offset == 2 ? top : top + 2;
    for (std::int64_t s : {-1, +1}) {
      std::deque<RelCell> p;
      for (std::int64_t d = 1; d <= offset; ++d) p.push_back({m + s * d, f});
      for (std::int64_t b = f + 1; b <= end_row; ++b) p.push_back({m + s * offset, b});
      for (std::int64_t d = offset - 1; d >= 0; --d) p.push_back({m + s * d, end_row});
      paths.push_back(std::move(p));
    }
  }
  return paths;
}

void Traversal::describe(nlohmann::json& stack) const {
  stack.push_back({{"level", level_},
                   {"exit", direction_name(exit_)},
                   {"stage", stage_name(static_cast<int>(stage_))},
                   {"detours", detours_}});
  if (child_) child_->describe(stack);
}

// --- placement and loop ------------------------------------------------------

std::vector<Coord> landing_candidates(CellCoord cell, const Hierarchy& h) {
  std::vector<Coord> out;
  if (cell.level == 0) {
    out.push_back(cell_center(cell, h));
    return out;
  }
  for (ZoneSide side : {ZoneSide::kBottom, ZoneSide::kTop, ZoneSide::kLeft, ZoneSide::kRight}) {
    for (const CellCoord sub : landing_zone(cell, side)) {
      const auto inner = landing_candidates(sub, h);
      out.insert(out.end(), inner.begin(), inner.end());
    }
  }
  std::sort(out.begin(), out.end(),
            [](Coord a, Coord b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Coord place_robber_square(const GameState& s, const Hierarchy& h, int k) {
  if (k < 1 || k > h.k_max()) throw PreconditionError("level outside the parameter range");
  if (k < 62 && static_cast<std::int64_t>(s.cops.size()) >= (std::int64_t{1} << k)) {
    throw PreconditionError("at least 2^k cops: the evasion hypotheses do not hold");
  }
  if (s.spec.n < 2 * h.side(k)) throw PreconditionError("grid side below 2*N*L_k");
  const SafetyContext ctx{s.cops, h};
  for (const CellCoord cell : {CellCoord{k, 0, 0}, CellCoord{k, 0, 1}, CellCoord{k, 1, 1},
                               CellCoord{k, 1, 0}}) {
    for (const Coord c : landing_candidates(cell, h)) {
      if (!s.cop_at(c) && is_completely_k_safe(c, k, ctx)) return c;
    }
  }
  throw ProofAssertion("no completely k-safe landing square in the 2x2 array");
}

HierarchicalEvader::HierarchicalEvader(const Hierarchy& h, int k) : h_(h), k_(k) {
  if (k < 1 || k > h.k_max()) throw std::invalid_argument("evader level outside parameter range");
}

std::optional<Coord> HierarchicalEvader::place(const GameState& s, Rng&) {
  const Coord c = place_robber_square(s, h_, k_);
  diag_ = {{"leg", nullptr}, {"stack", nlohmann::json::array()}};
  return c;
}

std::optional<Walk> HierarchicalEvader::move(const GameState& s, Rng&) {
  if (!leg_) {
    const CellCoord cell = cell_of(*s.robber, k_, h_);
    Direction dir;
    if (cell == CellCoord{k_, 0, 0}) {
      dir = Direction::kUp;
    } else if (cell == CellCoord{k_, 0, 1}) {
      dir = Direction::kRight;
    } else if (cell == CellCoord{k_, 1, 1}) {
      dir = Direction::kDown;
    } else if (cell == CellCoord{k_, 1, 0}) {
      dir = Direction::kLeft;
    } else {
      throw ProofAssertion("robber left the 2x2 array");
    }
    leg_ = std::make_unique<Traversal>(h_, k_, cell, dir);
  }
  nlohmann::json stack = nlohmann::json::array();
  leg_->describe(stack);
  Walk w = leg_->step(s, stats_);
  diag_ = {{"stack", std::move(stack)}, {"legs", legs_completed_}};
  if (leg_->done()) {
    leg_.reset();
    ++legs_completed_;
  }
  return w;
}

}  // namespace fastrobber
