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

#include "fastrobber/baselines.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

#include <json.hpp>

namespace fastrobber {

namespace {

std::int64_t sgn(std::int64_t v) { return (v > 0) - (v < 0); }

Coord center(const GridSpec& g) { return Coord{(g.n + 1) / 2, (g.n + 1) / 2}; }

// Guard for strategies that scan the whole board.
constexpr std::int64_t kMaxScanSquares = 10'000'000;

Coord random_square(const GridSpec& g, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(g.n);
  const auto x = static_cast<std::int64_t>(uniform_below(rng, n)) + 1;
  const auto y = static_cast<std::int64_t>(uniform_below(rng, n)) + 1;
  return Coord{x, y};
}

}  // namespace

Coord greedy_step(Coord cop, Coord target) {
  if (cop.y != target.y) return Coord{cop.x, cop.y + sgn(target.y - cop.y)};
  return Coord{cop.x + sgn(target.x - cop.x), cop.y};
}

std::vector<Coord> GreedyPursuer::place(const GameState& s, int cop_count, Rng&) {
  return std::vector<Coord>(static_cast<std::size_t>(cop_count), center(s.spec));
}

std::vector<Coord> GreedyPursuer::move(const GameState& s, Rng&) {
  std::vector<Coord> out;
  for (const Coord c : s.cops) out.push_back(greedy_step(c, *s.robber));
  return out;
}

std::vector<Coord> ShadowPursuer::place(const GameState& s, int cop_count, Rng&) {
  prev_.reset();
  return std::vector<Coord>(static_cast<std::size_t>(cop_count), center(s.spec));
}

std::vector<Coord> ShadowPursuer::move(const GameState& s, Rng&) {
  const Coord r = *s.robber;
  const Coord p = prev_.value_or(r);
  prev_ = r;
  const Coord target{std::clamp<std::int64_t>(2 * r.x - p.x, 1, s.spec.n),
                     std::clamp<std::int64_t>(2 * r.y - p.y, 1, s.spec.n)};
  std::vector<Coord> out;
  for (const Coord c : s.cops) {
    if (adjacent(c, r)) {
      out.push_back(r);
    } else if (c.x != target.x) {
      out.push_back(Coord{c.x + sgn(target.x - c.x), c.y});
    } else if (c.y != target.y) {
      out.push_back(Coord{c.x, c.y + sgn(target.y - c.y)});
    } else {
      out.push_back(greedy_step(c, r));
    }
  }
  return out;
}

std::vector<Coord> RandomCop::place(const GameState& s, int cop_count, Rng& rng) {
  std::vector<Coord> out;
  for (int i = 0; i < cop_count; ++i) out.push_back(random_square(s.spec, rng));
  return out;
}

std::vector<Coord> RandomCop::move(const GameState& s, Rng& rng) {
  static constexpr Coord kSteps[] = {{0, 0}, {0, 1}, {0, -1}, {-1, 0}, {1, 0}};
  std::vector<Coord> out;
  for (const Coord c : s.cops) {
    std::vector<Coord> options;
    for (const Coord d : kSteps) {
      const Coord nb{c.x + d.x, c.y + d.y};
      if (s.spec.contains(nb)) options.push_back(nb);
    }
    out.push_back(options[uniform_below(rng, options.size())]);
  }
  return out;
}

AmbushScript parse_ambush_script(std::istream& in) {
  AmbushScript script;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Coord> cops;
    try {
      for (const auto& p : nlohmann::json::parse(line)) {
        cops.push_back(Coord{p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("ambush script line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
    if (first) {
      script.placement = std::move(cops);
      first = false;
    } else {
      script.moves.push_back(std::move(cops));
    }
  }
  return script;
}

std::vector<Coord> AmbushCops::place(const GameState& s, int cop_count, Rng&) {
  next_ = 0;
  if (script_.placement.empty()) {
    return std::vector<Coord>(static_cast<std::size_t>(cop_count), center(s.spec));
  }
  return script_.placement;
}

std::vector<Coord> AmbushCops::move(const GameState& s, Rng&) {
  if (next_ < script_.moves.size()) return script_.moves[next_++];
  return s.cops;
}

std::optional<Walk> walk_to(const GameState& s, Coord target) {
  const Coord start = *s.robber;
  if (target == start) return Walk{start};
  if (s.cop_at(target) || !s.spec.contains(target)) return std::nullopt;
  std::unordered_map<Coord, Coord, CoordHash> parent{{start, start}};
  std::queue<std::pair<Coord, std::int64_t>> queue;
  queue.push({start, 0});
  static constexpr Coord kSteps[] = {{0, 1}, {-1, 0}, {1, 0}, {0, -1}};
  while (!queue.empty()) {
    const auto [c, d] = queue.front();
    queue.pop();
    if (d == s.spec.speed) continue;
    for (const Coord st : kSteps) {
      const Coord nb{c.x + st.x, c.y + st.y};
      if (!s.spec.contains(nb) || s.cop_at(nb) || parent.contains(nb)) continue;
      parent.emplace(nb, c);
      if (nb == target) {
        Walk w{nb};
        for (Coord p = c; p != start; p = parent.at(p)) w.push_back(p);
        w.push_back(start);
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push({nb, d + 1});
    }
  }
  return std::nullopt;
}

std::int64_t distance_to_cops(const GameState& s, Coord p) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const Coord c : s.cops) best = std::min(best, l1_distance(c, p));
  return best;
}

Coord farthest_free_square(const GameState& s) {
  if (s.spec.n > kMaxScanSquares / s.spec.n) {
    throw std::invalid_argument("grid too large for a full-board scan");
  }
  std::optional<Coord> best;
  std::int64_t best_d = -1;
  for (std::int64_t x = 1; x <= s.spec.n; ++x) {
    for (std::int64_t y = 1; y <= s.spec.n; ++y) {
      const Coord p{x, y};
      if (s.cop_at(p)) continue;
      const std::int64_t d = distance_to_cops(s, p);
      if (d > best_d) {
        best_d = d;
        best = p;
      }
    }
  }
  if (!best) throw std::invalid_argument("no free square for the robber");
  return *best;
}

std::optional<Coord> GreedyEvader::place(const GameState& s, Rng&) {
  return farthest_free_square(s);
}

std::optional<Walk> GreedyEvader::move(const GameState& s, Rng&) {
  const Coord here = *s.robber;
  const std::int64_t stay = distance_to_cops(s, here);
  Coord best = here;
  std::int64_t best_d = stay;
  for (const Coord p : reachable_set(s)) {  // sorted, so the first maximum wins ties
    const std::int64_t d = distance_to_cops(s, p);
    if (d > best_d) {
      best_d = d;
      best = p;
    }
  }
  return walk_to(s, best);
}

std::optional<Coord> RandomEvader::place(const GameState& s, Rng& rng) {
  if (s.cops.size() >= static_cast<std::size_t>(s.spec.n * s.spec.n)) {
    throw std::invalid_argument("no free square for the robber");
  }
  for (;;) {
    const Coord p = random_square(s.spec, rng);
    if (!s.cop_at(p)) return p;
  }
}

std::optional<Walk> RandomEvader::move(const GameState& s, Rng& rng) {
  const std::vector<Coord> options = reachable_set(s);
  return walk_to(s, options[uniform_below(rng, options.size())]);
}

std::optional<Coord> StationaryRobber::place(const GameState& s, Rng&) {
  return farthest_free_square(s);
}

std::optional<Walk> StationaryRobber::move(const GameState& s, Rng&) {
  return Walk{*s.robber};
}

}  // namespace fastrobber
