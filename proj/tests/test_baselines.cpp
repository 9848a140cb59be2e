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

#include <doctest.h>

#include <sstream>

#include "fastrobber/baselines.hpp"
#include "fastrobber/match.hpp"
#include "fastrobber/registry.hpp"
#include "fastrobber/trace.hpp"

using namespace fastrobber;

namespace {

GameState cops_to_move(std::int64_t n, std::int64_t speed, std::vector<Coord> cops, Coord robber) {
  return place_robber(place_cops(initial_state({n, speed}), cops), robber);
}

GameState robber_to_move(std::int64_t n, std::int64_t speed, std::vector<Coord> cops,
                         Coord robber) {
  GameState s = cops_to_move(n, speed, cops, robber);
  return apply_cop_move(s, s.cops);
}

}  // namespace

TEST_CASE("greedy pursuer closes rows first") {
  CHECK(greedy_step({1, 1}, {5, 5}) == Coord{1, 2});
  CHECK(greedy_step({1, 5}, {5, 5}) == Coord{2, 5});
  CHECK(greedy_step({7, 9}, {5, 5}) == Coord{7, 8});

  Rng rng(1);
  GreedyPursuer p;
  CHECK(p.place(initial_state({9, 1}), 2, rng) == std::vector<Coord>{{5, 5}, {5, 5}});
  CHECK(p.place(initial_state({10, 1}), 1, rng) == std::vector<Coord>{{5, 5}});

  auto s = cops_to_move(9, 1, {{4, 4}}, {4, 5});
  CHECK(p.move(s, rng) == std::vector<Coord>{{4, 5}});
  CHECK(apply_cop_move(s, p.move(s, rng)).phase == Phase::kCaptured);
}

TEST_CASE("shadow pursuer aims ahead of the robber") {
  Rng rng(1);
  ShadowPursuer p;
  auto s = initial_state({9, 2});
  p.place(s, 1, rng);
  // First turn: no history, the target is the robber itself; columns first.
  s = cops_to_move(9, 2, {{1, 1}}, {5, 5});
  CHECK(p.move(s, rng) == std::vector<Coord>{{2, 1}});
  // Robber went from (5,5) to (7,5): the target is (9,5).
  s = cops_to_move(9, 2, {{5, 5}}, {7, 5});
  CHECK(p.move(s, rng) == std::vector<Coord>{{6, 5}});
  // Extrapolation is clamped to the grid.
  s = cops_to_move(9, 2, {{9, 1}}, {9, 5});
  CHECK(p.move(s, rng) == std::vector<Coord>{{9, 2}});
  // Adjacent: capture.
  s = cops_to_move(9, 2, {{9, 4}}, {9, 5});
  CHECK(p.move(s, rng) == std::vector<Coord>{{9, 5}});
}

TEST_CASE("random cop stays on the grid") {
  Rng rng(5);
  RandomCop p;
  auto placed = p.place(initial_state({3, 1}), 4, rng);
  CHECK(placed.size() == 4);
  auto s = cops_to_move(3, 1, {{1, 1}, {3, 3}}, {2, 2});
  for (int i = 0; i < 200; ++i) CHECK_NOTHROW(apply_cop_move(s, p.move(s, rng)));
}

TEST_CASE("greedy evader") {
  Rng rng(1);
  GreedyEvader e;

  SUBCASE("placement maximizes the distance") {
    auto s = place_cops(initial_state({5, 1}), std::vector<Coord>{{1, 1}});
    CHECK(e.place(s, rng) == Coord{5, 5});
    s = place_cops(initial_state({5, 1}), std::vector<Coord>{{3, 3}});
    CHECK(e.place(s, rng) == Coord{1, 1});
  }
  SUBCASE("no improvement: stay") {
    auto s = robber_to_move(9, 2, {{1, 1}}, {9, 9});
    CHECK(e.move(s, rng) == Walk{{9, 9}});
  }
  SUBCASE("adjacent cop: full retreat") {
    auto s = robber_to_move(9, 2, {{5, 4}}, {5, 5});
    auto w = e.move(s, rng);
    REQUIRE(w);
    CHECK(walk_length(*w) == 2);
    CHECK(w->back() == Coord{3, 5});  // distance 3; smallest (x, y) among ties
    CHECK_NOTHROW(apply_robber_walk(s, *w));
  }
  SUBCASE("boxed into a corner") {
    auto s = robber_to_move(9, 3, {{2, 1}, {1, 2}}, {1, 1});
    CHECK(e.move(s, rng) == Walk{{1, 1}});
  }
}

TEST_CASE("walk_to and helpers") {
  auto s = robber_to_move(5, 6, {{2, 1}, {2, 2}}, {1, 1});
  auto w = walk_to(s, {3, 1});
  REQUIRE(w);
  CHECK(walk_length(*w) == 6);  // up and around the two cops
  CHECK_FALSE(walk_to(robber_to_move(5, 5, {{2, 1}, {2, 2}}, {1, 1}), {3, 1}));
  CHECK_NOTHROW(apply_robber_walk(s, *w));
  CHECK_FALSE(walk_to(s, {2, 1}));
  CHECK_FALSE(walk_to(s, {5, 5}));
  CHECK(distance_to_cops(s, {5, 5}) == 6);
  CHECK(distance_to_cops(robber_to_move(5, 1, {}, {1, 1}), {2, 2}) == INT64_MAX);
}

TEST_CASE("ambush script") {
  SUBCASE("empty script holds at the center") {
    std::istringstream in("");
    AmbushCops cops(parse_ambush_script(in));
    StationaryRobber robber;
    auto r = run_match({7, 1}, 2, cops, robber, 5, 1);
    CHECK(r.outcome == Outcome::kSurvived);
    CHECK(r.final_state.cops == std::vector<Coord>{{4, 4}, {4, 4}});
  }
  SUBCASE("scripted moves then hold") {
    std::istringstream in("[[1,1]]\n\n[[1,2]]\n[[1,3]]\n");
    auto script = parse_ambush_script(in);
    CHECK(script.placement == std::vector<Coord>{{1, 1}});
    CHECK(script.moves.size() == 2);
    AmbushCops cops(script);
    StationaryRobber robber;
    auto r = run_match({5, 1}, 1, cops, robber, 6, 1);
    CHECK(r.final_state.cops == std::vector<Coord>{{1, 3}});
  }
  SUBCASE("an illegal scripted move is charged to the cops") {
    std::istringstream in("[[1,1]]\n[[3,3]]\n");
    AmbushCops cops(parse_ambush_script(in));
    StationaryRobber robber;
    try {
      run_match({5, 1}, 1, cops, robber, 6, 1);
      FAIL("expected a violation");
    } catch (const StrategyViolation& v) {
      CHECK(v.side() == Side::kCops);
    }
  }
  SUBCASE("malformed line") {
    std::istringstream in("[[1,1]]\n[[1,\n");
    CHECK_THROWS_AS(parse_ambush_script(in), std::invalid_argument);
  }
}

TEST_CASE("random matches only produce legal moves") {
  Rng gen(424242);
  const std::vector<std::string> cop_names{"greedy-pursuer", "shadow-pursuer", "random-cop"};
  const std::vector<std::string> robber_names{"greedy-evader", "random-evader", "stationary"};
  int captures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(uniform_below(gen, 9));
    const std::int64_t speed = 1 + static_cast<std::int64_t>(uniform_below(gen, 4));
    const int cop_count = 1 + static_cast<int>(uniform_below(gen, 3));
    StrategyConfig cfg;
    auto cops = make_cop_strategy(cop_names[uniform_below(gen, cop_names.size())], cfg);
    auto robber = make_robber_strategy(robber_names[uniform_below(gen, robber_names.size())], cfg);
    MatchResult r;
    REQUIRE_NOTHROW(r = run_match({n, speed}, cop_count, *cops, *robber, 50, gen()));
    if (r.outcome == Outcome::kCapture) ++captures;
    CHECK(replay(r.trace, {n, speed}).valid);
  }
  CHECK(captures > 0);
}
