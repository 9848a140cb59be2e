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
#include "fastrobber/game.hpp"
#include "fastrobber/match.hpp"
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

MoveErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const MoveError& e) {
    return e.kind();
  }
  FAIL("no MoveError thrown");
  return MoveErrorKind::kWrongPhase;
}

}  // namespace

TEST_CASE("adjacency is a shared edge") {
  CHECK(adjacent({2, 2}, {2, 3}));
  CHECK_FALSE(adjacent({2, 2}, {3, 3}));
  CHECK_FALSE(adjacent({2, 2}, {2, 2}));
}

TEST_CASE("grid spec limits") {
  CHECK_THROWS_AS(initial_state({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(initial_state({4, 0}), std::invalid_argument);
}

TEST_CASE("placement order and duplicates") {
  GameState s = initial_state({5, 2});
  CHECK(s.phase == Phase::kCopsPlacing);
  CHECK(kind_of([&] { place_robber(s, {1, 1}); }) == MoveErrorKind::kWrongPhase);
  s = place_cops(s, std::vector<Coord>{{3, 3}, {3, 3}});
  CHECK(s.phase == Phase::kRobberPlacing);
  CHECK(s.cops.size() == 2);
  CHECK(kind_of([&] { place_robber(s, {3, 3}); }) == MoveErrorKind::kThroughCop);
  CHECK(kind_of([&] { place_robber(s, {6, 1}); }) == MoveErrorKind::kOutOfBounds);
  s = place_robber(s, {1, 1});
  CHECK(s.phase == Phase::kCopsToMove);
  CHECK(s.round == 0);
}

TEST_CASE("cop moves") {
  SUBCASE("ordinary step") {
    GameState s = apply_cop_move(cops_to_move(5, 1, {{1, 1}}, {5, 5}), std::vector<Coord>{{1, 2}});
    CHECK(s.phase == Phase::kRobberToMove);
    CHECK(s.cops == std::vector<Coord>{{1, 2}});
  }
  SUBCASE("capture by co-location") {
    GameState s = apply_cop_move(cops_to_move(5, 1, {{4, 5}}, {5, 5}), std::vector<Coord>{{5, 5}});
    CHECK(s.phase == Phase::kCaptured);
  }
  SUBCASE("errors") {
    const GameState s = cops_to_move(5, 1, {{1, 1}}, {5, 5});
    CHECK(kind_of([&] { apply_cop_move(s, std::vector<Coord>{{3, 1}}); }) ==
          MoveErrorKind::kNotAdjacent);
    CHECK(kind_of([&] { apply_cop_move(s, std::vector<Coord>{{0, 1}}); }) ==
          MoveErrorKind::kOutOfBounds);
    CHECK(kind_of([&] { apply_cop_move(s, std::vector<Coord>{{1, 1}, {1, 1}}); }) ==
          MoveErrorKind::kWrongArity);
    CHECK(kind_of([&] { apply_cop_move(s, std::vector<Coord>{{2, 2}}); }) ==
          MoveErrorKind::kNotAdjacent);
    const GameState r = apply_cop_move(s, s.cops);
    CHECK(kind_of([&] { apply_cop_move(r, r.cops); }) == MoveErrorKind::kWrongPhase);
  }
}

TEST_CASE("robber walks") {
  SUBCASE("stay is legal and counts a round") {
    GameState s = robber_to_move(5, 3, {{5, 5}}, {1, 1});
    s = apply_robber_walk(s, Walk{{1, 1}});
    CHECK(s.robber == Coord{1, 1});
    CHECK(s.phase == Phase::kCopsToMove);
    CHECK(s.round == 1);
  }
  SUBCASE("through a cop") {
    const GameState s = robber_to_move(5, 3, {{1, 2}}, {1, 1});
    CHECK(kind_of([&] { apply_robber_walk(s, Walk{{1, 1}, {1, 2}, {1, 3}}); }) ==
          MoveErrorKind::kThroughCop);
  }
  SUBCASE("ending on a cop") {
    const GameState s = robber_to_move(5, 3, {{1, 3}}, {1, 1});
    CHECK(kind_of([&] { apply_robber_walk(s, Walk{{1, 1}, {1, 2}, {1, 3}}); }) ==
          MoveErrorKind::kThroughCop);
  }
  SUBCASE("too long") {
    const GameState s = robber_to_move(5, 2, {{5, 5}}, {1, 1});
    CHECK(kind_of([&] { apply_robber_walk(s, Walk{{1, 1}, {1, 2}, {1, 3}, {1, 4}}); }) ==
          MoveErrorKind::kTooLong);
  }
  SUBCASE("other errors") {
    const GameState s = robber_to_move(5, 2, {{5, 5}}, {1, 1});
    CHECK(kind_of([&] { apply_robber_walk(s, Walk{{1, 2}, {1, 3}}); }) ==
          MoveErrorKind::kWrongStart);
    CHECK(kind_of([&] { apply_robber_walk(s, Walk{}); }) == MoveErrorKind::kEmptyWalk);
    CHECK(kind_of([&] { apply_robber_walk(s, Walk{{1, 1}, {2, 2}}); }) ==
          MoveErrorKind::kNotAdjacent);
    CHECK(kind_of([&] { apply_robber_walk(s, Walk{{1, 1}, {0, 1}}); }) ==
          MoveErrorKind::kOutOfBounds);
    const GameState c = cops_to_move(5, 2, {{5, 5}}, {1, 1});
    CHECK(kind_of([&] { apply_robber_walk(c, Walk{{1, 1}}); }) == MoveErrorKind::kWrongPhase);
  }
  SUBCASE("revisiting squares is allowed") {
    const GameState s = robber_to_move(5, 3, {{5, 5}}, {1, 1});
    CHECK(apply_robber_walk(s, Walk{{1, 1}, {1, 2}, {1, 1}}).robber == Coord{1, 1});
  }
}

TEST_CASE("reachable set") {
  CHECK(reachable_set(robber_to_move(3, 1, {}, {2, 2})) ==
        std::vector<Coord>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}});
  CHECK(reachable_set(robber_to_move(3, 9, {}, {1, 1})).size() == 9);
  CHECK(reachable_set(robber_to_move(3, 2, {{1, 2}, {2, 1}}, {1, 1})) == std::vector<Coord>{{1, 1}});
  CHECK_THROWS_AS(reachable_set(cops_to_move(3, 1, {}, {2, 2})), MoveError);
}

TEST_CASE("walk helpers") {
  Walk w{{1, 1}};
  append_manhattan(w, {3, 2});
  CHECK(w == Walk{{1, 1}, {2, 1}, {3, 1}, {3, 2}});
  CHECK(compress_walk(w) == std::vector<Coord>{{1, 1}, {3, 1}, {3, 2}});
  CHECK(expand_walk(compress_walk(w)) == w);
  CHECK(compress_walk(Walk{{4, 4}}) == std::vector<Coord>{{4, 4}});
  CHECK_THROWS_AS(expand_walk(std::vector<Coord>{{1, 1}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("matches") {
  SUBCASE("stationary sides survive to the cap") {
    AmbushCops cops(AmbushScript{});
    StationaryRobber robber;
    const MatchResult r = run_match({6, 1}, 1, cops, robber, 10, 7);
    CHECK(r.outcome == Outcome::kSurvived);
    CHECK(r.rounds == 10);
    CHECK(r.trace.size() == 2 + 2 * 10);
    CHECK(replay(r.trace, {6, 1}).valid);
  }
  SUBCASE("greedy cop catches a stationary robber on the 2x2 grid") {
    GreedyPursuer cops;
    StationaryRobber robber;
    const MatchResult r = run_match({2, 1}, 1, cops, robber, 10, 0);
    CHECK(r.outcome == Outcome::kCapture);
    CHECK(r.rounds <= 2);
    CHECK(r.trace.back().event == TraceEvent::kCapture);
    CHECK(replay(r.trace, {2, 1}).valid);
  }
  SUBCASE("illegal cop move is attributed") {
    AmbushScript script;
    script.placement = {{1, 1}};
    script.moves = {{{3, 1}}};
    AmbushCops cops(script);
    StationaryRobber robber;
    try {
      run_match({6, 1}, 1, cops, robber, 10, 0);
      FAIL("expected a violation");
    } catch (const StrategyViolation& e) {
      CHECK(e.side() == Side::kCops);
    }
  }
  SUBCASE("wrong cop count") {
    GreedyPursuer cops;
    StationaryRobber robber;
    AmbushScript script;
    script.placement = {{1, 1}, {2, 2}};
    AmbushCops two(script);
    CHECK_THROWS_AS(run_match({6, 1}, 1, two, robber, 10, 0), StrategyViolation);
  }
}

TEST_CASE("trace serialization") {
  TraceRecord r;
  r.round = 3;
  r.actor = Actor::kRobber;
  r.cops = {{1, 1}, {4, 2}};
  r.robber = Coord{9, 9};
  r.event = TraceEvent::kMove;
  SUBCASE("short walks are inline squares") {
    r.walk = std::vector<Coord>{{9, 7}, {9, 9}};
    const auto j = to_json(r);
    CHECK(j["walk"].dump() == "[[9,7],[9,8],[9,9]]");
    CHECK(record_from_json(j) == r);
  }
  SUBCASE("long walks are segments") {
    r.robber = Coord{20, 9};
    r.walk = std::vector<Coord>{{9, 1}, {9, 9}, {20, 9}};
    const auto j = to_json(r);
    CHECK(j["walk"].dump() == R"([{"from":[9,1],"to":[9,9]},{"from":[9,9],"to":[20,9]}])");
    CHECK(record_from_json(j) == r);
  }
  SUBCASE("field set") {
    const auto j = to_json(r);
    for (const char* key : {"round", "actor", "cops", "robber", "event"}) CHECK(j.contains(key));
    CHECK_FALSE(j.contains("walk"));
    CHECK_FALSE(j.contains("diag"));
  }
  SUBCASE("malformed") {
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(R"({"round":0})")), TraceFormatError);
    auto j = to_json(r);
    j["walk"] = nlohmann::json::parse(R"([{"from":[1,1],"to":[2,2]}])");
    CHECK_THROWS_AS(record_from_json(j), TraceFormatError);
  }
}

TEST_CASE("replay rejects tampered traces") {
  GreedyPursuer cops;
  RandomEvader robber;
  const MatchResult m = run_match({8, 2}, 1, cops, robber, 20, 3);
  REQUIRE(replay(m.trace, {8, 2}).valid);

  SUBCASE("two-step cop move") {
    Trace t = m.trace;
    std::size_t i = 2;  // first cop move
    REQUIRE(t[i].actor == Actor::kCops);
    const Coord from = t[i - 1].cops[0];
    t[i].cops[0] = Coord{from.x + (from.x <= 6 ? 2 : -2), from.y};
    const ReplayReport rep = replay(t, {8, 2});
    CHECK_FALSE(rep.valid);
    CHECK(rep.first_bad == i);
  }
  SUBCASE("robber walk through a cop") {
    GameState s = place_cops(initial_state({8, 2}), std::vector<Coord>{{2, 1}});
    s = place_robber(s, {1, 1});
    Trace t;
    t.push_back({0, Actor::kCops, {{2, 1}}, std::nullopt, std::nullopt, TraceEvent::kPlacement, nullptr});
    t.push_back({0, Actor::kRobber, {{2, 1}}, Coord{1, 1}, std::nullopt, TraceEvent::kPlacement, nullptr});
    t.push_back({0, Actor::kCops, {{2, 1}}, Coord{1, 1}, std::nullopt, TraceEvent::kMove, nullptr});
    t.push_back({1, Actor::kRobber, {{2, 1}}, Coord{3, 1},
                 std::vector<Coord>{{1, 1}, {3, 1}}, TraceEvent::kMove, nullptr});
    const ReplayReport rep = replay(t, {8, 2});
    CHECK_FALSE(rep.valid);
    CHECK(rep.first_bad == 3);
  }
  SUBCASE("jsonl round trip") {
    std::stringstream ss;
    write_jsonl(ss, m.trace);
    std::stringstream copy(ss.str());
    CHECK(read_jsonl(ss) == m.trace);
    CHECK(replay_jsonl(copy, {8, 2}).valid);
  }
}
