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

#include "fastrobber/match.hpp"

namespace fastrobber {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kCapture: return "capture";
    case Outcome::kSurvived: return "survived";
    case Outcome::kRobberResigned: return "robber-resigned";
  }
  return "?";
}

namespace {

template <typename F>
GameState guarded(Side side, const char* what, F&& apply) {
  try {
    return apply();
  } catch (const MoveError& e) {
    throw StrategyViolation(side, std::string(side == Side::kCops ? "cops" : "robber") + " " +
                                      what + ": " + e.what());
  }
}

}  // namespace

MatchResult run_match(GridSpec spec, int cop_count, CopStrategy& cops, RobberStrategy& robber,
                      std::int64_t max_rounds, std::uint64_t seed, const MatchOptions& options) {
  Rng rng(seed);
  MatchResult result;
  GameState s = initial_state(spec);

  auto record = [&](Actor actor, TraceEvent event, std::optional<std::vector<Coord>> walk,
                    nlohmann::json diag) {
    if (options.observer) options.observer(s);
    if (!options.record_trace) return;
    TraceRecord r;
    r.round = s.round;
    r.actor = actor;
    r.cops = s.cops;
    r.robber = s.robber;
    r.walk = std::move(walk);
    r.event = event;
    r.diag = std::move(diag);
    result.trace.push_back(std::move(r));
  };
  auto finish = [&](Outcome o) {
    result.outcome = o;
    result.rounds = s.round;
    result.final_state = s;
    return result;
  };

  const std::vector<Coord> placement = cops.place(s, cop_count, rng);
  if (static_cast<int>(placement.size()) != cop_count) {
    throw StrategyViolation(Side::kCops, "cops placed " + std::to_string(placement.size()) +
                                             " cops, expected " + std::to_string(cop_count));
  }
  s = guarded(Side::kCops, "placement", [&] { return place_cops(s, placement); });
  record(Actor::kCops, TraceEvent::kPlacement, std::nullopt, nullptr);

  const std::optional<Coord> start = robber.place(s, rng);
  if (!start) return finish(Outcome::kRobberResigned);
  s = guarded(Side::kRobber, "placement", [&] { return place_robber(s, *start); });
  record(Actor::kRobber, TraceEvent::kPlacement, std::nullopt, robber.diagnostics());

  while (s.round < max_rounds) {
    const std::vector<Coord> dests = cops.move(s, rng);
    s = guarded(Side::kCops, "move", [&] { return apply_cop_move(s, dests); });
    if (s.phase == Phase::kCaptured) {
      record(Actor::kCops, TraceEvent::kCapture, std::nullopt, nullptr);
      return finish(Outcome::kCapture);
    }
    record(Actor::kCops, TraceEvent::kMove, std::nullopt, nullptr);

    const std::optional<Walk> walk = robber.move(s, rng);
    if (!walk) return finish(Outcome::kRobberResigned);
    s = guarded(Side::kRobber, "move", [&] { return apply_robber_walk(s, *walk); });
    record(Actor::kRobber, TraceEvent::kMove, compress_walk(*walk), robber.diagnostics());
  }
  return finish(Outcome::kSurvived);
}

}  // namespace fastrobber
