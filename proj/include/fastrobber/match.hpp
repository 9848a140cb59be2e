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
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fastrobber/game.hpp"
#include "fastrobber/trace.hpp"

namespace fastrobber {

using Rng = std::mt19937_64;

// Uniform draw from [0, bound). The engine result for a given seed only
// depends on the mt19937_64 stream, which the standard pins down exactly.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

// Strategies see the full position (perfect information) and return their
// choice; the runner validates and applies it.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Coord> place(const GameState& s, int cop_count, Rng& rng) = 0;
  virtual std::vector<Coord> move(const GameState& s, Rng& rng) = 0;
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  // nullopt resigns.
  virtual std::optional<Coord> place(const GameState& s, Rng& rng) = 0;
  virtual std::optional<Walk> move(const GameState& s, Rng& rng) = 0;
  // Per-turn diagnostics written into the trace record of the last move.
  virtual nlohmann::json diagnostics() const { return nullptr; }
};

enum class Outcome { kCapture, kSurvived, kRobberResigned };

std::string_view outcome_name(Outcome o);

enum class Side { kCops, kRobber };

// A strategy produced an illegal placement or move. The match is aborted and
// the offending side is reported.
class StrategyViolation : public std::runtime_error {
 public:
  StrategyViolation(Side side, const std::string& what)
      : std::runtime_error(what), side_(side) {}
  Side side() const { return side_; }

 private:
  Side side_;
};

struct MatchOptions {
  bool record_trace = true;
  // Called after every applied placement or move.
  std::function<void(const GameState&)> observer;
};

struct MatchResult {
  Outcome outcome = Outcome::kSurvived;
  std::int64_t rounds = 0;
  GameState final_state;
  Trace trace;
};

MatchResult run_match(GridSpec spec, int cop_count, CopStrategy& cops, RobberStrategy& robber,
                      std::int64_t max_rounds, std::uint64_t seed,
                      const MatchOptions& options = {});

}  // namespace fastrobber
