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

#include "fastrobber/registry.hpp"

#include "fastrobber/evasion.hpp"
#include "fastrobber/sweep.hpp"

namespace fastrobber {

std::vector<std::string> cop_strategy_names() {
  return {"greedy-pursuer", "shadow-pursuer", "random-cop", "ambush-script", "line-sweep"};
}

std::vector<std::string> robber_strategy_names() {
  return {"greedy-evader", "random-evader", "stationary", "hierarchical"};
}

std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& name,
                                               const StrategyConfig& cfg) {
  if (name == "greedy-pursuer") return std::make_unique<GreedyPursuer>();
  if (name == "shadow-pursuer") return std::make_unique<ShadowPursuer>();
  if (name == "random-cop") return std::make_unique<RandomCop>();
  if (name == "ambush-script") return std::make_unique<AmbushCops>(cfg.script);
  if (name == "line-sweep") return std::make_unique<LineSweepCops>(cfg.sweep_half_width);
  throw UnknownStrategy("unknown cop strategy '" + name + "'");
}

std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& name,
                                                     const StrategyConfig& cfg) {
  if (name == "greedy-evader") return std::make_unique<GreedyEvader>();
  if (name == "random-evader") return std::make_unique<RandomEvader>();
  if (name == "stationary") return std::make_unique<StationaryRobber>();
  if (name == "hierarchical") {
    const auto bad = validate_params(cfg.params);
    if (!bad.empty()) {
      std::string msg = "invalid parameters, violated:";
      for (const auto& b : bad) msg += "\n  " + b;
      throw ParamError(msg);
    }
    return std::make_unique<HierarchicalEvader>(Hierarchy(cfg.params), cfg.params.k_max);
  }
  throw UnknownStrategy("unknown robber strategy '" + name + "'");
}

}  // namespace fastrobber
