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

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fastrobber/baselines.hpp"
#include "fastrobber/hierarchy.hpp"
#include "fastrobber/match.hpp"

namespace fastrobber {

class UnknownStrategy : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Everything a named strategy may need; unused fields are ignored.
struct StrategyConfig {
  HierarchyParams params;                       // "hierarchical"
  std::optional<std::int64_t> sweep_half_width;  // "line-sweep"
  AmbushScript script;                          // "ambush-script"
};

std::vector<std::string> cop_strategy_names();
std::vector<std::string> robber_strategy_names();

std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& name,
                                               const StrategyConfig& cfg);
// "hierarchical" validates the parameter block and throws ParamError listing
// the violated inequalities.
std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& name,
                                                     const StrategyConfig& cfg);

}  // namespace fastrobber
