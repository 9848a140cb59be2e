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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fastrobber/coord.hpp"

namespace fastrobber {

enum class Actor { kCops, kRobber };
enum class TraceEvent { kPlacement, kMove, kCapture };

// One placement or move. `walk` holds the robber's walk in run-length form
// (turning points only) so that long dashes stay small in memory.
struct TraceRecord {
  std::int64_t round = 0;
  Actor actor = Actor::kCops;
  std::vector<Coord> cops;
  std::optional<Coord> robber;
  std::optional<std::vector<Coord>> walk;
  TraceEvent event = TraceEvent::kPlacement;
  nlohmann::json diag;  // optional strategy diagnostics; null when absent

  bool operator==(const TraceRecord&) const = default;
};

using Trace = std::vector<TraceRecord>;

class TraceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Walks with more than this many squares are written as {from,to} segments.
inline constexpr std::int64_t kInlineWalkSquares = 8;

nlohmann::json to_json(const TraceRecord& r);
TraceRecord record_from_json(const nlohmann::json& j);

std::string to_json_line(const TraceRecord& r);
std::string to_jsonl(const Trace& t);
void write_jsonl(std::ostream& os, const Trace& t);

// Parses one line per record; blank lines are skipped.
Trace read_jsonl(std::istream& is);

struct ReplayReport {
  bool valid = true;
  std::size_t records = 0;
  std::optional<std::size_t> first_bad;  // 0-based record index
  std::string reason;
};

// Re-runs every record through the move validators and checks that the
// recorded positions, rounds and events agree with the replayed game.
ReplayReport replay(const Trace& t, GridSpec spec);

// Same, but starting from raw JSON lines so that malformed records are
// reported with their position instead of aborting.
ReplayReport replay_jsonl(std::istream& is, GridSpec spec);

}  // namespace fastrobber
