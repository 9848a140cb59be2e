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

#include "fastrobber/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "fastrobber/game.hpp"

namespace fastrobber {

using nlohmann::json;

namespace {

json pair(Coord c) { return json::array({c.x, c.y}); }

Coord coord_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw TraceFormatError("coordinate must be an [x,y] integer pair");
  }
  return Coord{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

std::string_view actor_name(Actor a) { return a == Actor::kCops ? "cops" : "robber"; }

std::string_view event_name(TraceEvent e) {
  switch (e) {
    case TraceEvent::kPlacement: return "placement";
    case TraceEvent::kMove: return "move";
    case TraceEvent::kCapture: return "capture";
  }
  return "?";
}

std::int64_t corners_length(const std::vector<Coord>& corners) {
  std::int64_t len = 0;
  for (std::size_t i = 1; i < corners.size(); ++i) len += l1_distance(corners[i - 1], corners[i]);
  return len;
}

json walk_to_json(const std::vector<Coord>& corners) {
  json out = json::array();
  if (corners_length(corners) + 1 <= kInlineWalkSquares) {
    for (const Coord c : expand_walk(corners)) out.push_back(pair(c));
    return out;
  }
  for (std::size_t i = 1; i < corners.size(); ++i) {
    out.push_back(json{{"from", pair(corners[i - 1])}, {"to", pair(corners[i])}});
  }
  return out;
}

std::vector<Coord> walk_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw TraceFormatError("walk must be a non-empty array");
  if (j.front().is_object()) {
    std::vector<Coord> corners;
    for (const json& seg : j) {
      if (!seg.is_object() || !seg.contains("from") || !seg.contains("to")) {
        throw TraceFormatError("walk segment must be {from, to}");
      }
      const Coord from = coord_from(seg["from"]);
      const Coord to = coord_from(seg["to"]);
      if (from.x != to.x && from.y != to.y) {
        throw TraceFormatError("walk segment is not collinear");
      }
      if (corners.empty()) {
        corners.push_back(from);
      } else if (corners.back() != from) {
        throw TraceFormatError("walk segments do not chain");
      }
      corners.push_back(to);
    }
    return corners;
  }
  Walk squares;
  for (const json& c : j) {
    const Coord p = coord_from(c);
    if (!squares.empty() && !adjacent(squares.back(), p)) {
      throw TraceFormatError("consecutive walk squares are not adjacent");
    }
    squares.push_back(p);
  }
  return compress_walk(squares);
}

}  // namespace

json to_json(const TraceRecord& r) {
  json cops = json::array();
  for (const Coord c : r.cops) cops.push_back(pair(c));
  json j;
  j["round"] = r.round;
  j["actor"] = actor_name(r.actor);
  j["cops"] = std::move(cops);
  j["robber"] = r.robber ? pair(*r.robber) : json(nullptr);
  if (r.walk) j["walk"] = walk_to_json(*r.walk);
  j["event"] = event_name(r.event);
  if (!r.diag.is_null()) j["diag"] = r.diag;
  return j;
}

TraceRecord record_from_json(const json& j) {
  if (!j.is_object()) throw TraceFormatError("record must be a JSON object");
  for (const char* key : {"round", "actor", "cops", "robber", "event"}) {
    if (!j.contains(key)) throw TraceFormatError(std::string("missing field '") + key + "'");
  }
  TraceRecord r;
  if (!j["round"].is_number_integer()) throw TraceFormatError("round must be an integer");
  r.round = j["round"].get<std::int64_t>();
  const std::string actor = j["actor"].is_string() ? j["actor"].get<std::string>() : "";
  if (actor == "cops") {
    r.actor = Actor::kCops;
  } else if (actor == "robber") {
    r.actor = Actor::kRobber;
  } else {
    throw TraceFormatError("actor must be 'cops' or 'robber'");
  }
  if (!j["cops"].is_array()) throw TraceFormatError("cops must be an array");
  for (const json& c : j["cops"]) r.cops.push_back(coord_from(c));
  if (!j["robber"].is_null()) r.robber = coord_from(j["robber"]);
  if (j.contains("walk")) r.walk = walk_from_json(j["walk"]);
  const std::string event = j["event"].is_string() ? j["event"].get<std::string>() : "";
  if (event == "placement") {
    r.event = TraceEvent::kPlacement;
  } else if (event == "move") {
    r.event = TraceEvent::kMove;
  } else if (event == "capture") {
    r.event = TraceEvent::kCapture;
  } else {
    throw TraceFormatError("event must be placement, move or capture");
  }
  if (j.contains("diag")) r.diag = j["diag"];
  return r;
}

std::string to_json_line(const TraceRecord& r) { return to_json(r).dump(); }

std::string to_jsonl(const Trace& t) {
  std::ostringstream os;
  write_jsonl(os, t);
  return os.str();
}

void write_jsonl(std::ostream& os, const Trace& t) {
  for (const TraceRecord& r : t) os << to_json_line(r) << '\n';
}

Trace read_jsonl(std::istream& is) {
  Trace t;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    t.push_back(record_from_json(json::parse(line)));
  }
  return t;
}

namespace {

// Incremental replayer shared by both entry points.
class Replayer {
 public:
  explicit Replayer(GridSpec spec) : state_(initial_state(spec)) {}

  // Returns an empty string when the record is consistent.
  std::string step(const TraceRecord& r) {
    try {
      return step_unchecked(r);
    } catch (const std::exception& e) {
      return e.what();
    }
  }

 private:
  std::string step_unchecked(const TraceRecord& r) {
    if (state_.phase == Phase::kCaptured) return "record after capture";
    if (r.actor == Actor::kCops) {
      if (state_.phase == Phase::kCopsPlacing) {
        if (r.event != TraceEvent::kPlacement) return "expected cop placement";
        state_ = place_cops(state_, r.cops);
      } else {
        if (r.event == TraceEvent::kPlacement) return "unexpected cop placement";
        state_ = apply_cop_move(state_, r.cops);
        const bool captured = state_.phase == Phase::kCaptured;
        if (captured != (r.event == TraceEvent::kCapture)) {
          return captured ? "capture not recorded" : "capture recorded without co-location";
        }
      }
    } else {
      if (state_.phase == Phase::kRobberPlacing) {
        if (r.event != TraceEvent::kPlacement) return "expected robber placement";
        if (!r.robber) return "robber placement without a square";
        state_ = place_robber(state_, *r.robber);
      } else {
        if (r.event != TraceEvent::kMove) return "robber record must be a move";
        if (!r.walk) return "robber move without a walk";
        state_ = apply_robber_walk(state_, expand_walk(*r.walk));
      }
    }
    if (r.round != state_.round) {
      return "round " + std::to_string(r.round) + " but replay is at " +
             std::to_string(state_.round);
    }
    if (r.cops != state_.cops) return "recorded cops differ from replayed cops";
    if (r.robber != state_.robber) return "recorded robber differs from replayed robber";
    return {};
  }

  GameState state_;
};

}  // namespace

ReplayReport replay(const Trace& t, GridSpec spec) {
  ReplayReport report;
  Replayer rp(spec);
  for (std::size_t i = 0; i < t.size(); ++i) {
    ++report.records;
    if (std::string err = rp.step(t[i]); !err.empty()) {
      report.valid = false;
      report.first_bad = i;
      report.reason = std::move(err);
      return report;
    }
  }
  return report;
}

ReplayReport replay_jsonl(std::istream& is, GridSpec spec) {
  ReplayReport report;
  Replayer rp(spec);
  std::string line;
  std::size_t index = 0;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++report.records;
    std::string err;
    try {
      err = rp.step(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      report.valid = false;
      report.first_bad = index;
      report.reason = std::move(err);
      return report;
    }
    ++index;
  }
  return report;
}

}  // namespace fastrobber
