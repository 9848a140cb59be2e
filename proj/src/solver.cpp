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

#include "fastrobber/solver.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>

#include "fastrobber/baselines.hpp"
#include "fastrobber/hierarchy.hpp"

namespace fastrobber {

namespace {

constexpr std::uint16_t kInf = WinTable::kRobberWin;
constexpr std::uint32_t kCapture = 0xFFFFFFFF;
constexpr std::uint32_t kNoMove = 0xFFFFFFFE;
constexpr int kMaxSide = 8;  // squares fit one 64-bit mask
constexpr std::int64_t kSuccessorCacheLimit = 20'000'000;

using Mask = std::uint64_t;

std::int64_t saturating_binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  BigInt v = 1;
  for (std::int64_t i = 1; i <= b; ++i) v = v * (a - b + i) / i;
  return v > std::numeric_limits<std::int64_t>::max() ? std::numeric_limits<std::int64_t>::max()
                                                      : static_cast<std::int64_t>(v);
}

// Square-set geometry of an n x n board with squares indexed (y-1)*n + (x-1).
struct Board {
  std::int64_t n;
  int squares;
  Mask full, left_col, right_col;

  explicit Board(std::int64_t side) : n(side), squares(static_cast<int>(side * side)) {
    full = squares == 64 ? ~Mask{0} : (Mask{1} << squares) - 1;
    left_col = right_col = 0;
    for (std::int64_t y = 0; y < n; ++y) {
      left_col |= Mask{1} << (y * n);
      right_col |= Mask{1} << (y * n + n - 1);
    }
  }

  Mask expand(Mask m) const {
    return ((m & ~right_col) << 1) | ((m & ~left_col) >> 1) | (m << n) | (m >> n);
  }

  Mask reach(int r, Mask cops, std::int64_t speed) const {
    Mask seen = Mask{1} << r, frontier = seen;
    for (std::int64_t step = 0; step < speed && frontier; ++step) {
      frontier = expand(frontier) & full & ~cops & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  std::vector<int> moves(int sq) const {
    std::vector<int> out{sq};
    const std::int64_t x = sq % n, y = sq / n;
    if (y + 1 < n) out.push_back(sq + static_cast<int>(n));
    if (y > 0) out.push_back(sq - static_cast<int>(n));
    if (x > 0) out.push_back(sq - 1);
    if (x + 1 < n) out.push_back(sq + 1);
    return out;
  }
};

// Combinatorial number system over sorted multisets of c squares.
struct Ranker {
  int c;
  std::vector<std::vector<std::int64_t>> binom;  // binom[a][b], b <= c

  Ranker(int squares, int cops) : c(cops) {
    const int top = squares + cops;
    binom.assign(top + 1, std::vector<std::int64_t>(cops + 2, 0));
    for (int a = 0; a <= top; ++a) {
      for (int b = 0; b <= cops + 1; ++b) binom[a][b] = saturating_binom(a, b);
    }
  }

  // `sorted` must be nondecreasing.
  std::int64_t rank(const int* sorted) const {
    std::int64_t r = 0;
    for (int i = 0; i < c; ++i) r += binom[sorted[i] + i][i + 1];
    return r;
  }
};

Mask mask_of(const std::vector<int>& cfg) {
  Mask m = 0;
  for (int sq : cfg) m |= Mask{1} << sq;
  return m;
}

void enumerate_multisets(int squares, int c, std::vector<int>& cur, int from,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == c) {
    out.push_back(cur);
    return;
  }
  for (int s = from; s < squares; ++s) {
    cur.push_back(s);
    enumerate_multisets(squares, c, cur, s, out);
    cur.pop_back();
  }
}

void put_u64(std::ostream& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    const int ch = in.get();
    if (ch == EOF) throw std::runtime_error("truncated win table");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(ch)) << (8 * i);
  }
  return v;
}

constexpr char kMagic[8] = {'F', 'R', 'W', 'T', 'A', 'B', 'L', '1'};

}  // namespace

std::int64_t state_count(std::int64_t n, int cops) {
  if (n < 1 || cops < 0) return 0;
  const BigInt squares = BigInt(n) * n;
  BigInt v = 1;
  for (int i = 1; i <= cops; ++i) v = v * (squares + cops - i) / i;  // C(sq+c-1, c)
  v = v * squares * 2;
  return v > std::numeric_limits<std::int64_t>::max() ? std::numeric_limits<std::int64_t>::max()
                                                      : static_cast<std::int64_t>(v);
}

std::int64_t WinTable::rank(std::vector<Coord> cops) const {
  if (static_cast<int>(cops.size()) != cops_) throw std::invalid_argument("cop count mismatch");
  std::vector<int> idx;
  for (const Coord c : cops) {
    if (c.x < 1 || c.x > n_ || c.y < 1 || c.y > n_) throw std::invalid_argument("cop off grid");
    idx.push_back(static_cast<int>(square_index(c)));
  }
  std::sort(idx.begin(), idx.end());
  return Ranker(static_cast<int>(n_ * n_), cops_).rank(idx.data());
}

std::vector<Coord> WinTable::unrank(std::int64_t r) const {
  // Greedy decoding of the combinatorial number system, largest term first.
  const int squares = static_cast<int>(n_ * n_);
  const Ranker rk(squares, cops_);
  std::vector<Coord> out(static_cast<std::size_t>(cops_));
  for (int i = cops_ - 1; i >= 0; --i) {
    int b = i;
    while (b + 1 <= squares + i - 1 && rk.binom[b + 1][i + 1] <= r) ++b;
    r -= rk.binom[b][i + 1];
    out[static_cast<std::size_t>(i)] = square(b - i);
  }
  return out;
}

std::uint16_t WinTable::depth(const std::vector<Coord>& cops, Coord robber, Phase to_move) const {
  const std::int64_t idx = rank(cops) * n_ * n_ + square_index(robber);
  if (to_move == Phase::kCopsToMove) return cop_depth_.at(idx);
  if (to_move == Phase::kRobberToMove) return robber_depth_.at(idx);
  throw std::invalid_argument("depth needs a side to move");
}

bool WinTable::placement_wins(std::int64_t r) const {
  const std::vector<Coord> cops = unrank(r);
  const std::int64_t sq = n_ * n_;
  for (std::int64_t i = 0; i < sq; ++i) {
    if (std::find(cops.begin(), cops.end(), square(i)) != cops.end()) continue;
    if (cop_depth_[r * sq + i] == kInf) return false;
  }
  return true;
}

std::optional<std::vector<Coord>> WinTable::winning_placement() const {
  for (std::int64_t r = 0; r < placements_; ++r) {
    if (placement_wins(r)) return unrank(r);
  }
  return std::nullopt;
}

void WinTable::write_binary(std::ostream& out) const {
  out.write(kMagic, sizeof kMagic);
  for (std::int64_t v : {n_, speed_, std::int64_t{cops_}, std::int64_t{restricted_},
                         std::int64_t{iterations_}, placements_}) {
    put_u64(out, static_cast<std::uint64_t>(v));
  }
  for (const auto* table : {&cop_depth_, &robber_depth_}) {
    for (std::uint16_t d : *table) {
      out.put(static_cast<char>(d & 0xFF));
      out.put(static_cast<char>(d >> 8));
    }
  }
}

WinTable WinTable::read_binary(std::istream& in) {
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kMagic)) {
    throw std::runtime_error("not a win table");
  }
  WinTable t;
  t.n_ = static_cast<std::int64_t>(get_u64(in));
  t.speed_ = static_cast<std::int64_t>(get_u64(in));
  t.cops_ = static_cast<int>(get_u64(in));
  t.restricted_ = get_u64(in) != 0;
  t.iterations_ = static_cast<int>(get_u64(in));
  t.placements_ = static_cast<std::int64_t>(get_u64(in));
  if (t.n_ < 2 || t.n_ > kMaxSide || t.cops_ < 1 || t.placements_ != state_count(t.n_, t.cops_) / (2 * t.n_ * t.n_)) {
    throw std::runtime_error("corrupt win table header");
  }
  const auto size = static_cast<std::size_t>(t.placements_ * t.n_ * t.n_);
  for (auto* table : {&t.cop_depth_, &t.robber_depth_}) {
    table->resize(size);
    for (auto& d : *table) {
      const int lo = in.get(), hi = in.get();
      if (hi == EOF) throw std::runtime_error("truncated win table");
      d = static_cast<std::uint16_t>((hi << 8) | lo);
    }
  }
  return t;
}

nlohmann::json WinTable::summary() const {
  const std::int64_t sq = n_ * n_;
  std::int64_t cop_win_states = 0;
  for (std::uint16_t d : cop_depth_) cop_win_states += d != kInf;
  nlohmann::json per_placement = nlohmann::json::array();
  for (std::int64_t r = 0; r < placements_; ++r) per_placement.push_back(placement_wins(r));
  nlohmann::json win = nullptr;
  if (auto p = winning_placement()) {
    win = nlohmann::json::array();
    for (const Coord c : *p) win.push_back({c.x, c.y});
  }
  return {{"n", n_},
          {"R", speed_},
          {"c", cops_},
          {"restricted", restricted_},
          {"states", placements_ * sq * 2},
          {"iterations", iterations_},
          {"copWinCopsToMove", cop_win_states},
          {"winningPlacement", win},
          {"copWin", per_placement}};
}

WinTable solve(const SolverInstance& inst) {
  if (inst.n < 2 || inst.n > kMaxSide) throw std::invalid_argument("solver supports 2 <= n <= 8");
  if (inst.speed < 1) throw std::invalid_argument("speed must be positive");
  if (inst.cops < 1) throw std::invalid_argument("at least one cop");
  const std::int64_t states = state_count(inst.n, inst.cops);
  if (states > inst.budget) {
    throw BudgetExceeded("instance n=" + std::to_string(inst.n) + " c=" +
                         std::to_string(inst.cops) + " has " + std::to_string(states) +
                         " states, budget " + std::to_string(inst.budget));
  }

  const Board board(inst.n);
  const int sq = board.squares;
  const int c = inst.cops;
  const Ranker ranker(sq, c);

  std::vector<std::vector<int>> configs;
  {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    enumerate_multisets(sq, c, cur, 0, all);
    configs.resize(all.size());
    for (auto& cfg : all) configs[static_cast<std::size_t>(ranker.rank(cfg.data()))] = cfg;
  }
  const auto P = static_cast<std::int64_t>(configs.size());
  std::vector<Mask> masks(configs.size());
  for (std::int64_t p = 0; p < P; ++p) masks[p] = mask_of(configs[p]);

  WinTable t;
  t.n_ = inst.n;
  t.speed_ = inst.speed;
  t.cops_ = c;
  t.restricted_ = static_cast<bool>(inst.policy);
  t.placements_ = P;
  t.cop_depth_.assign(static_cast<std::size_t>(P * sq), kInf);
  t.robber_depth_.assign(static_cast<std::size_t>(P * sq), kInf);

  std::vector<std::vector<int>> moves(sq);
  for (int s = 0; s < sq; ++s) moves[s] = board.moves(s);

  auto successors = [&](std::int64_t p) {
    std::vector<std::uint32_t> out;
    std::vector<int> cur(static_cast<std::size_t>(c)), sorted(static_cast<std::size_t>(c));
    auto rec = [&](auto&& self, int i) -> void {
      if (i == c) {
        sorted = cur;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(static_cast<std::uint32_t>(ranker.rank(sorted.data())));
        return;
      }
      for (int m : moves[configs[p][i]]) {
        cur[i] = m;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  // Terminal and one-move captures.
  std::vector<std::uint32_t> policy_next;
  if (inst.policy) policy_next.assign(static_cast<std::size_t>(P * sq), kNoMove);
  for (std::int64_t p = 0; p < P; ++p) {
    std::vector<Coord> coords;
    for (int s : configs[p]) coords.push_back(t.square(s));
    for (int r = 0; r < sq; ++r) {
      const std::int64_t idx = p * sq + r;
      const Mask rbit = Mask{1} << r;
      if (masks[p] & rbit) {
        t.cop_depth_[idx] = 0;
        t.robber_depth_[idx] = 0;
        continue;
      }
      if (!inst.policy) {
        if (masks[p] & board.expand(rbit)) t.cop_depth_[idx] = 1;
        continue;
      }
      GameState s;
      s.spec = GridSpec{inst.n, inst.speed};
      s.cops = coords;
      s.robber = t.square(r);
      s.phase = Phase::kCopsToMove;
      std::vector<Coord> dests;
      try {
        dests = inst.policy(s);
        apply_cop_move(s, dests);
      } catch (const MoveError& e) {
        throw std::invalid_argument(std::string("policy made an illegal move: ") + e.what());
      } catch (const std::exception&) {
        continue;  // the policy does not apply here; the robber keeps this position
      }
      if (std::find(dests.begin(), dests.end(), t.square(r)) != dests.end()) {
        policy_next[idx] = kCapture;
        t.cop_depth_[idx] = 1;
      } else {
        policy_next[idx] = static_cast<std::uint32_t>(t.rank(dests));
      }
    }
  }

  const bool cache = !inst.policy && [&] {
    std::int64_t per = 1;
    for (int i = 0; i < c && per <= kSuccessorCacheLimit; ++i) per *= 5;
    return per <= kSuccessorCacheLimit / std::max<std::int64_t>(P, 1);
  }();
  std::vector<std::vector<std::uint32_t>> succ_cache;
  if (cache) {
    succ_cache.resize(configs.size());
    for (std::int64_t p = 0; p < P; ++p) succ_cache[p] = successors(p);
  }

  auto relax = [](std::uint16_t& slot, std::uint32_t v) {
    if (v < slot) {
      slot = static_cast<std::uint16_t>(v);
      return true;
    }
    return false;
  };

  for (;;) {
    ++t.iterations_;
    bool changed = false;
    for (std::int64_t p = 0; p < P; ++p) {
      std::vector<std::uint32_t> fresh;
      if (!inst.policy && !cache) fresh = successors(p);
      const auto& succ = cache ? succ_cache[p] : fresh;
      for (int r = 0; r < sq; ++r) {
        const std::int64_t idx = p * sq + r;
        if (t.cop_depth_[idx] <= 1) continue;
        std::uint32_t best = kInf;
        if (inst.policy) {
          if (policy_next[idx] == kNoMove) continue;
          best = t.robber_depth_[policy_next[idx] * sq + r];
        } else {
          for (std::uint32_t s : succ) best = std::min<std::uint32_t>(best, t.robber_depth_[s * sq + r]);
        }
        if (best == kInf) continue;
        if (best + 1 >= kInf) throw std::overflow_error("capture depth exceeds the table range");
        changed |= relax(t.cop_depth_[idx], best + 1);
      }
    }
    for (std::int64_t p = 0; p < P; ++p) {
      for (int r = 0; r < sq; ++r) {
        const std::int64_t idx = p * sq + r;
        if (masks[p] & (Mask{1} << r)) continue;
        Mask reach = board.reach(r, masks[p], inst.speed);
        std::uint32_t worst = 0;
        while (reach && worst != kInf) {
          const int to = __builtin_ctzll(reach);
          reach &= reach - 1;
          worst = std::max<std::uint32_t>(worst, t.cop_depth_[p * sq + to]);
        }
        changed |= relax(t.robber_depth_[idx], worst);
      }
    }
    if (!changed) break;
  }
  return t;
}

std::optional<int> cop_number(std::int64_t n, std::int64_t speed, int max_cops,
                              std::int64_t budget) {
  for (int c = 1; c <= max_cops; ++c) {
    const WinTable t = solve(SolverInstance{n, speed, c, budget, {}});
    if (t.winning_placement()) return c;
  }
  return std::nullopt;
}

nlohmann::json StrategyReport::to_json() const {
  nlohmann::json j = {{"applicable", applicable}};
  if (!applicable) {
    j["reason"] = reason;
    return j;
  }
  j["captured"] = captured;
  j["rounds"] = rounds;
  j["regionPreserved"] = region_preserved;
  if (!reason.empty()) j["note"] = reason;
  return j;
}

namespace {

std::vector<Coord> sorted_cops(std::vector<Coord> cops) {
  std::sort(cops.begin(), cops.end(),
            [](Coord a, Coord b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
  return cops;
}

}  // namespace

StrategyReport verify_cop_policy(const WinTable& table, const std::vector<Coord>& placement,
                                 const CopPolicy& policy, std::int64_t max_rounds) {
  if (!table.restricted()) throw std::invalid_argument("table was not solved for a policy");
  if (static_cast<int>(placement.size()) != table.cops()) {
    throw std::invalid_argument("placement does not match the table's cop count");
  }
  StrategyReport rep;
  const GridSpec spec{table.n(), table.speed()};
  GameState s = place_cops(initial_state(spec), sorted_cops(placement));
  rep.region_preserved = table.placement_wins(table.rank(s.cops));

  // The robber starts where capture takes longest.
  std::optional<Coord> start;
  int best = -1;
  for (std::int64_t i = 0; i < table.n() * table.n(); ++i) {
    const Coord p = table.square(i);
    if (s.cop_at(p)) continue;
    const int d = table.depth(s.cops, p, Phase::kCopsToMove);
    if (d > best) {
      best = d;
      start = p;
    }
  }
  if (!start) throw std::invalid_argument("no free square for the robber");
  s = place_robber(s, *start);

  while (s.round < max_rounds) {
    s.cops = sorted_cops(s.cops);
    s = apply_cop_move(s, policy(s));
    if (s.phase == Phase::kCaptured) {
      rep.captured = true;
      break;
    }
    Coord to = *s.robber;
    int worst = -1;
    for (const Coord p : reachable_set(s)) {
      const int d = table.depth(s.cops, p, Phase::kCopsToMove);
      if (d > worst) {
        worst = d;
        to = p;
      }
    }
    s = apply_robber_walk(s, *walk_to(s, to));
  }
  rep.rounds = s.round;
  return rep;
}

StrategyReport verify_robber_strategy(const WinTable& table, RobberStrategy& robber,
                                      std::int64_t max_rounds, std::uint64_t seed) {
  if (table.restricted()) throw std::invalid_argument("optimal cops need an unrestricted table");
  StrategyReport rep;
  const GridSpec spec{table.n(), table.speed()};
  const std::int64_t sq = table.n() * table.n();

  // Cop placement: a winning one if it exists, else the one leaving the
  // fewest winning robber starts.
  std::vector<Coord> placement;
  std::int64_t fewest = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t r = 0; r < table.placement_count() && fewest > 0; ++r) {
    const std::vector<Coord> cops = table.unrank(r);
    std::int64_t escapes = 0;
    for (std::int64_t i = 0; i < sq; ++i) {
      const Coord p = table.square(i);
      if (std::find(cops.begin(), cops.end(), p) == cops.end() &&
          !table.cop_win(cops, p, Phase::kCopsToMove)) {
        ++escapes;
      }
    }
    if (escapes < fewest) {
      fewest = escapes;
      placement = cops;
    }
  }

  Rng rng(seed);
  GameState s = place_cops(initial_state(spec), placement);
  std::optional<Coord> start;
  try {
    start = robber.place(s, rng);
  } catch (const PreconditionError& e) {
    rep.applicable = false;
    rep.reason = e.what();
    return rep;
  }
  if (!start) {
    rep.reason = "robber resigned";
    return rep;
  }
  s = place_robber(s, *start);

  while (s.round < max_rounds) {
    // Cops: capture if possible, else the move with the smallest depth.
    // Ties (in particular among robber-win positions) go to the move that
    // brings the cops closest in total.
    std::vector<Coord> best = s.cops, cur = s.cops;
    std::pair<std::uint32_t, std::int64_t> best_key{0x10000, 0};
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == cur.size()) {
        const bool capture = std::find(cur.begin(), cur.end(), *s.robber) != cur.end();
        const std::uint32_t d = capture ? 0 : table.depth(cur, *s.robber, Phase::kRobberToMove);
        std::int64_t spread = 0;
        for (const Coord c : cur) spread += l1_distance(c, *s.robber);
        if (std::pair{d, spread} < best_key) {
          best_key = {d, spread};
          best = cur;
        }
        return;
      }
      static constexpr Coord kSteps[] = {{0, 0}, {0, 1}, {0, -1}, {-1, 0}, {1, 0}};
      for (const Coord st : kSteps) {
        const Coord nb{s.cops[i].x + st.x, s.cops[i].y + st.y};
        if (!spec.contains(nb)) continue;
        cur[i] = nb;
        self(self, i + 1);
      }
      cur[i] = s.cops[i];
    };
    rec(rec, 0);
    s = apply_cop_move(s, best);
    if (s.phase == Phase::kCaptured) {
      rep.captured = true;
      break;
    }
    const bool winning = !table.cop_win(s.cops, *s.robber, Phase::kRobberToMove);
    const std::optional<Walk> walk = robber.move(s, rng);
    if (!walk) {
      rep.reason = "robber resigned";
      break;
    }
    s = apply_robber_walk(s, *walk);
    if (winning && table.cop_win(s.cops, *s.robber, Phase::kCopsToMove)) {
      rep.region_preserved = false;
    }
  }
  rep.rounds = s.round;
  return rep;
}

}  // namespace fastrobber
