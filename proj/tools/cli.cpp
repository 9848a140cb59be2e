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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include "fastrobber/evasion.hpp"
#include "fastrobber/hierarchy.hpp"
#include "fastrobber/match.hpp"
#include "fastrobber/registry.hpp"
#include "fastrobber/solver.hpp"
#include "fastrobber/sweep.hpp"
#include "fastrobber/trace.hpp"

namespace fastrobber::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt big(const std::string& text, const std::string& what) {
  try {
    return parse_exact_integer(text);
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::int64_t i64(const std::string& text, const std::string& what) {
  const BigInt v = big(text, what);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw UsageError(what + " is out of range");
  }
  return v.convert_to<std::int64_t>();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --params FILE plus per-key overrides.
struct ParamFlags {
  std::string file, C, N, R, k, mode;
  bool canonical = false;

  void add(CLI::App* app) {
    app->add_option("--params", file, "parameter block file (key = value)");
    app->add_flag("--canonical", canonical, "start from C=40, N=1e20, R=1e25, canonical mode");
    app->add_option("--C", C, "hierarchy constant C");
    app->add_option("--N", N, "base cell side N");
    app->add_option("--R", R, "robber speed used by the hierarchy");
    app->add_option("--k", k, "hierarchy level k");
    app->add_option("--mode", mode, "canonical | relaxed");
  }

  HierarchyParams resolve() const {
    HierarchyParams p;
    if (canonical) {
      p.C = 40;
      p.N = BigInt("100000000000000000000");
      p.R = BigInt("10000000000000000000000000");
      p.mode = ParamMode::kCanonical;
    }
    if (!file.empty()) p = parse_params(slurp(file));
    if (!C.empty()) p.C = big(C, "--C");
    if (!N.empty()) p.N = big(N, "--N");
    if (!R.empty()) p.R = big(R, "--R");
    if (!k.empty()) p.k_max = static_cast<int>(i64(k, "--k"));
    if (!mode.empty()) {
      if (mode == "canonical") {
        p.mode = ParamMode::kCanonical;
      } else if (mode == "relaxed") {
        p.mode = ParamMode::kRelaxed;
      } else {
        throw UsageError("--mode must be canonical or relaxed");
      }
    }
    return p;
  }
};

std::string mode_name(ParamMode m) { return m == ParamMode::kCanonical ? "canonical" : "relaxed"; }

json params_json(const HierarchyParams& p) {
  return {{"C", p.C.str()}, {"N", p.N.str()}, {"R", p.R.str()}, {"k", p.k_max},
          {"mode", mode_name(p.mode)}};
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::kCapture: return kOk;
    case Outcome::kSurvived: return kSurvived;
    case Outcome::kRobberResigned: return kResigned;
  }
  return kError;
}

// --- matches ---------------------------------------------------------------

struct MatchJob {
  GridSpec spec;
  int cop_count = 1;
  std::string cop_name, robber_name;
  StrategyConfig cfg;
  std::int64_t rounds = 0;
  std::uint64_t seed = 0;
  std::string trace_path;
};

struct MatchSummary {
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::kSurvived;
  std::int64_t rounds = 0;
  json extra = json::object();
  std::string error;  // non-empty when the match aborted
};

json evasion_json(const HierarchicalEvader& ev) {
  const EvasionStats& st = ev.stats();
  json levels = json::array();
  int top = 0;
  for (const auto& r : st.completed) top = std::max(top, r.level);
  for (int lvl = 1; lvl <= top; ++lvl) {
    levels.push_back({{"level", lvl},
                      {"traversals", st.count(lvl)},
                      {"maxRounds", st.max_rounds(lvl)},
                      {"maxDetours", st.max_detours(lvl)},
                      {"detours", st.total_detours(lvl)}});
  }
  return {{"legs", ev.legs_completed()},
          {"dashes", st.dashes},
          {"maxDashLength", st.max_dash_length},
          {"levels", levels}};
}

json sweep_json(const LineSweepCops& cops) {
  const SweepInvariants& inv = cops.invariants();
  return {{"descended", inv.descended},
          {"robberNotBelow", inv.robber_not_below},
          {"crossingWithoutDescent", inv.crossing_without_descent},
          {"rises", inv.rises}};
}

MatchSummary run_job(const MatchJob& job) {
  MatchSummary sum;
  sum.seed = job.seed;
  try {
    auto cops = make_cop_strategy(job.cop_name, job.cfg);
    auto robber = make_robber_strategy(job.robber_name, job.cfg);
    MatchOptions opt;
    opt.record_trace = !job.trace_path.empty();
    const MatchResult res =
        run_match(job.spec, job.cop_count, *cops, *robber, job.rounds, job.seed, opt);
    sum.outcome = res.outcome;
    sum.rounds = res.rounds;
    if (const auto* ev = dynamic_cast<const HierarchicalEvader*>(robber.get())) {
      sum.extra["evasion"] = evasion_json(*ev);
    }
    if (const auto* sw = dynamic_cast<const LineSweepCops*>(cops.get())) {
      sum.extra["sweep"] = sweep_json(*sw);
    }
    if (!job.trace_path.empty()) {
      std::ofstream out(job.trace_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + job.trace_path);
      write_jsonl(out, res.trace);
    }
  } catch (const StrategyViolation& e) {
    sum.error = std::string(e.side() == Side::kCops ? "cop" : "robber") +
                " strategy violated the rules: " + e.what();
  } catch (const ProofAssertion& e) {
    sum.error = std::string("evasion assertion failed: ") + e.what();
  } catch (const std::exception& e) {
    sum.error = e.what();
  }
  return sum;
}

std::string trace_path_for(const std::string& base, std::uint64_t seed, bool many) {
  if (base.empty() || !many) return base;
  const std::filesystem::path p(base);
  return (p.parent_path() / (p.stem().string() + "-" + std::to_string(seed) +
                             p.extension().string()))
      .string();
}

std::vector<MatchSummary> run_jobs(const std::vector<MatchJob>& jobs, int parallel) {
  std::vector<MatchSummary> out(jobs.size());
  const std::size_t width = static_cast<std::size_t>(std::max(parallel, 1));
  for (std::size_t begin = 0; begin < jobs.size(); begin += width) {
    const std::size_t end = std::min(jobs.size(), begin + width);
    std::vector<std::future<MatchSummary>> running;
    for (std::size_t i = begin; i < end; ++i) {
      running.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                   run_job, std::cref(jobs[i])));
    }
    for (std::size_t i = begin; i < end; ++i) out[i] = running[i - begin].get();
  }
  return out;
}

int report_matches(const std::vector<MatchJob>& jobs, const std::vector<MatchSummary>& sums,
                   bool as_json, std::ostream& out, std::ostream& err) {
  bool failed = false;
  json arr = json::array();
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const auto& s = sums[i];
    if (!s.error.empty()) {
      failed = true;
      err << "error (seed " << s.seed << "): " << s.error << "\n";
    }
    json j = {{"seed", s.seed},
              {"n", jobs[i].spec.n},
              {"R", jobs[i].spec.speed},
              {"cops", jobs[i].cop_count},
              {"copStrategy", jobs[i].cop_name},
              {"robberStrategy", jobs[i].robber_name}};
    if (s.error.empty()) {
      j["outcome"] = std::string(outcome_name(s.outcome));
      j["rounds"] = s.rounds;
    } else {
      j["error"] = s.error;
    }
    if (!jobs[i].trace_path.empty()) j["trace"] = jobs[i].trace_path;
    j.update(s.extra);
    arr.push_back(j);
    if (!as_json && s.error.empty()) {
      out << "seed " << s.seed << ": " << outcome_name(s.outcome) << " after " << s.rounds
          << " rounds\n";
      if (s.extra.contains("evasion")) {
        for (const auto& l : s.extra["evasion"]["levels"]) {
          out << "  level " << l["level"] << ": " << l["traversals"] << " traversals, max "
              << l["maxRounds"] << " rounds, " << l["detours"] << " detours\n";
        }
      }
      if (s.extra.contains("sweep")) {
        const auto& sw = s.extra["sweep"];
        out << "  sweep invariant violations: "
            << sw["robberNotBelow"].get<std::int64_t>() +
                   sw["crossingWithoutDescent"].get<std::int64_t>() + sw["rises"].get<std::int64_t>()
            << "\n";
      }
    }
  }
  if (as_json) out << (arr.size() == 1 ? arr[0] : arr).dump() << "\n";
  if (failed) return kError;
  return sums.size() == 1 ? outcome_code(sums[0].outcome) : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and a fast robber on square grids"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "configuration file; command-line flags take precedence");
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "exact cop number on a small grid");
  std::string s_n, s_speed = "1", s_max = "3", s_cops, s_budget = "1e8", s_rounds = "1000",
                   s_half, s_seed = "0";
  std::string s_table, s_summary, s_verify;
  solve_cmd->add_option("--n", s_n, "grid side")->required();
  solve_cmd->add_option("--speed", s_speed, "robber speed R");
  solve_cmd->add_option("--max-cops", s_max, "largest cop count to try");
  solve_cmd->add_option("--cops", s_cops, "solve one cop count instead of searching");
  solve_cmd->add_option("--budget", s_budget, "maximum number of state encodings");
  solve_cmd->add_option("--table-out", s_table, "write the binary win table (with --cops)");
  solve_cmd->add_option("--summary-out", s_summary, "write the JSON summary (with --cops)");
  solve_cmd->add_option("--verify", s_verify, "play a strategy against the table");
  solve_cmd->add_option("--half-width", s_half, "line-sweep half-width override");
  solve_cmd->add_option("--rounds", s_rounds, "play-out cap for --verify");
  solve_cmd->add_option("--seed", s_seed, "seed for --verify");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "play matches between named strategies");
  std::string m_n, m_speed, m_copn, m_rounds = "1000", m_seed = "1", m_matches = "1",
                                     m_parallel = "1", m_half;
  std::string m_cops = "greedy-pursuer", m_robber = "hierarchical", m_trace, m_script;
  ParamFlags m_params;
  sim_cmd->add_option("--n", m_n, "grid side")->required();
  sim_cmd->add_option("--speed", m_speed, "robber speed (default: the hierarchy's R)");
  sim_cmd->add_option("--cops", m_cops, "cop strategy");
  sim_cmd->add_option("--robber", m_robber, "robber strategy");
  sim_cmd->add_option("--cop-count", m_copn, "number of cops");
  sim_cmd->add_option("--rounds", m_rounds, "round cap");
  sim_cmd->add_option("--seed", m_seed, "first seed");
  sim_cmd->add_option("--matches", m_matches, "number of matches (seeds seed, seed+1, ...)");
  sim_cmd->add_option("--parallel", m_parallel, "matches run at once");
  sim_cmd->add_option("--trace", m_trace, "JSON-lines trace output");
  sim_cmd->add_option("--script", m_script, "ambush-script file");
  sim_cmd->add_option("--half-width", m_half, "line-sweep half-width override");
  m_params.add(sim_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "line-sweep cops against a robber");
  std::string w_n, w_speed = "2", w_rounds, w_seed = "1", w_matches = "1", w_parallel = "1",
                   w_half, w_robber = "greedy-evader", w_trace;
  sweep_cmd->add_option("--n", w_n, "grid side")->required();
  sweep_cmd->add_option("--speed", w_speed, "robber speed");
  sweep_cmd->add_option("--robber", w_robber, "robber strategy");
  sweep_cmd->add_option("--rounds", w_rounds, "round cap (default 10*n^2)");
  sweep_cmd->add_option("--seed", w_seed, "first seed");
  sweep_cmd->add_option("--matches", w_matches, "number of matches");
  sweep_cmd->add_option("--parallel", w_parallel, "matches run at once");
  sweep_cmd->add_option("--half-width", w_half, "half-width override");
  sweep_cmd->add_option("--trace", w_trace, "JSON-lines trace output");

  // validate-params
  auto* val_cmd = app.add_subcommand("validate-params", "check a hierarchy parameter block");
  ParamFlags v_params;
  v_params.add(val_cmd);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "cop-number bounds implied for a grid");
  std::string b_n, b_speed;
  ParamFlags b_params;
  bounds_cmd->add_option("--n", b_n, "grid side")->required();
  bounds_cmd->add_option("--speed", b_speed, "robber speed for the line-sweep count");
  b_params.add(bounds_cmd);

  // replay
  auto* replay_cmd = app.add_subcommand("replay", "validate a trace file");
  std::string r_trace, r_n, r_speed;
  replay_cmd->add_option("trace", r_trace, "trace file")->required();
  replay_cmd->add_option("--n", r_n, "grid side")->required();
  replay_cmd->add_option("--speed", r_speed, "robber speed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const std::int64_t n = i64(s_n, "--n");
      const std::int64_t speed = i64(s_speed, "--speed");
      const std::int64_t budget = i64(s_budget, "--budget");
      if (s_verify.empty() && s_cops.empty()) {
        const int max_cops = static_cast<int>(i64(s_max, "--max-cops"));
        const std::optional<int> c = cop_number(n, speed, max_cops, budget);
        if (as_json) {
          out << json{{"n", n}, {"R", speed}, {"maxCops", max_cops},
                      {"copNumber", c ? json(*c) : json(nullptr)}}
                     .dump()
              << "\n";
        } else if (c) {
          out << "f_" << speed << "(" << n << ") = " << *c << "\n";
        } else {
          out << "f_" << speed << "(" << n << ") > " << max_cops << "\n";
        }
        return kOk;
      }

      SolverInstance inst{n, speed, 1, budget, {}};
      std::vector<Coord> sweep_cops;
      if (s_verify == "line-sweep") {
        const std::int64_t L = s_half.empty() ? sweep_half_width(n, speed) : i64(s_half, "--half-width");
        sweep_cops = sweep_place(n, L);
        inst.cops = static_cast<int>(sweep_cops.size());
        inst.policy = [](const GameState& s) { return sweep_move(s); };
      } else {
        if (s_cops.empty()) throw UsageError("--verify with a robber strategy needs --cops");
        inst.cops = static_cast<int>(i64(s_cops, "--cops"));
      }
      if (!s_cops.empty() && i64(s_cops, "--cops") != inst.cops) {
        throw UsageError("--cops does not match the line-sweep cop count");
      }
      const WinTable table = solve(inst);
      if (!s_table.empty()) {
        std::ofstream f(s_table, std::ios::binary);
        table.write_binary(f);
        if (!f) throw std::runtime_error("cannot write " + s_table);
      }
      if (!s_summary.empty()) {
        std::ofstream f(s_summary);
        f << table.summary().dump() << "\n";
        if (!f) throw std::runtime_error("cannot write " + s_summary);
      }
      json result = {{"n", n}, {"R", speed}, {"c", inst.cops},
                     {"copsWin", table.winning_placement().has_value()},
                     {"iterations", table.iterations()}};
      if (!s_verify.empty()) {
        StrategyReport rep;
        const std::int64_t rounds = i64(s_rounds, "--rounds");
        if (s_verify == "line-sweep") {
          rep = verify_cop_policy(table, sweep_cops, inst.policy, rounds);
        } else {
          StrategyConfig cfg;
          auto robber = make_robber_strategy(s_verify, cfg);
          rep = verify_robber_strategy(table, *robber, rounds,
                                       static_cast<std::uint64_t>(i64(s_seed, "--seed")));
        }
        result["verify"] = rep.to_json();
        result["verify"]["strategy"] = s_verify;
      }
      if (as_json) {
        out << result.dump() << "\n";
      } else {
        out << "n=" << n << " R=" << speed << " c=" << inst.cops << ": "
            << (result["copsWin"].get<bool>() ? "cops win" : "robber wins") << "\n";
        if (result.contains("verify")) {
          const auto& v = result["verify"];
          if (!v["applicable"].get<bool>()) {
            out << s_verify << ": not applicable (" << v["reason"].get<std::string>() << ")\n";
          } else {
            out << s_verify << ": " << (v["captured"].get<bool>() ? "capture" : "no capture")
                << " after " << v["rounds"] << " rounds, winning region "
                << (v["regionPreserved"].get<bool>() ? "preserved" : "not preserved") << "\n";
          }
        }
      }
      return kOk;
    }

    if (sim_cmd->parsed() || sweep_cmd->parsed()) {
      const bool sweep = sweep_cmd->parsed();
      MatchJob base;
      std::int64_t matches = 1;
      int parallel = 1;
      std::uint64_t seed0 = 1;
      std::string trace;
      if (sweep) {
        base.spec = GridSpec{i64(w_n, "--n"), i64(w_speed, "--speed")};
        base.cop_name = "line-sweep";
        base.robber_name = w_robber;
        if (!w_half.empty()) base.cfg.sweep_half_width = i64(w_half, "--half-width");
        const std::int64_t L =
            base.cfg.sweep_half_width.value_or(sweep_half_width(base.spec.n, base.spec.speed));
        base.cop_count = static_cast<int>(2 * L + 1);
        base.rounds = w_rounds.empty() ? 10 * base.spec.n * base.spec.n : i64(w_rounds, "--rounds");
        matches = i64(w_matches, "--matches");
        parallel = static_cast<int>(i64(w_parallel, "--parallel"));
        seed0 = static_cast<std::uint64_t>(i64(w_seed, "--seed"));
        trace = w_trace;
      } else {
        base.cfg.params = m_params.resolve();
        const std::int64_t n = i64(m_n, "--n");
        std::int64_t speed = 1;
        if (!m_speed.empty()) {
          speed = i64(m_speed, "--speed");
        } else if (m_robber == "hierarchical") {
          speed = static_cast<std::int64_t>(base.cfg.params.R);
        }
        base.spec = GridSpec{n, speed};
        base.cop_name = m_cops;
        base.robber_name = m_robber;
        if (!m_half.empty()) base.cfg.sweep_half_width = i64(m_half, "--half-width");
        if (!m_script.empty()) {
          std::ifstream in(m_script);
          if (!in) throw std::runtime_error("cannot read " + m_script);
          base.cfg.script = parse_ambush_script(in);
        }
        if (!m_copn.empty()) {
          base.cop_count = static_cast<int>(i64(m_copn, "--cop-count"));
        } else if (m_cops == "line-sweep") {
          base.cop_count = static_cast<int>(
              2 * base.cfg.sweep_half_width.value_or(sweep_half_width(n, speed)) + 1);
        } else if (m_cops == "ambush-script" && !base.cfg.script.placement.empty()) {
          base.cop_count = static_cast<int>(base.cfg.script.placement.size());
        }
        base.rounds = i64(m_rounds, "--rounds");
        matches = i64(m_matches, "--matches");
        parallel = static_cast<int>(i64(m_parallel, "--parallel"));
        seed0 = static_cast<std::uint64_t>(i64(m_seed, "--seed"));
        trace = m_trace;
        // Fail fast on unknown names and invalid parameter blocks.
        make_cop_strategy(base.cop_name, base.cfg);
        make_robber_strategy(base.robber_name, base.cfg);
      }
      if (matches < 1) throw UsageError("--matches must be positive");
      if (base.spec.n < 2 || base.spec.speed < 1) throw UsageError("need n >= 2 and speed >= 1");
      std::vector<MatchJob> jobs;
      for (std::int64_t i = 0; i < matches; ++i) {
        MatchJob j = base;
        j.seed = seed0 + static_cast<std::uint64_t>(i);
        j.trace_path = trace_path_for(trace, j.seed, matches > 1);
        jobs.push_back(std::move(j));
      }
      return report_matches(jobs, run_jobs(jobs, parallel), as_json, out, err);
    }

    if (val_cmd->parsed()) {
      const HierarchyParams p = v_params.resolve();
      const auto bad = validate_params(p);
      if (as_json) {
        out << json{{"params", params_json(p)}, {"valid", bad.empty()}, {"violated", bad}}.dump()
            << "\n";
      } else {
        out << format_params(p);
        if (bad.empty()) {
          out << "valid\n";
        } else {
          out << "invalid; violated:\n";
          for (const auto& b : bad) out << "  " << b << "\n";
        }
      }
      return bad.empty() ? kOk : kError;
    }

    if (bounds_cmd->parsed()) {
      const BigInt n = big(b_n, "--n");
      if (n < 2) throw UsageError("--n must be at least 2");
      HierarchyParams p = b_params.resolve();
      int k = 0;
      while (k < 64 && 2 * p.N * cell_scale(k + 1) <= n) ++k;
      json j = {{"n", n.str()}, {"params", params_json(p)}, {"k", k}};
      std::vector<std::string> bad;
      if (k >= 1) {
        p.k_max = k;
        bad = validate_params(p);
        j["params"]["k"] = k;
        j["valid"] = bad.empty();
        j["violated"] = bad;
        if (bad.empty()) {
          j["lowerBound"] = (BigInt(1) << k).str();
          j["copsEvaded"] = ((BigInt(1) << k) - 1).str();
        }
      }
      std::optional<BigInt> sweep_count;
      if (!b_speed.empty()) {
        const BigInt R = big(b_speed, "--speed");
        if (R < 1) throw UsageError("--speed must be positive");
        const BigInt den = 2 * R - 1;
        const BigInt L = (n * (R - 1) + den - 1) / den + 2;
        if (2 * L + 1 <= n) sweep_count = 2 * L + 1;
        j["speed"] = R.str();
        j["sweepCops"] = sweep_count ? json(sweep_count->str()) : json(nullptr);
      }
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        out << "hierarchy: C=" << p.C << " N=" << p.N << " R=" << p.R << " (" << mode_name(p.mode)
            << ")\n";
        if (k == 0) {
          out << "k = 0: grid side below 2*N*L_1, no evasion bound\n";
        } else if (!bad.empty()) {
          out << "k = " << k << ", but the parameters are invalid at this level:\n";
          for (const auto& b : bad) out << "  " << b << "\n";
        } else {
          out << "k = " << k << ": f_" << p.R << "(" << n << ") >= " << (BigInt(1) << k)
              << " (a robber of speed " << p.R << " evades " << ((BigInt(1) << k) - 1)
              << (k == 1 ? " cop)\n" : " cops)\n");
        }
        if (!b_speed.empty()) {
          if (sweep_count) {
            out << "line sweep: " << *sweep_count << " cops catch a robber of speed " << b_speed
                << ", so f_" << b_speed << "(" << n << ") <= " << *sweep_count << "\n";
          } else {
            out << "line sweep: grid too small for the formation\n";
          }
        }
      }
      return kOk;
    }

    if (replay_cmd->parsed()) {
      const GridSpec spec{i64(r_n, "--n"), i64(r_speed, "--speed")};
      std::ifstream in(r_trace);
      if (!in) throw std::runtime_error("cannot read " + r_trace);
      const ReplayReport rep = replay_jsonl(in, spec);
      if (as_json) {
        json j = {{"valid", rep.valid}, {"records", rep.records}};
        if (!rep.valid) {
          j["firstBad"] = rep.first_bad ? json(*rep.first_bad) : json(nullptr);
          j["reason"] = rep.reason;
        }
        out << j.dump() << "\n";
      } else if (rep.valid) {
        out << "valid (" << rep.records << " records)\n";
      } else {
        out << "invalid at record " << (rep.first_bad ? std::to_string(*rep.first_bad) : "?")
            << ": " << rep.reason << "\n";
      }
      return rep.valid ? kOk : kError;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}

}  // namespace fastrobber::cli
