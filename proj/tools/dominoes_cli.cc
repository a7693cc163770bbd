// Copyright 2026 The Dominoes Limited Forecast Authors
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

// Command-line front end: golden example, single matches, the full-tree
// oracle, tournaments and trace checking.

#include <iostream>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "dominoes/agents.h"
#include "dominoes/core_rules.h"
#include "dominoes/error.h"
#include "dominoes/harness.h"
#include "dominoes/io.h"
#include "dominoes/solver.h"

namespace {

using namespace dominoes;

void PrintTrace(const SolutionTrace& trace, std::ostream& out) {
  GameState state =
      GameState::Initial(trace.deal, Opening(trace.deal, trace.opening).starter);
  for (const PeriodRecord& r : trace.periods) {
    state = ApplyMove(state, r.move);
    out << TranscriptLine(r.period, r.player, r.move, state)
        << "  n=" << r.forecast.summary.depth
        << " nodes=" << r.forecast.summary.node_count
        << (r.forecast.summary.horizon_visible ? " horizon" : "")
        << " value=" << r.value << "\n";
  }
  out << "outcome " << trace.outcome.ToString() << "\n";
}

int RunExample(const std::string& fixture, bool update,
               const std::string& json_out) {
  const SolutionTrace trace = TraceReferenceExample();
  PrintTrace(trace, std::cout);
  const std::string dumped = DumpJson(TraceToJson(trace));
  if (!json_out.empty()) WriteTextFile(json_out, dumped);
  if (update) {
    WriteTextFile(fixture, dumped);
    std::cout << "fixture written to " << fixture << "\n";
    return 0;
  }
  if (ReadTextFile(fixture) != dumped) {
    std::cerr << "MISMATCH against fixture " << fixture << "\n";
    return 1;
  }
  const CheckResult justified = CheckJustified(trace);
  const CheckResult consistent = CheckConsistent(trace);
  if (!justified.passed || !consistent.passed) {
    std::cerr << "trace fails its own checks: " << justified.message
              << consistent.message << "\n";
    return 1;
  }
  std::cout << "matches fixture " << fixture << "\n";
  return 0;
}

bool BothLimitedForecast(const AgentSpec& a, const AgentSpec& b) {
  return std::holds_alternative<LimitedForecastAgent>(a.kind) &&
         std::holds_alternative<LimitedForecastAgent>(b.kind);
}

int RunSolve(const std::string& deal_path, const std::string& agent1,
             const std::string& agent2, const std::string& opening_text,
             const std::string& json_out, std::uint64_t seed) {
  const Deal deal = DealFromJson(ReadJsonFile(deal_path));
  const OpeningRule opening = OpeningRule::Parse(opening_text);
  const AgentSpec a1 = AgentSpec::Parse(agent1);
  const AgentSpec a2 = AgentSpec::Parse(agent2);
  if (BothLimitedForecast(a1, a2)) {
    const SolutionTrace trace = ConstructSolution(
        deal,
        {std::get<LimitedForecastAgent>(a1.kind).rule,
         std::get<LimitedForecastAgent>(a2.kind).rule},
        opening);
    PrintTrace(trace, std::cout);
    if (!json_out.empty()) WriteTextFile(json_out, DumpJson(TraceToJson(trace)));
    return 0;
  }
  const Transcript transcript = RunMatch(deal, a1, a2, opening, seed);
  std::cout << transcript.ToText();
  if (!json_out.empty()) {
    WriteTextFile(json_out, DumpJson(TranscriptToJson(transcript)));
  }
  return 0;
}

int RunOracle(const std::string& deal_path, const std::string& opening_text,
              std::uint64_t cap) {
  const Deal deal = DealFromJson(ReadJsonFile(deal_path));
  const OracleResult result =
      FullTreeSpe(deal, OpeningRule::Parse(opening_text), cap);
  std::cout << "value_p1 " << result.value_p1 << "\n";
  std::cout << "states " << result.nodes << "\n";
  GameState state = result.principal.origin();
  for (const PlyMove& ply : result.principal.moves()) {
    const int period = state.period();
    state = ApplyMove(state, ply.move);
    std::cout << TranscriptLine(period, ply.player, ply.move, state) << "\n";
  }
  std::cout << "outcome " << TerminalOutcome(state)->ToString() << "\n";
  return 0;
}

int RunCheck(const std::string& trace_path) {
  const SolutionTrace trace = TraceFromJson(ReadJsonFile(trace_path));
  int status = 0;
  for (const auto& [name, result] :
       {std::pair{"justified", CheckJustified(trace)},
        std::pair{"consistent", CheckConsistent(trace)}}) {
    if (result.passed) {
      std::cout << name << ": pass\n";
    } else {
      status = 1;
      std::cout << name << ": FAIL at t=" << result.period.value_or(0);
      if (result.action) std::cout << " action " << result.action->ToString();
      std::cout << ": " << result.message << "\n";
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limited-forecast draw dominoes"};
  app.require_subcommand(1);

  auto* example = app.add_subcommand(
      "example", "Replay the double-2 worked example and diff its fixture");
  std::string fixture = std::string(DOMINOES_FIXTURE_DIR) + "/golden_trace.json";
  bool update = false;
  std::string example_json;
  example->add_option("--fixture", fixture, "Golden trace fixture");
  example->add_flag("--update", update, "Rewrite the fixture instead");
  example->add_option("--json", example_json, "Also write the trace here");

  auto* solve = app.add_subcommand("solve", "Play one deal");
  std::string deal_path;
  std::string agent1 = "lf:c=6";
  std::string agent2 = "lf:c=6";
  std::string opening = "free:1";
  std::string json_out;
  std::uint64_t seed = 0;
  solve->add_option("--deal", deal_path, "Deal file")->required();
  solve->add_option("--agent1", agent1, "Player 1 agent spec");
  solve->add_option("--agent2", agent2, "Player 2 agent spec");
  solve->add_option("--opening", opening, "free:1 | free:2 | double");
  solve->add_option("--json", json_out, "Write trace/transcript JSON");
  solve->add_option("--seed", seed, "Seed for random agents");

  auto* oracle = app.add_subcommand("oracle", "Full-tree SPE of a deal");
  std::string oracle_deal;
  std::string oracle_opening = "free:1";
  std::uint64_t cap = kDefaultOracleCap;
  oracle->add_option("--deal", oracle_deal, "Deal file")->required();
  oracle->add_option("--opening", oracle_opening, "free:1 | free:2 | double");
  oracle->add_option("--cap", cap, "Maximum distinct states");

  auto* tournament = app.add_subcommand("tournament", "Seeded tournament");
  std::string config_path;
  int max_pip = 3;
  int tiles = 4;
  int games = 100;
  std::uint64_t t_seed = 0;
  std::string t_agent1 = "lf:c=8";
  std::string t_agent2 = "random";
  std::string t_opening = "free:1";
  bool swap = false;
  int threads = 0;
  std::string out_path;
  std::string format = "json";
  tournament->add_option("--config", config_path, "JSON experiment config");
  auto* o_max_pip = tournament->add_option("--max-pip", max_pip, "Highest pip");
  auto* o_tiles = tournament->add_option("--tiles", tiles, "Tiles per player");
  auto* o_games = tournament->add_option("--games", games, "Number of deals");
  auto* o_seed = tournament->add_option("--seed", t_seed, "Base seed");
  auto* o_agent1 = tournament->add_option("--agent1", t_agent1, "Agent 1 spec");
  auto* o_agent2 = tournament->add_option("--agent2", t_agent2, "Agent 2 spec");
  auto* o_opening =
      tournament->add_option("--opening", t_opening, "free:1 | free:2 | double");
  auto* o_swap = tournament->add_flag("--swap", swap, "Replay with seats swapped");
  auto* o_threads = tournament->add_option("--threads", threads, "0 = all cores");
  tournament->add_option("--out", out_path, "Report file");
  tournament->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* check = app.add_subcommand("check", "Check a serialized trace");
  std::string trace_path;
  check->add_option("--trace", trace_path, "Trace JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*example) return RunExample(fixture, update, example_json);
    if (*solve) {
      return RunSolve(deal_path, agent1, agent2, opening, json_out, seed);
    }
    if (*oracle) return RunOracle(oracle_deal, oracle_opening, cap);
    if (*check) return RunCheck(trace_path);
    if (*tournament) {
      ExperimentConfig config;
      config.max_pip = max_pip;
      config.tiles_per_player = tiles;
      config.num_games = games;
      config.seed = t_seed;
      config.opening = OpeningRule::Parse(t_opening);
      config.agent1 = AgentSpec::Parse(t_agent1);
      config.agent2 = AgentSpec::Parse(t_agent2);
      config.swap_sides = swap;
      config.threads = threads;
      if (!config_path.empty()) {
        // Flags given explicitly win over the file.
        ExperimentConfig from_file =
            ExperimentConfigFromJson(ReadJsonFile(config_path), config);
        if (*o_max_pip) from_file.max_pip = max_pip;
        if (*o_tiles) from_file.tiles_per_player = tiles;
        if (*o_games) from_file.num_games = games;
        if (*o_seed) from_file.seed = t_seed;
        if (*o_agent1) from_file.agent1 = config.agent1;
        if (*o_agent2) from_file.agent2 = config.agent2;
        if (*o_opening) from_file.opening = config.opening;
        if (*o_swap) from_file.swap_sides = swap;
        if (*o_threads) from_file.threads = threads;
        config = from_file;
      }
      const StatsReport report = RunTournament(config);
      for (const AgentStats* s : {&report.agent1, &report.agent2}) {
        std::cout << s->spec << ": W/D/L " << s->wins << "/" << s->draws << "/"
                  << s->losses << " mean payoff " << s->mean_payoff
                  << " win rate " << s->win_rate << " CI95 ["
                  << s->win_rate_ci_low << ", " << s->win_rate_ci_high << "]\n";
      }
      if (!out_path.empty()) {
        WriteTextFile(out_path, format == "csv"
                                    ? ReportToCsv(report)
                                    : DumpJson(ReportToJson(report)));
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
