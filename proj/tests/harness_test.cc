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

#include "dominoes/harness.h"

#include <cmath>
#include <filesystem>
#include <numeric>

#include "doctest.h"
#include "dominoes/error.h"
#include "dominoes/io.h"
#include "test_util.h"

namespace dominoes {
namespace {

const char* const kGoldenTranscript =
    "1 1 P 2-2@- [2,2]\n"
    "2 2 P 1-2@2 [2,1]\n"
    "3 1 P 0-1@1 [2,0]\n"
    "4 2 P 0-2@0 [2,2]\n"
    "5 1 pass [2,2]\n"
    "6 2 pass [2,2]\n"
    "outcome blocked winner=1 payoff_p1=2\n";

ExperimentConfig SmallConfig() {
  ExperimentConfig c;
  c.num_games = 40;
  c.seed = 17;
  c.agent1 = AgentSpec::Parse("lf:c=8");
  c.agent2 = AgentSpec::Parse("random");
  c.swap_sides = true;
  c.threads = 3;
  return c;
}

TEST_CASE("match on the worked example") {
  const AgentSpec lf = AgentSpec::Parse("lf:c=6");
  const Transcript t =
      RunMatch(ReferenceDeal(), lf, lf, OpeningRule::FreeChoice(Player::kOne));
  CHECK(t.ToText() == kGoldenTranscript);
  CHECK(t.outcome.payoff_p1 == 2);
  CHECK(t.Replay().IsTerminal());

  const Transcript p = RunMatch(ReferenceDeal(), AgentSpec::Parse("perfect"), lf,
                                OpeningRule::FreeChoice(Player::kOne));
  CHECK(p.outcome.payoff_p1 >= 2);

  const Transcript forced = RunMatch(ReferenceDeal(), AgentSpec::Parse("random"),
                                     AgentSpec::Parse("random"),
                                     OpeningRule::BiggestDoubleForced(), 4);
  CHECK(forced.entries.front().move == Move::Opening(Tile(2, 2)));
  CHECK(forced.Replay().IsTerminal());

  Transcript bad = t;
  bad.entries[2].move = Move::Place(Tile(0, 0), 1);
  CHECK_THROWS_AS(bad.Replay(), Error);
}

TEST_CASE("agent errors carry the period") {
  AgentSpec tiny = AgentSpec::Parse("perfect");
  std::get<PerfectAgent>(tiny.kind).cap = 10;
  try {
    RunMatch(DealRandom(StandardSet(6), 7, 9), tiny, tiny,
             OpeningRule::FreeChoice(Player::kOne));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapacity);
    CHECK(std::string(e.what()).find("t=1 player 1") != std::string::npos);
  }
}

TEST_CASE("seat seeds") {
  CHECK(SeatSeed(1, Player::kOne, 0) != SeatSeed(1, Player::kTwo, 0));
  CHECK(SeatSeed(1, Player::kOne, 0) != SeatSeed(2, Player::kOne, 0));
  CHECK(SeatSeed(1, Player::kOne, 0) != SeatSeed(1, Player::kOne, 1));
  CHECK(SeatSeed(7, Player::kTwo, 3) == SeatSeed(7, Player::kTwo, 3));
}

TEST_CASE("tournaments are deterministic across thread counts") {
  ExperimentConfig a = SmallConfig();
  ExperimentConfig b = SmallConfig();
  b.threads = 1;
  const StatsReport ra = RunTournament(a);
  const StatsReport rb = RunTournament(b);
  CHECK(ReportToCsv(ra) == ReportToCsv(rb));
  CHECK(DumpJson(ReportToJson(ra)) == DumpJson(ReportToJson(rb)));
  REQUIRE(ra.games.size() == 80);
  for (std::size_t i = 0; i < ra.games.size(); ++i) {
    const GameRecord& g = ra.games[i];
    CHECK(g.index == static_cast<int>(i / 2));
    CHECK(g.seed == 17 + i / 2);
    CHECK(g.agent1_seat == (i % 2 ? Player::kTwo : Player::kOne));
    CHECK(g.payoff_agent1 == g.outcome.PayoffTo(g.agent1_seat));
    if (i % 2) CHECK(g.deal_hash == ra.games[i - 1].deal_hash);
  }
  // Header plus one row per game.
  const std::string csv = ReportToCsv(ra);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 81);
}

TEST_CASE("identical agents split swapped games exactly") {
  for (const char* spec : {"lf:c=6", "random", "greedy"}) {
    ExperimentConfig c = SmallConfig();
    c.agent1 = c.agent2 = AgentSpec::Parse(spec);
    const StatsReport r = RunTournament(c);
    CHECK(r.agent1.mean_payoff == 0.0);
    CHECK(r.agent1.win_rate == 0.5);
  }
}

TEST_CASE("report statistics") {
  const StatsReport r = RunTournament(SmallConfig());
  std::vector<int> payoffs;
  for (const GameRecord& g : r.games) payoffs.push_back(g.payoff_agent1);
  const double n = static_cast<double>(payoffs.size());
  const double mean = std::accumulate(payoffs.begin(), payoffs.end(), 0.0) / n;
  double ss = 0;
  for (int p : payoffs) ss += (p - mean) * (p - mean);
  const int wins = static_cast<int>(std::count_if(payoffs.begin(), payoffs.end(),
                                                  [](int p) { return p > 0; }));
  const int draws = static_cast<int>(std::count(payoffs.begin(), payoffs.end(), 0));
  const double rate = (wins + draws / 2.0) / n;
  const double half = 1.959963984540054 * std::sqrt(rate * (1 - rate) / n);

  CHECK(r.agent1.wins == wins);
  CHECK(r.agent1.draws == draws);
  CHECK(r.agent1.wins + r.agent1.draws + r.agent1.losses == 80);
  CHECK(r.agent1.mean_payoff == doctest::Approx(mean));
  CHECK(r.agent1.payoff_variance == doctest::Approx(ss / (n - 1)));
  CHECK(r.agent1.win_rate == doctest::Approx(rate));
  CHECK(r.agent1.win_rate_ci_low == doctest::Approx(std::max(0.0, rate - half)));
  CHECK(r.agent1.win_rate_ci_high == doctest::Approx(std::min(1.0, rate + half)));
  CHECK(r.agent2.mean_payoff == doctest::Approx(-mean));
  CHECK(r.agent2.wins == r.agent1.losses);

  const AgentStats all_wins = Aggregate("x", {3, 1, 2});
  CHECK(all_wins.win_rate == 1.0);
  CHECK(all_wins.win_rate_ci_high == 1.0);
  CHECK(all_wins.win_rate_ci_low == 1.0);
}

TEST_CASE("experiment configuration") {
  ExperimentConfig c;
  c.num_games = 0;
  CHECK_THROWS_AS(c.Validate(), Error);
  c = ExperimentConfig();
  c.tiles_per_player = 6;  // 12 > 10 tiles in the double-3 set
  CHECK_THROWS_AS(c.Validate(), Error);
  c = ExperimentConfig();
  c.threads = -1;
  CHECK_THROWS_AS(c.Validate(), Error);

  const Json j = Json::parse(R"({"games": 5, "agent1": "greedy", "swap": true,
                                  "weights": {"block_opponent": 1}})");
  const ExperimentConfig parsed = ExperimentConfigFromJson(j, ExperimentConfig());
  CHECK(parsed.num_games == 5);
  CHECK(parsed.swap_sides);
  CHECK(parsed.max_pip == 3);
  CHECK(std::get<GreedyAgent>(parsed.agent1.kind).config.weight(Guideline::kBlockOpponent) ==
        1.0);
  CHECK_THROWS_AS(ExperimentConfigFromJson(Json::parse(R"({"games": "x"})"), c), Error);

  // Deals without doubles fall back to a free opening by player 1.
  ExperimentConfig doubles;
  doubles.tiles_per_player = 1;
  doubles.num_games = 30;
  doubles.opening = OpeningRule::BiggestDoubleForced();
  doubles.agent1 = doubles.agent2 = AgentSpec::Parse("random");
  CHECK(RunTournament(doubles).games.size() == 30);
}

TEST_CASE("trace json round trip") {
  const SolutionTrace trace = TraceReferenceExample();
  const std::string text = DumpJson(TraceToJson(trace));
  CHECK(text == ReadTextFile(std::string(DOMINOES_FIXTURE_DIR) + "/golden_trace.json"));
  const SolutionTrace back = TraceFromJson(Json::parse(text));
  CHECK(DumpJson(TraceToJson(back)) == text);
  CHECK(CheckJustified(back).passed);
  CHECK(CheckConsistent(back).passed);

  Json broken = Json::parse(text);
  broken["periods"][1]["forecast"][0]["prediction"][0] = "P 3-3@0";
  CHECK_THROWS_AS(TraceFromJson(broken), Error);
  CHECK_THROWS_AS(TraceFromJson(Json::parse(R"({"format": "other"})")), Error);
}

TEST_CASE("deal json") {
  const Deal d = ReferenceDeal();
  CHECK(DealFromJson(DealToJson(d)).hands == d.hands);
  CHECK(DealFromJson(ReadJsonFile(std::string(DOMINOES_FIXTURE_DIR) + "/reference_deal.json"))
            .hands == d.hands);
  CHECK_THROWS_AS(DealFromJson(Json::parse(R"({"max_pip": 2, "hands": [[[0,0]],[[0,0]]]})")),
                  Error);
  CHECK_THROWS_AS(DealFromJson(Json::parse(R"({"max_pip": 2, "hands": [[[0,3]],[[1,1]]]})")),
                  Error);
}

TEST_CASE("file errors") {
  try {
    ReadTextFile("/nonexistent/dominoes.json");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
  CHECK_THROWS_AS(WriteTextFile("/nonexistent/dir/out.txt", "x"), Error);
  const std::string path =
      (std::filesystem::temp_directory_path() / "dominoes_harness_test.txt").string();
  WriteTextFile(path, "abc\n");
  CHECK(ReadTextFile(path) == "abc\n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace dominoes
