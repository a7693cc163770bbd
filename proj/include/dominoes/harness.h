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

#ifndef DOMINOES_HARNESS_H_
#define DOMINOES_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dominoes/agents.h"
#include "dominoes/core_rules.h"
#include "dominoes/solver.h"

namespace dominoes {

struct TranscriptEntry {
  int period = 1;
  Player player = Player::kOne;
  Move move = Move::Pass();
  std::optional<FreeEnds> ends_after;
};

struct Transcript {
  Deal deal;
  OpeningRule opening;
  std::vector<TranscriptEntry> entries;
  Outcome outcome;

  // One TranscriptLine per ply.
  std::string ToText() const;
  // Replays through the rules; kTrace error on mismatch.
  GameState Replay() const;
};

// Seat `player` of a game seeded with `game_seed` draws from
// TurnRng(SeatSeed(game_seed, player, spec_seed)).
std::uint64_t SeatSeed(std::uint64_t game_seed, Player player,
                       std::uint64_t spec_seed);

// Errors raised by an agent are rethrown with the period prefixed.
Transcript RunMatch(const Deal& deal, const AgentSpec& a1, const AgentSpec& a2,
                    const OpeningRule& opening, std::uint64_t seed = 0);

struct ExperimentConfig {
  int max_pip = 3;
  int tiles_per_player = 4;
  int num_games = 100;
  std::uint64_t seed = 0;
  // "double" falls back to free:1 on deals without doubles.
  OpeningRule opening = OpeningRule::FreeChoice(Player::kOne);
  AgentSpec agent1;
  AgentSpec agent2;
  bool swap_sides = false;
  int threads = 0;  // 0: hardware concurrency

  void Validate() const;
};

struct GameRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::uint64_t deal_hash = 0;
  Player agent1_seat = Player::kOne;
  std::vector<std::string> moves;
  Outcome outcome;
  int payoff_agent1 = 0;
};

struct AgentStats {
  std::string spec;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  double mean_payoff = 0.0;
  double payoff_variance = 0.0;  // sample variance (n - 1)
  // (wins + draws / 2) / games with a 95% normal-approximation interval,
  // clamped to [0, 1].
  double win_rate = 0.0;
  double win_rate_ci_low = 0.0;
  double win_rate_ci_high = 0.0;
};

struct StatsReport {
  ExperimentConfig config;
  std::vector<GameRecord> games;
  AgentStats agent1;
  AgentStats agent2;
};

// Game i uses seed + i for both the deal and the seats' streams. With
// swap_sides every deal is played again with the agents' seats exchanged.
StatsReport RunTournament(const ExperimentConfig& config);

AgentStats Aggregate(const std::string& spec,
                     const std::vector<int>& payoffs);

// FNV-1a over the dealt tiles.
std::uint64_t DealHash(const Deal& deal);

// Player 1 {0-0, 0-1, 2-2}, player 2 {0-2, 1-1, 1-2}.
Deal ReferenceDeal();

// ConstructSolution on ReferenceDeal with c1 = c2 = 6, player 1 opening
// freely and ShedPips-only evaluation.
SolutionTrace TraceReferenceExample();

}  // namespace dominoes

#endif  // DOMINOES_HARNESS_H_
