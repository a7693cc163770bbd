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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "dominoes/error.h"

namespace dominoes {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Deal DealForGame(const ExperimentConfig& config, std::uint64_t game_seed) {
  return DealRandom(StandardSet(config.max_pip), config.tiles_per_player,
                    game_seed);
}

OpeningRule EffectiveOpening(const ExperimentConfig& config,
                             const Deal& deal) {
  if (config.opening.kind != OpeningRule::Kind::kBiggestDoubleForced) {
    return config.opening;
  }
  for (const Hand& h : deal.hands) {
    for (const Tile& t : h) {
      if (t.IsDouble()) return config.opening;
    }
  }
  return OpeningRule::FreeChoice(Player::kOne);
}

GameRecord PlayOne(const ExperimentConfig& config, int index,
                   Player agent1_seat) {
  const std::uint64_t game_seed = config.seed + static_cast<std::uint64_t>(index);
  const Deal deal = DealForGame(config, game_seed);
  const bool first = agent1_seat == Player::kOne;
  const Transcript t =
      RunMatch(deal, first ? config.agent1 : config.agent2,
               first ? config.agent2 : config.agent1,
               EffectiveOpening(config, deal), game_seed);
  GameRecord record;
  record.index = index;
  record.seed = game_seed;
  record.deal_hash = DealHash(deal);
  record.agent1_seat = agent1_seat;
  for (const TranscriptEntry& e : t.entries) {
    record.moves.push_back(e.move.ToString());
  }
  record.outcome = t.outcome;
  record.payoff_agent1 = t.outcome.PayoffTo(agent1_seat);
  return record;
}

}  // namespace

std::string Transcript::ToText() const {
  std::ostringstream out;
  GameState state = GameState::Initial(deal, Opening(deal, opening).starter);
  for (const TranscriptEntry& e : entries) {
    state = ApplyMove(state, e.move);
    out << TranscriptLine(e.period, e.player, e.move, state) << "\n";
  }
  out << "outcome " << outcome.ToString() << "\n";
  return out.str();
}

GameState Transcript::Replay() const {
  GameState state = GameState::Initial(deal, Opening(deal, opening).starter);
  for (const TranscriptEntry& e : entries) {
    if (e.player != state.to_move() || e.period != state.period()) {
      throw Error(ErrorCode::kTrace, "transcript entry t=" +
                                         std::to_string(e.period) +
                                         " out of turn");
    }
    try {
      state = ApplyMove(state, e.move);
    } catch (const Error& err) {
      throw Error(ErrorCode::kTrace, err.what());
    }
    if (state.free_ends() != e.ends_after) {
      throw Error(ErrorCode::kTrace, "free ends diverge at t=" +
                                         std::to_string(e.period));
    }
  }
  const auto outcome_now = TerminalOutcome(state);
  if (!outcome_now || !(*outcome_now == outcome)) {
    throw Error(ErrorCode::kTrace, "transcript outcome does not replay");
  }
  return state;
}

std::uint64_t SeatSeed(std::uint64_t game_seed, Player player,
                       std::uint64_t spec_seed) {
  return SplitMix64(SplitMix64(game_seed) ^
                    SplitMix64(spec_seed + PlayerNumber(player)));
}

Transcript RunMatch(const Deal& deal, const AgentSpec& a1, const AgentSpec& a2,
                    const OpeningRule& opening, std::uint64_t seed) {
  deal.Validate();
  const OpeningDecision od = Opening(deal, opening);
  Transcript transcript;
  transcript.deal = deal;
  transcript.opening = opening;
  const std::array<const AgentSpec*, 2> agents = {&a1, &a2};
  std::array<TurnRng, 2> rngs = {
      TurnRng(SeatSeed(seed, Player::kOne, a1.seed)),
      TurnRng(SeatSeed(seed, Player::kTwo, a2.seed))};
  GameState state = GameState::Initial(deal, od.starter);
  while (!state.IsTerminal()) {
    const Player mover = state.to_move();
    Move move = Move::Pass();
    if (od.forced && transcript.entries.empty()) {
      move = *od.forced;
    } else {
      try {
        move = AgentMove(*agents[PlayerIndex(mover)], state,
                         rngs[PlayerIndex(mover)]);
      } catch (const Error& e) {
        throw Error(e.code(), "t=" + std::to_string(state.period()) +
                                  " player " +
                                  std::to_string(PlayerNumber(mover)) + ": " +
                                  e.what());
      }
    }
    const int period = state.period();
    state = ApplyMove(state, move);
    transcript.entries.push_back({period, mover, move, state.free_ends()});
  }
  transcript.outcome = *TerminalOutcome(state);
  return transcript;
}

void ExperimentConfig::Validate() const {
  if (num_games < 1) {
    throw Error(ErrorCode::kParameter, "num_games must be >= 1");
  }
  const TileSet set = StandardSet(max_pip);
  if (tiles_per_player < 1 ||
      2 * static_cast<std::size_t>(tiles_per_player) > set.tiles.size()) {
    throw Error(ErrorCode::kParameter,
                std::to_string(tiles_per_player) +
                    " tiles per player do not fit the double-" +
                    std::to_string(max_pip) + " set");
  }
  if (threads < 0) throw Error(ErrorCode::kParameter, "threads must be >= 0");
}

AgentStats Aggregate(const std::string& spec,
                     const std::vector<int>& payoffs) {
  AgentStats s;
  s.spec = spec;
  const double n = static_cast<double>(payoffs.size());
  double sum = 0.0;
  for (int p : payoffs) {
    if (p > 0) ++s.wins;
    else if (p < 0) ++s.losses;
    else ++s.draws;
    sum += p;
  }
  if (payoffs.empty()) return s;
  s.mean_payoff = sum / n;
  double ss = 0.0;
  for (int p : payoffs) ss += (p - s.mean_payoff) * (p - s.mean_payoff);
  s.payoff_variance = payoffs.size() > 1 ? ss / (n - 1.0) : 0.0;
  s.win_rate = (s.wins + 0.5 * s.draws) / n;
  const double half =
      1.96 * std::sqrt(s.win_rate * (1.0 - s.win_rate) / n);
  s.win_rate_ci_low = std::max(0.0, s.win_rate - half);
  s.win_rate_ci_high = std::min(1.0, s.win_rate + half);
  return s;
}

StatsReport RunTournament(const ExperimentConfig& config) {
  config.Validate();
  const int per_game = config.swap_sides ? 2 : 1;
  const int jobs = config.num_games * per_game;
  std::vector<GameRecord> records(jobs);
  unsigned workers = config.threads > 0
                         ? static_cast<unsigned>(config.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int job = next++; job < jobs; job = next++) {
      try {
        records[job] = PlayOne(config, job / per_game,
                               job % per_game == 0 ? Player::kOne
                                                   : Player::kTwo);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  StatsReport report;
  report.config = config;
  report.games = std::move(records);
  std::vector<int> p1;
  std::vector<int> p2;
  for (const GameRecord& g : report.games) {
    p1.push_back(g.payoff_agent1);
    p2.push_back(-g.payoff_agent1);
  }
  report.agent1 = Aggregate(config.agent1.ToString(), p1);
  report.agent2 = Aggregate(config.agent2.ToString(), p2);
  return report;
}

std::uint64_t DealHash(const Deal& deal) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  mix(static_cast<std::uint8_t>(deal.max_pip));
  for (const Hand& hand : deal.hands) {
    for (const Tile& t : hand) {
      mix(t.low);
      mix(t.high);
    }
    mix(0xff);
  }
  return h;
}

Deal ReferenceDeal() {
  Deal deal;
  deal.max_pip = 2;
  deal.hands[0] = {Tile(0, 0), Tile(0, 1), Tile(2, 2)};
  deal.hands[1] = {Tile(0, 2), Tile(1, 1), Tile(1, 2)};
  return deal;
}

SolutionTrace TraceReferenceExample() {
  return ConstructSolution(ReferenceDeal(), Budget::Nodes(6),
                           Budget::Nodes(6), OpeningRule::FreeChoice(Player::kOne),
                           GuidelineConfig());
}

}  // namespace dominoes
