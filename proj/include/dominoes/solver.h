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

#ifndef DOMINOES_SOLVER_H_
#define DOMINOES_SOLVER_H_

// Limited-forecast play: at every turn the mover expands the subtree her
// node budget affords, values its leaves with the evaluator (exactly at
// terminal leaves) and plays the subgame-perfect move of that subtree.
// Repeating this forward from the opening yields a (c1, c2)-solution trace.
//
// Also home to the exhaustive full-tree solver used as ground truth.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dominoes/core_rules.h"
#include "dominoes/evaluator.h"
#include "dominoes/tree.h"

namespace dominoes {

enum class TieBreak : std::uint8_t {
  // Prefer the child leaving the opponent fewest placements, then the first
  // in legal-move order.
  kBlockThenOrder,
  kFirstInOrder,
};

std::string_view TieBreakName(TieBreak tiebreak);
TieBreak ParseTieBreak(std::string_view text);

// Backward-induction result over a Subtree, indexed by subtree node id.
struct Policy {
  Player root_player = Player::kOne;
  std::vector<double> values;  // to root_player
  std::vector<int> choice;     // chosen child id, -1 at leaves

  double ValueTo(Player p, int node = 0) const {
    return p == root_player ? values[node] : -values[node];
  }
  // Moves from `node` following the chosen children down to a leaf.
  std::vector<PlyMove> PrincipalLine(const Subtree& subtree,
                                     int node = 0) const;
};

// Leaves are valued by Phi for the root player; each internal node's mover
// maximizes her own side of that zero-sum value.
Policy Spe(const Subtree& subtree, const GuidelineConfig& config,
           TieBreak tiebreak = TieBreak::kBlockThenOrder);

struct LimitedForecastRule {
  Budget budget = Budget::Unlimited();
  Recall recall = Recall::Unlimited();
  GuidelineConfig config;
  TieBreak tiebreak = TieBreak::kBlockThenOrder;

  friend bool operator==(const LimitedForecastRule&,
                         const LimitedForecastRule&) = default;
};

struct SubtreeSummary {
  int depth = 0;
  std::uint64_t node_count = 0;
  bool horizon_visible = false;
  friend bool operator==(const SubtreeSummary&,
                         const SubtreeSummary&) = default;
};

struct ActionValue {
  Move action = Move::Pass();
  // Backed-up value to the mover; absent when the subtree has depth 0.
  std::optional<double> value;
  // Principal continuation inside the subtree after `action`.
  std::vector<PlyMove> belief;
};

struct Decision {
  Move move = Move::Pass();
  double value = 0.0;  // to the mover
  SubtreeSummary summary;
  std::vector<ActionValue> actions;  // legal-move order
};

// Expand within the rule's budget and play the subtree's SPE move. With
// depth 0 (the mover's own options exceed the budget) the first legal move
// is played. kState error on terminal states.
Decision Decide(const GameState& state, const LimitedForecastRule& rule);

StrategyProfile MakeLimitedForecastProfile(
    const std::array<LimitedForecastRule, 2>& rules);

struct ActionForecast {
  Move action = Move::Pass();
  // f_i^t(a | h): the next n plies after `action` under the profile in play.
  Path prediction{GameState()};
  std::optional<double> value;
  std::vector<PlyMove> belief;
};

struct Forecast {
  int period = 1;
  Player player = Player::kOne;
  SubtreeSummary summary;  // depth n = f(c) and nodes generated
  std::vector<PlyMove> recalled_history;  // h = [h*]^N
  std::vector<ActionForecast> actions;
};

// Decision of the player to move plus her forecast. Predictions are the
// continuation paths of `rules` (both players) truncated to her depth, so
// they are consistent with the profile by construction. The decision itself
// depends on the state only.
std::pair<Move, Forecast> LimitedForecastDecision(
    const GameState& state, const History& history,
    const std::array<LimitedForecastRule, 2>& rules);

// Symmetric profile, empty history.
std::pair<Move, Forecast> LimitedForecastDecision(
    const GameState& state, Budget budget, Recall recall,
    const GuidelineConfig& config);

struct PeriodRecord {
  int period = 1;
  Player player = Player::kOne;
  bool forced = false;  // biggest-double opening
  Move move = Move::Pass();
  double value = 0.0;  // to the mover
  Forecast forecast;
  std::optional<FreeEnds> ends_after;
};

struct SolutionTrace {
  Deal deal;
  OpeningRule opening;
  std::array<LimitedForecastRule, 2> rules;
  std::vector<PeriodRecord> periods;
  Outcome outcome;

  // Realized path from the initial state; kTrace error when not replayable.
  Path Realized() const;
  std::vector<int> DepthsOf(Player p) const;
};

SolutionTrace ConstructSolution(const Deal& deal,
                                const std::array<LimitedForecastRule, 2>& rules,
                                const OpeningRule& opening);

SolutionTrace ConstructSolution(const Deal& deal, Budget c1, Budget c2,
                                const OpeningRule& opening,
                                const GuidelineConfig& config);

struct CheckResult {
  bool passed = true;
  std::optional<int> period;
  std::optional<Move> action;
  std::string message;

  static CheckResult Pass() { return {}; }
  static CheckResult Fail(int period, std::string message,
                          std::optional<Move> action = std::nullopt) {
    return {false, period, action, std::move(message)};
  }
};

// Every recorded move is the SPE move of the recomputed budgeted subtree
// under the trace's tie-break, and the recorded subtree summary and value
// match. Returns the first violation; kTrace error if the trace cannot be
// replayed up to it.
CheckResult CheckJustified(const SolutionTrace& trace);

// Every recorded prediction, for every available action on and off the
// realized path, equals the truncation to n of the continuation path induced
// by the trace's profile.
CheckResult CheckConsistent(const SolutionTrace& trace);

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct OracleEntry {
  Move move = Move::Pass();
  int value_p1 = 0;
};

struct OracleResult {
  int value_p1 = 0;
  Path principal{GameState()};
  std::unordered_map<std::string, OracleEntry> policy;  // by GameState::Key
  std::uint64_t nodes = 0;

  // kState error if `state` was not reached by the solve.
  const OracleEntry& EntryFor(const GameState& state) const;
};

// Exact backward induction over the whole tree with terminal payoffs only.
// Ties go to the child leaving the opponent fewest placements, then legal
// order. kCapacity error once more than `cap` distinct states are expanded.
OracleResult SolveFullTree(const GameState& root,
                           std::uint64_t cap = kDefaultOracleCap);

OracleResult FullTreeSpe(const Deal& deal, const OpeningRule& opening,
                         std::uint64_t cap = kDefaultOracleCap);

}  // namespace dominoes

#endif  // DOMINOES_SOLVER_H_
