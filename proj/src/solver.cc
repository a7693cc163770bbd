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

#include "dominoes/solver.h"

#include <algorithm>
#include <sstream>

#include "dominoes/error.h"

namespace dominoes {
namespace {

std::string FormatValue(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

// Recorded moves of a trace as (player, move) plies.
std::vector<PlyMove> RecordedPlies(const SolutionTrace& trace) {
  std::vector<PlyMove> plies;
  plies.reserve(trace.periods.size());
  for (const PeriodRecord& r : trace.periods) plies.push_back({r.player, r.move});
  return plies;
}

GameState InitialStateOf(const SolutionTrace& trace) {
  const OpeningDecision od = Opening(trace.deal, trace.opening);
  return GameState::Initial(trace.deal, od.starter);
}

GameState ReplayStep(const GameState& state, const PeriodRecord& record) {
  if (state.IsTerminal()) {
    throw Error(ErrorCode::kTrace, "trace continues past a terminal state at t=" +
                                       std::to_string(record.period));
  }
  if (record.player != state.to_move() || record.period != state.period()) {
    throw Error(ErrorCode::kTrace,
                "record t=" + std::to_string(record.period) + " player " +
                    std::to_string(PlayerNumber(record.player)) +
                    " does not match replayed state " + state.ToString());
  }
  try {
    return ApplyMove(state, record.move);
  } catch (const Error& e) {
    throw Error(ErrorCode::kTrace, "unreplayable move at t=" +
                                       std::to_string(record.period) + ": " +
                                       e.what());
  }
}

Forecast MakeForecast(const GameState& state, const History& history,
                      const std::array<LimitedForecastRule, 2>& rules,
                      const Decision& decision,
                      const std::vector<Move>& actions) {
  const LimitedForecastRule& own = rules[PlayerIndex(state.to_move())];
  const StrategyProfile profile = MakeLimitedForecastProfile(rules);
  Forecast forecast;
  forecast.period = state.period();
  forecast.player = state.to_move();
  forecast.summary = decision.summary;
  forecast.recalled_history = history.Recalled(own.recall);
  for (const Move& a : actions) {
    ActionForecast af;
    af.action = a;
    af.prediction = ContinuationPath(profile, state, History{}, a,
                                     decision.summary.depth);
    for (const ActionValue& av : decision.actions) {
      if (av.action == a) {
        af.value = av.value;
        af.belief = av.belief;
      }
    }
    forecast.actions.push_back(std::move(af));
  }
  return forecast;
}

}  // namespace

std::string_view TieBreakName(TieBreak tiebreak) {
  return tiebreak == TieBreak::kBlockThenOrder ? "block_then_order"
                                               : "first_in_order";
}

TieBreak ParseTieBreak(std::string_view text) {
  if (text == "block_then_order") return TieBreak::kBlockThenOrder;
  if (text == "first_in_order") return TieBreak::kFirstInOrder;
  throw Error(ErrorCode::kParameter,
              "unknown tie-break '" + std::string(text) + "'");
}

std::vector<PlyMove> Policy::PrincipalLine(const Subtree& subtree,
                                           int node) const {
  std::vector<PlyMove> line;
  for (int id = node; choice[id] >= 0; id = choice[id]) {
    const SubtreeNode& child = subtree.node(choice[id]);
    line.push_back({subtree.node(id).state.to_move(), *child.move});
  }
  return line;
}

Policy Spe(const Subtree& subtree, const GuidelineConfig& config,
           TieBreak tiebreak) {
  const auto& nodes = subtree.nodes();
  Policy policy;
  policy.root_player = subtree.root().state.to_move();
  policy.values.assign(nodes.size(), 0.0);
  policy.choice.assign(nodes.size(), -1);
  // Children always carry larger ids than their parent.
  for (int id = static_cast<int>(nodes.size()) - 1; id >= 0; --id) {
    const SubtreeNode& n = nodes[id];
    if (n.children.empty()) {
      policy.values[id] = Phi(n.state, policy.root_player, config).value;
      continue;
    }
    const Player mover = n.state.to_move();
    const bool maximize = mover == policy.root_player;
    int best = -1;
    double best_value = 0.0;
    int best_block = 0;
    for (int child : n.children) {
      const double v = policy.values[child];
      const int block = tiebreak == TieBreak::kBlockThenOrder
                            ? GuideBlockOpponent(nodes[child].state, mover)
                            : 0;
      const bool better =
          best < 0 || (maximize ? v > best_value : v < best_value) ||
          (v == best_value && block > best_block);
      if (better) {
        best = child;
        best_value = v;
        best_block = block;
      }
    }
    policy.choice[id] = best;
    policy.values[id] = best_value;
  }
  return policy;
}

Decision Decide(const GameState& state, const LimitedForecastRule& rule) {
  if (state.IsTerminal()) {
    throw Error(ErrorCode::kState, "no decision in a terminal state");
  }
  const Subtree subtree = ExpandWithinBudget(state, rule.budget);
  Decision decision;
  decision.summary = {subtree.depth(), subtree.node_count(),
                      subtree.horizon_visible()};
  const Player mover = state.to_move();
  if (subtree.depth() == 0) {
    const std::vector<Move> legal = LegalMoves(state);
    decision.move = legal.front();
    decision.value = Phi(state, mover, rule.config).value;
    for (const Move& m : legal) decision.actions.push_back({m, std::nullopt, {}});
    return decision;
  }
  const Policy policy = Spe(subtree, rule.config, rule.tiebreak);
  decision.move = *subtree.node(policy.choice[0]).move;
  decision.value = policy.ValueTo(mover);
  for (int child : subtree.root().children) {
    decision.actions.push_back({*subtree.node(child).move,
                                policy.ValueTo(mover, child),
                                policy.PrincipalLine(subtree, child)});
  }
  return decision;
}

StrategyProfile MakeLimitedForecastProfile(
    const std::array<LimitedForecastRule, 2>& rules) {
  StrategyProfile profile;
  for (int i = 0; i < 2; ++i) {
    profile.rules[i] = [rule = rules[i]](const GameState& s) {
      return Decide(s, rule).move;
    };
  }
  return profile;
}

std::pair<Move, Forecast> LimitedForecastDecision(
    const GameState& state, const History& history,
    const std::array<LimitedForecastRule, 2>& rules) {
  const Decision decision = Decide(state, rules[PlayerIndex(state.to_move())]);
  std::vector<Move> actions;
  for (const ActionValue& av : decision.actions) actions.push_back(av.action);
  return {decision.move,
          MakeForecast(state, history, rules, decision, actions)};
}

std::pair<Move, Forecast> LimitedForecastDecision(
    const GameState& state, Budget budget, Recall recall,
    const GuidelineConfig& config) {
  const LimitedForecastRule rule{budget, recall, config,
                                 TieBreak::kBlockThenOrder};
  return LimitedForecastDecision(state, History{}, {rule, rule});
}

Path SolutionTrace::Realized() const {
  GameState state = InitialStateOf(*this);
  Path path(state);
  for (const PeriodRecord& r : periods) {
    ReplayStep(path.end_state(), r);
    path.Append(r.move);
  }
  return path;
}

std::vector<int> SolutionTrace::DepthsOf(Player p) const {
  std::vector<int> depths;
  for (const PeriodRecord& r : periods) {
    if (r.player == p) depths.push_back(r.forecast.summary.depth);
  }
  return depths;
}

SolutionTrace ConstructSolution(const Deal& deal,
                                const std::array<LimitedForecastRule, 2>& rules,
                                const OpeningRule& opening) {
  deal.Validate();
  const OpeningDecision od = Opening(deal, opening);
  SolutionTrace trace;
  trace.deal = deal;
  trace.opening = opening;
  trace.rules = rules;
  GameState state = GameState::Initial(deal, od.starter);
  History history;
  while (!state.IsTerminal()) {
    PeriodRecord record;
    record.period = state.period();
    record.player = state.to_move();
    const Decision decision = Decide(state, rules[PlayerIndex(state.to_move())]);
    if (od.forced && trace.periods.empty()) {
      record.forced = true;
      record.move = *od.forced;
      record.forecast = MakeForecast(state, history, rules, decision, {*od.forced});
      const auto& af = record.forecast.actions.front();
      record.value = af.value ? *af.value
                              : Phi(state, record.player,
                                    rules[PlayerIndex(record.player)].config)
                                    .value;
    } else {
      std::vector<Move> actions;
      for (const ActionValue& av : decision.actions) actions.push_back(av.action);
      record.move = decision.move;
      record.value = decision.value;
      record.forecast = MakeForecast(state, history, rules, decision, actions);
    }
    state = ApplyMove(state, record.move);
    record.ends_after = state.free_ends();
    history.moves.push_back({record.player, record.move});
    trace.periods.push_back(std::move(record));
  }
  trace.outcome = *TerminalOutcome(state);
  return trace;
}

SolutionTrace ConstructSolution(const Deal& deal, Budget c1, Budget c2,
                                const OpeningRule& opening,
                                const GuidelineConfig& config) {
  const LimitedForecastRule r1{c1, Recall::Unlimited(), config,
                               TieBreak::kBlockThenOrder};
  const LimitedForecastRule r2{c2, Recall::Unlimited(), config,
                               TieBreak::kBlockThenOrder};
  return ConstructSolution(deal, {r1, r2}, opening);
}

CheckResult CheckJustified(const SolutionTrace& trace) {
  const OpeningDecision od = Opening(trace.deal, trace.opening);
  GameState state = GameState::Initial(trace.deal, od.starter);
  for (const PeriodRecord& r : trace.periods) {
    if (state.IsTerminal() || r.player != state.to_move() ||
        r.period != state.period()) {
      ReplayStep(state, r);  // throws with context
    }
    const int t = r.period;
    if (r.forced) {
      if (!(od.forced && r.period == 1 && r.move == *od.forced)) {
        return CheckResult::Fail(t, "move marked forced but the opening rule "
                                    "does not force it",
                                 r.move);
      }
    } else {
      const Decision d = Decide(state, trace.rules[PlayerIndex(r.player)]);
      if (r.move != d.move) {
        const auto it = std::find_if(
            d.actions.begin(), d.actions.end(),
            [&](const ActionValue& av) { return av.action == r.move; });
        if (it == d.actions.end()) {
          return CheckResult::Fail(t, "recorded move is not legal", r.move);
        }
        if (it->value && *it->value < d.value) {
          return CheckResult::Fail(
              t, "recorded move " + r.move.ToString() + " is worth " +
                     FormatValue(*it->value) + " < SPE value " +
                     FormatValue(d.value) + " of " + d.move.ToString(),
              r.move);
        }
        return CheckResult::Fail(
            t, "recorded move " + r.move.ToString() +
                   " loses the tie-break to " + d.move.ToString(),
            r.move);
      }
      if (r.value != d.value) {
        return CheckResult::Fail(t, "recorded value " + FormatValue(r.value) +
                                        " differs from SPE value " +
                                        FormatValue(d.value));
      }
      if (!(r.forecast.summary == d.summary)) {
        return CheckResult::Fail(
            t, "recorded subtree (depth " +
                   std::to_string(r.forecast.summary.depth) + ", nodes " +
                   std::to_string(r.forecast.summary.node_count) +
                   ") differs from recomputed (depth " +
                   std::to_string(d.summary.depth) + ", nodes " +
                   std::to_string(d.summary.node_count) + ")");
      }
    }
    state = ReplayStep(state, r);
  }
  if (!state.IsTerminal()) {
    throw Error(ErrorCode::kTrace, "trace ends before the game does");
  }
  if (!(*TerminalOutcome(state) == trace.outcome)) {
    return CheckResult::Fail(state.period(),
                             "recorded outcome " + trace.outcome.ToString() +
                                 " differs from " +
                                 TerminalOutcome(state)->ToString());
  }
  return CheckResult::Pass();
}

CheckResult CheckConsistent(const SolutionTrace& trace) {
  const GameState origin = InitialStateOf(trace);
  const OpeningDecision od = Opening(trace.deal, trace.opening);
  const StrategyProfile profile = MakeLimitedForecastProfile(trace.rules);
  const std::vector<PlyMove> plies = RecordedPlies(trace);
  GameState state = origin;
  for (std::size_t i = 0; i < trace.periods.size(); ++i) {
    const PeriodRecord& r = trace.periods[i];
    const int t = r.period;
    if (state.IsTerminal() || r.player != state.to_move()) ReplayStep(state, r);
    const std::vector<Move> available =
        r.forced ? std::vector<Move>{*od.forced} : LegalMoves(state);
    if (r.forecast.actions.size() != available.size()) {
      return CheckResult::Fail(
          t, "forecast covers " + std::to_string(r.forecast.actions.size()) +
                 " actions, " + std::to_string(available.size()) +
                 " are available");
    }
    const History h_star{{plies.begin(), plies.begin() + i}};
    const std::size_t n = static_cast<std::size_t>(r.forecast.summary.depth);
    for (std::size_t k = 0; k < available.size(); ++k) {
      const ActionForecast& af = r.forecast.actions[k];
      if (af.action != available[k]) {
        return CheckResult::Fail(t, "forecast lists " + af.action.ToString() +
                                        " where " + available[k].ToString() +
                                        " was expected",
                                 af.action);
      }
      const Path expected = ContinuationPath(profile, origin, h_star, af.action);
      const Path truncated = TruncateFirst(expected, n);
      if (af.prediction.moves() != truncated.moves()) {
        std::string want;
        for (const auto& s : truncated.MoveStrings()) want += " [" + s + "]";
        std::string got;
        for (const auto& s : af.prediction.MoveStrings()) got += " [" + s + "]";
        return CheckResult::Fail(t, "prediction after " + af.action.ToString() +
                                        " is" + got + " but the profile plays" +
                                        want,
                                 af.action);
      }
    }
    state = ReplayStep(state, r);
  }
  return CheckResult::Pass();
}

const OracleEntry& OracleResult::EntryFor(const GameState& state) const {
  auto it = policy.find(state.Key());
  if (it == policy.end()) {
    throw Error(ErrorCode::kState,
                "state not covered by the oracle: " + state.ToString());
  }
  return it->second;
}

namespace {

class FullTreeSolver {
 public:
  FullTreeSolver(std::uint64_t cap, OracleResult& result)
      : cap_(cap), result_(result) {}

  int Solve(const GameState& state) {
    if (auto outcome = TerminalOutcome(state)) return outcome->payoff_p1;
    const std::string key = state.Key();
    if (auto it = result_.policy.find(key); it != result_.policy.end()) {
      return it->second.value_p1;
    }
    if (++result_.nodes > cap_) {
      throw Error(ErrorCode::kCapacity,
                  "full tree exceeds the oracle cap of " +
                      std::to_string(cap_) + " states");
    }
    const Player mover = state.to_move();
    const Player opponent = Opponent(mover);
    std::optional<OracleEntry> best;
    std::size_t best_replies = 0;
    for (const Move& m : LegalMoves(state)) {
      const GameState child = ApplyMove(state, m);
      const int v = Solve(child);
      const std::size_t replies =
          PlaceMoves(child.hand(opponent), child.free_ends()).size();
      const int own = mover == Player::kOne ? v : -v;
      const int best_own =
          best ? (mover == Player::kOne ? best->value_p1 : -best->value_p1) : 0;
      if (!best || own > best_own ||
          (own == best_own && replies < best_replies)) {
        best = OracleEntry{m, v};
        best_replies = replies;
      }
    }
    result_.policy.emplace(key, *best);
    return best->value_p1;
  }

 private:
  std::uint64_t cap_;
  OracleResult& result_;
};

}  // namespace

OracleResult SolveFullTree(const GameState& root, std::uint64_t cap) {
  OracleResult result;
  FullTreeSolver solver(cap, result);
  result.value_p1 = solver.Solve(root);
  Path principal(root);
  while (!principal.end_state().IsTerminal()) {
    principal.Append(result.EntryFor(principal.end_state()).move);
  }
  result.principal = std::move(principal);
  return result;
}

OracleResult FullTreeSpe(const Deal& deal, const OpeningRule& opening,
                         std::uint64_t cap) {
  deal.Validate();
  const OpeningDecision od = Opening(deal, opening);
  const GameState initial = GameState::Initial(deal, od.starter);
  if (!od.forced) return SolveFullTree(initial, cap);
  OracleResult result = SolveFullTree(ApplyMove(initial, *od.forced), cap);
  Path principal(initial);
  principal.Append(*od.forced);
  result.principal = Concat(principal, result.principal);
  return result;
}

}  // namespace dominoes
