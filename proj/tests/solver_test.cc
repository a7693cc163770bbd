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

#include <map>
#include <random>

#include "doctest.h"
#include "dominoes/error.h"
#include "dominoes/harness.h"
#include "test_util.h"

namespace dominoes {
namespace {

using testing::ReferenceRoot;

GameState Play(GameState s, std::initializer_list<const char*> moves) {
  for (const char* m : moves) s = ApplyMove(s, Move::Parse(m));
  return s;
}

std::vector<std::string> MoveStrings(const SolutionTrace& trace) {
  std::vector<std::string> out;
  for (const PeriodRecord& r : trace.periods) out.push_back(r.move.ToString());
  return out;
}

// Independent depth-limited minimax with pip-difference leaves, over the
// brute-force state. Value to `root_seat`.
int ShedMinimax(const brute_force::RawState& s, int depth, int root_seat) {
  using namespace brute_force;
  if (Terminal(s)) return root_seat == 0 ? Payoff(s) : -Payoff(s);
  if (depth == 0) return Pips(s.hands[1 - root_seat]) - Pips(s.hands[root_seat]);
  const bool maximize = s.mover == root_seat;
  int best = maximize ? -1000 : 1000;
  for (const RawMove& m : Moves(s)) {
    const int v = ShedMinimax(Apply(s, m), depth - 1, root_seat);
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

LimitedForecastRule RuleWith(Budget c) {
  return {c, Recall::Unlimited(), GuidelineConfig(), TieBreak::kBlockThenOrder};
}

TEST_CASE("SPE on player 2's first subtree") {
  const GameState s = Play(ReferenceRoot(), {"P 2-2@-"});
  const Subtree tree = ExpandWithinBudget(s, Budget::Nodes(6));
  REQUIRE(tree.depth() == 2);
  const Policy policy = Spe(tree, GuidelineConfig());
  CHECK(policy.root_player == Player::kTwo);

  // Independent oracle: player 1 replies, then pip difference for player 2.
  auto raw = testing::ToRaw(ReferenceDeal(), Player::kOne);
  raw = brute_force::Apply(raw, {false, {2, 2}, -1});
  const int via_02 = ShedMinimax(brute_force::Apply(raw, {false, {0, 2}, 2}), 1, 1);
  const int via_12 = ShedMinimax(brute_force::Apply(raw, {false, {1, 2}, 2}), 1, 1);
  CHECK(via_02 == -5);
  CHECK(via_12 == -4);

  const auto& kids = tree.root().children;
  REQUIRE(kids.size() == 2);
  CHECK(*tree.node(kids[0]).move == Move::Place(Tile(0, 2), 2));
  CHECK(policy.values[kids[0]] == via_02);
  CHECK(policy.values[kids[1]] == via_12);
  CHECK(policy.choice[0] == kids[1]);
  CHECK(policy.ValueTo(Player::kTwo) == -4);
  CHECK(policy.ValueTo(Player::kOne) == 4);
  CHECK(policy.PrincipalLine(tree).size() == 2);
}

TEST_CASE("SPE values match the independent minimax on random subtrees") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Deal deal = DealRandom(StandardSet(3), 4, rng());
    const Player starter = rng() % 2 ? Player::kOne : Player::kTwo;
    const Subtree tree = ExpandWithinBudget(GameState::Initial(deal, starter),
                                            Budget::Nodes(2 + rng() % 60));
    if (tree.depth() == 0) continue;
    const Policy policy = Spe(tree, GuidelineConfig());
    const int expected = ShedMinimax(testing::ToRaw(deal, starter), tree.depth(),
                                     PlayerIndex(starter));
    CHECK(policy.values[0] == expected);
  }
}

TEST_CASE("equal values fall to the blocking tie-break") {
  const GameState s = Play(ReferenceRoot(), {"P 2-2@-", "P 1-2@2", "P 0-1@1"});
  const Subtree tree = ExpandWithinBudget(s, Budget::Nodes(6));
  const Policy policy = Spe(tree, GuidelineConfig());
  const auto& kids = tree.root().children;
  CHECK(policy.values[kids[0]] == policy.values[kids[1]]);
  CHECK(policy.ValueTo(Player::kTwo) == -2);
  // Leaving [2,2] locks player 1's (0,0).
  CHECK(*tree.node(policy.choice[0]).move == Move::Place(Tile(0, 2), 0));

  const Policy plain = Spe(tree, GuidelineConfig(), TieBreak::kFirstInOrder);
  CHECK(*tree.node(plain.choice[0]).move == Move::Place(Tile(0, 2), 0));
}

TEST_CASE("a depth-1 subtree is an argmax of phi") {
  const Subtree tree = ExpandWithinBudget(ReferenceRoot(), Budget::Nodes(6));
  const Policy policy = Spe(tree, GuidelineConfig());
  double best = -1e9;
  for (int child : tree.root().children) {
    best = std::max(best, Phi(tree.node(child).state, Player::kOne, GuidelineConfig()).value);
  }
  CHECK(policy.values[0] == best);
  CHECK(*tree.node(policy.choice[0]).move == Move::Opening(Tile(2, 2)));
}

TEST_CASE("limited forecast decisions of the worked example") {
  const auto [m1, f1] = LimitedForecastDecision(ReferenceRoot(), Budget::Nodes(6),
                                                Recall::Unlimited(), GuidelineConfig());
  CHECK(m1 == Move::Opening(Tile(2, 2)));
  CHECK(f1.summary.depth == 1);
  CHECK(f1.actions.size() == 3);
  for (const ActionForecast& af : f1.actions) {
    CHECK(af.prediction.size() == 1);  // n = 1 ply after her own move
    CHECK(af.belief.empty());          // nothing of it inside her subtree
  }

  const GameState t3 = Play(ReferenceRoot(), {"P 2-2@-", "P 1-2@2"});
  const auto [m3, f3] = LimitedForecastDecision(t3, Budget::Nodes(6),
                                                Recall::Unlimited(), GuidelineConfig());
  CHECK(m3 == Move::Place(Tile(0, 1), 1));
  CHECK(f3.summary.horizon_visible);
  CHECK(f3.summary.depth == 4);
  REQUIRE(f3.actions.size() == 1);
  CHECK(*f3.actions[0].value == 2);
  // Terminal within three plies: shorter than n.
  CHECK(f3.actions[0].prediction.MoveStrings() ==
        std::vector<std::string>{"P 0-2@0", "pass", "pass"});

  // A forced move is played whatever the weights.
  for (const auto& config : {GuidelineConfig(), GuidelineConfig::FromWeights(-1, 0, 0),
                             GuidelineConfig::FromWeights(0, 0, 5)}) {
    CHECK(LimitedForecastDecision(t3, Budget::Nodes(1), Recall::Last(0), config).first ==
          Move::Place(Tile(0, 1), 1));
  }
  CHECK_THROWS_AS(Decide(Play(t3, {"P 0-1@1", "P 0-2@0", "pass", "pass"}), RuleWith(Budget::Nodes(6))),
                  Error);
}

TEST_CASE("golden trace of the worked example") {
  const SolutionTrace trace = TraceReferenceExample();
  CHECK(MoveStrings(trace) == std::vector<std::string>{
                                  "P 2-2@-", "P 1-2@2", "P 0-1@1", "P 0-2@0",
                                  "pass", "pass"});
  CHECK(trace.periods[3].ends_after == FreeEnds{2, 2});
  CHECK(trace.outcome.kind == Outcome::Kind::kBlocked);
  CHECK(trace.outcome.payoff_p1 == 2);
  // Player 2's second subtree holds the rest of the game: 2 + 2 + 1 nodes.
  CHECK(trace.DepthsOf(Player::kOne) == std::vector<int>{1, 4, 2});
  CHECK(trace.DepthsOf(Player::kTwo) == std::vector<int>{2, 3, 1});
  CHECK(trace.periods[1].value == -4);
  CHECK(trace.periods[2].value == 2);
  CHECK(trace.periods[3].value == -2);
  CHECK(trace.Realized().end_state().IsTerminal());
  CHECK(CheckJustified(trace).passed);
  CHECK(CheckConsistent(trace).passed);
}

TEST_CASE("unlimited budgets play the full-tree line") {
  const SolutionTrace trace =
      ConstructSolution(ReferenceDeal(), Budget::Unlimited(), Budget::Unlimited(),
                        OpeningRule::FreeChoice(Player::kOne), GuidelineConfig());
  const int exact = brute_force::Negamax(testing::ToRaw(ReferenceDeal(), Player::kOne));
  CHECK(exact == 2);
  CHECK(trace.periods.front().move == Move::Opening(Tile(0, 0)));
  CHECK(trace.outcome.payoff_p1 == exact);
  const OracleResult oracle =
      FullTreeSpe(ReferenceDeal(), OpeningRule::FreeChoice(Player::kOne));
  CHECK(trace.Realized().moves() == oracle.principal.moves());
}

TEST_CASE("justification checker") {
  SolutionTrace trace = TraceReferenceExample();
  SUBCASE("tampered reply") {
    trace.periods[1].move = Move::Place(Tile(0, 2), 2);
    const CheckResult r = CheckJustified(trace);
    CHECK_FALSE(r.passed);
    CHECK(r.period == 2);
    CHECK(r.message.find("-5 < SPE value -4") != std::string::npos);
  }
  SUBCASE("tie-break violation") {
    trace.periods[3].move = Move::Place(Tile(0, 2), 2);
    trace.periods.resize(4);
    const CheckResult r = CheckJustified(trace);
    CHECK_FALSE(r.passed);
    CHECK(r.period == 4);
    CHECK(r.message.find("tie-break") != std::string::npos);
  }
  SUBCASE("single-move periods") {
    // Corrupt a later choice: the forced periods before it still pass.
    trace.periods[5].value = 99;
    const CheckResult r = CheckJustified(trace);
    CHECK(r.period == 6);
  }
  SUBCASE("unreplayable") {
    trace.periods[2].player = Player::kTwo;
    CHECK_THROWS_AS(CheckJustified(trace), Error);
  }
}

TEST_CASE("consistency checker") {
  SolutionTrace trace = TraceReferenceExample();
  SUBCASE("off-path prediction tampered") {
    // Period 1, the unplayed opening (0,1).
    ActionForecast& af = trace.periods[0].forecast.actions[1];
    REQUIRE(af.action == Move::Opening(Tile(0, 1)));
    const GameState origin = af.prediction.origin();
    const std::vector<Move> legal = LegalMoves(origin);
    REQUIRE(legal.size() > 1);
    const Move other = legal[0] == af.prediction.moves()[0].move ? legal[1] : legal[0];
    af.prediction = Path(origin, {{Player::kTwo, other}});
    const CheckResult r = CheckConsistent(trace);
    CHECK_FALSE(r.passed);
    CHECK(r.period == 1);
    CHECK(r.action == Move::Opening(Tile(0, 1)));
  }
  SUBCASE("missing action") {
    trace.periods[1].forecast.actions.pop_back();
    CHECK(CheckConsistent(trace).period == 2);
  }
  SUBCASE("short predictions near the end") {
    const PeriodRecord& last = trace.periods.back();
    CHECK(last.forecast.summary.depth == 1);
    CHECK(last.forecast.actions[0].prediction.empty());
    CHECK(CheckConsistent(trace).passed);
  }
}

TEST_CASE("biggest-double opening is recorded as forced") {
  const SolutionTrace trace =
      ConstructSolution(ReferenceDeal(), Budget::Nodes(6), Budget::Nodes(6),
                        OpeningRule::BiggestDoubleForced(), GuidelineConfig());
  REQUIRE(!trace.periods.empty());
  CHECK(trace.periods[0].forced);
  CHECK(trace.periods[0].move == Move::Opening(Tile(2, 2)));
  CHECK(trace.periods[0].forecast.actions.size() == 1);
  CHECK(CheckJustified(trace).passed);
  CHECK(CheckConsistent(trace).passed);

  // Claiming a forced move the rule does not force is caught.
  SolutionTrace bogus = TraceReferenceExample();
  bogus.periods[0].forced = true;
  CHECK_FALSE(CheckJustified(bogus).passed);
}

TEST_CASE("full-tree oracle") {
  const OracleResult r =
      FullTreeSpe(ReferenceDeal(), OpeningRule::FreeChoice(Player::kOne));
  CHECK(r.value_p1 == 2);
  CHECK(r.principal.moves().front().move == Move::Opening(Tile(0, 0)));
  CHECK(TerminalOutcome(r.principal.end_state())->payoff_p1 == 2);

  for (const Deal& d : testing::AllDoubleTwoDeals()) {
    for (Player starter : {Player::kOne, Player::kTwo}) {
      const OracleResult o = FullTreeSpe(d, OpeningRule::FreeChoice(starter));
      CHECK(o.value_p1 == brute_force::Negamax(testing::ToRaw(d, starter)));
      CHECK(TerminalOutcome(o.principal.end_state())->payoff_p1 == o.value_p1);
    }
  }

  const OracleResult forced =
      FullTreeSpe(ReferenceDeal(), OpeningRule::BiggestDoubleForced());
  CHECK(forced.principal.moves().front().move == Move::Opening(Tile(2, 2)));
  auto raw = testing::ToRaw(ReferenceDeal(), Player::kOne);
  CHECK(forced.value_p1 ==
        brute_force::Negamax(brute_force::Apply(raw, {false, {2, 2}, -1})));

  try {
    FullTreeSpe(DealRandom(StandardSet(6), 7, 1), OpeningRule::FreeChoice(Player::kOne), 1000);
    FAIL("expected a capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapacity);
  }
}

TEST_CASE("forced line: the other hand never plays") {
  Deal d;
  d.max_pip = 3;
  d.hands = {Hand{{0, 0}, {0, 1}}, Hand{{2, 2}, {3, 3}}};
  const OracleResult r = FullTreeSpe(d, OpeningRule::FreeChoice(Player::kOne));
  // Player 1 runs out with player 2 stuck on 10 pips.
  CHECK(r.value_p1 == 10);
}

TEST_CASE("traces are (c1, c2)-solutions") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 12; ++i) {
    const Deal deal = DealRandom(StandardSet(3), 4, rng());
    const Budget c1 = Budget::Nodes(2 + rng() % 20);
    const Budget c2 = Budget::Nodes(2 + rng() % 20);
    const SolutionTrace t = ConstructSolution(deal, c1, c2,
                                              OpeningRule::FreeChoice(Player::kOne),
                                              GuidelineConfig());
    CHECK(CheckJustified(t).passed);
    CHECK(CheckConsistent(t).passed);
    CHECK(*TerminalOutcome(t.Realized().end_state()) == t.outcome);

    // Depths grow until the horizon is in sight; afterwards they are bounded
    // by what is left of the game.
    const Path realized = t.Realized();
    for (Player p : {Player::kOne, Player::kTwo}) {
      std::optional<int> previous;
      bool seen_horizon = false;
      for (std::size_t k = 0; k < t.periods.size(); ++k) {
        const PeriodRecord& r = t.periods[k];
        if (r.player != p) continue;
        const SubtreeSummary& s = r.forecast.summary;
        if (seen_horizon) {
          CHECK((static_cast<std::size_t>(s.depth) <= realized.size() - k ||
                 s.depth <= previous.value_or(0)));
        } else if (previous && !s.horizon_visible && s.depth != 0) {
          CHECK(s.depth >= *previous);
        }
        seen_horizon = seen_horizon || s.horizon_visible;
        previous = s.depth;
      }
    }
  }
}

TEST_CASE("decisions ignore how a state was reached") {
  // Enumerate four plies deep and group positions by their future-relevant key.
  const Deal deal = DealRandom(StandardSet(3), 4, 2024);
  std::map<std::string, std::vector<std::pair<GameState, History>>> by_key;
  std::vector<std::pair<GameState, History>> level{{GameState::Initial(deal, Player::kOne), {}}};
  for (int d = 0; d < 4; ++d) {
    std::vector<std::pair<GameState, History>> next;
    for (const auto& [s, h] : level) {
      if (s.IsTerminal()) continue;
      for (const Move& m : LegalMoves(s)) {
        History h2 = h;
        h2.moves.push_back({s.to_move(), m});
        next.emplace_back(ApplyMove(s, m), h2);
      }
    }
    level = std::move(next);
  }
  for (const auto& entry : level) by_key[entry.first.Key()].push_back(entry);
  int pairs = 0;
  const LimitedForecastRule rule = RuleWith(Budget::Nodes(12));
  for (const auto& [key, group] : by_key) {
    if (group.size() < 2 || group[0].first.IsTerminal()) continue;
    const Move expected =
        LimitedForecastDecision(group[0].first, group[0].second, {rule, rule}).first;
    for (std::size_t k = 1; k < group.size(); ++k) {
      CHECK(LimitedForecastDecision(group[k].first, group[k].second, {rule, rule}).first ==
            expected);
      ++pairs;
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("recall truncates the conditioning history") {
  const GameState s = Play(ReferenceRoot(), {"P 2-2@-", "P 1-2@2"});
  const History h{{{Player::kOne, Move::Opening(Tile(2, 2))},
                   {Player::kTwo, Move::Place(Tile(1, 2), 2)}}};
  LimitedForecastRule rule = RuleWith(Budget::Nodes(6));
  rule.recall = Recall::Last(1);
  const auto [move, forecast] = LimitedForecastDecision(s, h, {rule, rule});
  CHECK(forecast.recalled_history == std::vector<PlyMove>{h.moves.back()});
  rule.recall = Recall::Unlimited();
  CHECK(LimitedForecastDecision(s, h, {rule, rule}).first == move);
}

TEST_CASE("tie-break names") {
  CHECK(ParseTieBreak(TieBreakName(TieBreak::kFirstInOrder)) == TieBreak::kFirstInOrder);
  CHECK_THROWS_AS(ParseTieBreak("coin"), Error);
}

}  // namespace
}  // namespace dominoes
