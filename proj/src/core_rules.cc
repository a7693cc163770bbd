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

#include "dominoes/core_rules.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

#include "dominoes/error.h"

namespace dominoes {
namespace {

int ParseInt(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParameter,
                "cannot parse " + std::string(what) + " from '" +
                    std::string(text) + "'");
  }
  return value;
}

Hand& MutableHand(std::array<Hand, 2>& hands, Player p) {
  return hands[PlayerIndex(p)];
}

}  // namespace

Player PlayerFromNumber(int number) {
  if (number != 1 && number != 2) {
    throw Error(ErrorCode::kParameter,
                "player must be 1 or 2, got " + std::to_string(number));
  }
  return static_cast<Player>(number);
}

std::string Tile::ToString() const {
  return std::to_string(low) + "-" + std::to_string(high);
}

TileSet StandardSet(int max_pip) {
  if (max_pip < 0 || max_pip > kMaxPipLimit) {
    throw Error(ErrorCode::kParameter,
                "max_pip must be in [0, " + std::to_string(kMaxPipLimit) +
                    "], got " + std::to_string(max_pip));
  }
  TileSet set;
  set.max_pip = max_pip;
  for (int a = 0; a <= max_pip; ++a) {
    for (int b = a; b <= max_pip; ++b) set.tiles.emplace_back(a, b);
  }
  return set;
}

void Deal::Validate() const {
  if (max_pip < 0 || max_pip > kMaxPipLimit) {
    throw Error(ErrorCode::kParameter, "deal max_pip out of range");
  }
  if (hands[0].size() != hands[1].size()) {
    throw Error(ErrorCode::kParameter, "hands must have equal size");
  }
  if (hands[0].empty()) {
    throw Error(ErrorCode::kParameter, "hands must not be empty");
  }
  std::set<Tile> seen;
  for (const Hand& hand : hands) {
    for (const Tile& t : hand) {
      if (t.high > max_pip) {
        throw Error(ErrorCode::kParameter,
                    "tile " + t.ToString() + " exceeds max_pip " +
                        std::to_string(max_pip));
      }
      if (!seen.insert(t).second) {
        throw Error(ErrorCode::kParameter,
                    "tile " + t.ToString() + " dealt twice");
      }
    }
  }
}

Deal DealRandom(const TileSet& set, int per_player, std::uint64_t seed) {
  if (per_player < 1 ||
      2 * static_cast<std::size_t>(per_player) > set.tiles.size()) {
    throw Error(ErrorCode::kParameter,
                "cannot deal " + std::to_string(per_player) +
                    " tiles per player from a set of " +
                    std::to_string(set.tiles.size()));
  }
  std::vector<Tile> tiles = set.tiles;
  // Explicit Fisher-Yates so a seed maps to the same deal on every standard
  // library.
  std::mt19937_64 rng(seed);
  for (std::size_t i = tiles.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(tiles[i], tiles[j]);
  }
  Deal deal;
  deal.max_pip = set.max_pip;
  deal.hands[0].assign(tiles.begin(), tiles.begin() + per_player);
  deal.hands[1].assign(tiles.begin() + per_player,
                       tiles.begin() + 2 * per_player);
  std::sort(deal.hands[0].begin(), deal.hands[0].end());
  std::sort(deal.hands[1].begin(), deal.hands[1].end());
  return deal;
}

Move Move::Parse(std::string_view text) {
  if (text == "pass") return Pass();
  if (text.size() < 3 || text.substr(0, 2) != "P ") {
    throw Error(ErrorCode::kParameter,
                "bad move '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(2);
  const auto dash = body.find('-');
  const auto at = body.find('@');
  if (dash == std::string_view::npos || at == std::string_view::npos ||
      at < dash) {
    throw Error(ErrorCode::kParameter,
                "bad move '" + std::string(text) + "'");
  }
  const int a = ParseInt(body.substr(0, dash), "pip");
  const int b = ParseInt(body.substr(dash + 1, at - dash - 1), "pip");
  if (a < 0 || b < 0 || a > kMaxPipLimit || b > kMaxPipLimit) {
    throw Error(ErrorCode::kParameter, "pip out of range in move");
  }
  const std::string_view end = body.substr(at + 1);
  if (end == "-") return Opening(Tile(a, b));
  const int e = ParseInt(end, "end");
  if (e < 0 || e > kMaxPipLimit) {
    throw Error(ErrorCode::kParameter, "end out of range in move");
  }
  return Place(Tile(a, b), static_cast<Pip>(e));
}

std::string Move::ToString() const {
  if (is_pass()) return "pass";
  return "P " + tile_.ToString() + "@" +
         (end_ ? std::to_string(*end_) : std::string("-"));
}

GameState GameState::Initial(const Deal& deal, Player starter) {
  deal.Validate();
  GameState state;
  state.max_pip_ = deal.max_pip;
  state.hands_ = deal.hands;
  for (Hand& h : state.hands_) std::sort(h.begin(), h.end());
  state.to_move_ = starter;
  return state;
}

std::optional<FreeEnds> GameState::free_ends() const {
  if (train_.empty()) return std::nullopt;
  return FreeEnds{train_.front().left, train_.back().right};
}

bool GameState::IsTerminal() const {
  return hands_[0].empty() || hands_[1].empty() || consecutive_passes_ >= 2;
}

std::string GameState::Key() const {
  std::string key;
  key.reserve(hands_[0].size() * 2 + hands_[1].size() * 2 + 8);
  for (const Hand& h : hands_) {
    for (const Tile& t : h) {
      key.push_back(static_cast<char>('A' + t.low));
      key.push_back(static_cast<char>('A' + t.high));
    }
    key.push_back('|');
  }
  if (auto ends = free_ends()) {
    // Ends as a multiset: orientation does not affect play.
    key.push_back(static_cast<char>('A' + std::min(ends->first, ends->second)));
    key.push_back(static_cast<char>('A' + std::max(ends->first, ends->second)));
  } else {
    key.push_back('.');
  }
  key.push_back(static_cast<char>('0' + PlayerNumber(to_move_)));
  key.push_back(static_cast<char>('0' + consecutive_passes_));
  return key;
}

std::string GameState::ToString() const {
  std::ostringstream out;
  out << "t=" << period_ << " to_move=" << PlayerNumber(to_move_)
      << " passes=" << consecutive_passes_ << " ends=";
  if (auto ends = free_ends()) {
    out << "[" << int{ends->first} << "," << int{ends->second} << "]";
  } else {
    out << "[]";
  }
  for (Player p : {Player::kOne, Player::kTwo}) {
    out << " p" << PlayerNumber(p) << "={";
    const Hand& h = hand(p);
    for (std::size_t i = 0; i < h.size(); ++i) {
      out << (i ? "," : "") << h[i].ToString();
    }
    out << "}";
  }
  return out.str();
}

std::string OpeningRule::ToString() const {
  if (kind == Kind::kBiggestDoubleForced) return "double";
  return "free:" + std::to_string(PlayerNumber(starter));
}

OpeningRule OpeningRule::Parse(std::string_view text) {
  if (text == "double") return BiggestDoubleForced();
  if (text == "free:1") return FreeChoice(Player::kOne);
  if (text == "free:2") return FreeChoice(Player::kTwo);
  throw Error(ErrorCode::kParameter,
              "opening must be 'double', 'free:1' or 'free:2', got '" +
                  std::string(text) + "'");
}

OpeningDecision Opening(const Deal& deal, const OpeningRule& rule) {
  if (rule.kind == OpeningRule::Kind::kStarterFreeChoice) {
    return {rule.starter, std::nullopt};
  }
  std::optional<std::pair<Tile, Player>> best;
  for (Player p : {Player::kOne, Player::kTwo}) {
    for (const Tile& t : deal.hand(p)) {
      if (t.IsDouble() && (!best || best->first < t)) best.emplace(t, p);
    }
  }
  if (!best) {
    throw Error(ErrorCode::kRule,
                "biggest-double opening needs a double in some hand");
  }
  return {best->second, Move::Opening(best->first)};
}

std::vector<Move> PlaceMoves(const Hand& hand,
                             const std::optional<FreeEnds>& ends) {
  std::vector<Move> moves;
  if (!ends) {
    for (const Tile& t : hand) moves.push_back(Move::Opening(t));
  } else {
    for (const Tile& t : hand) {
      std::vector<std::pair<Pip, Pip>> seen;
      for (Pip end : {std::min(ends->first, ends->second),
                      std::max(ends->first, ends->second)}) {
        if (!t.Matches(end)) continue;
        const Pip kept = end == ends->first ? ends->second : ends->first;
        const Pip exposed = t.OtherSide(end);
        const std::pair<Pip, Pip> result{std::min(kept, exposed),
                                         std::max(kept, exposed)};
        if (std::find(seen.begin(), seen.end(), result) != seen.end()) {
          continue;
        }
        seen.push_back(result);
        moves.push_back(Move::Place(t, end));
      }
    }
  }
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  return moves;
}

std::vector<Move> LegalMoves(const GameState& state) {
  if (state.IsTerminal()) {
    throw Error(ErrorCode::kState,
                "no legal moves in terminal state " + state.ToString());
  }
  std::vector<Move> moves =
      PlaceMoves(state.hand(state.to_move()), state.free_ends());
  if (moves.empty()) moves.push_back(Move::Pass());
  return moves;
}

GameState ApplyMove(const GameState& state, const Move& move) {
  if (state.IsTerminal()) {
    throw Error(ErrorCode::kState, "cannot move in terminal state");
  }
  const std::vector<Move> legal = LegalMoves(state);
  if (std::find(legal.begin(), legal.end(), move) == legal.end()) {
    throw Error(ErrorCode::kMove, "illegal move '" + move.ToString() +
                                      "' in state " + state.ToString());
  }
  GameState next = state;
  if (move.is_pass()) {
    ++next.consecutive_passes_;
  } else {
    Hand& hand = MutableHand(next.hands_, state.to_move());
    hand.erase(std::find(hand.begin(), hand.end(), move.tile()));
    const Tile t = move.tile();
    if (next.train_.empty()) {
      next.train_.push_back({t.low, t.high});
    } else if (next.train_.back().right == *move.end()) {
      // The right end is preferred when both ends carry the value.
      next.train_.push_back({*move.end(), t.OtherSide(*move.end())});
    } else {
      next.train_.insert(next.train_.begin(),
                         {t.OtherSide(*move.end()), *move.end()});
    }
    next.consecutive_passes_ = 0;
  }
  next.to_move_ = Opponent(state.to_move());
  ++next.period_;
  return next;
}

std::string Outcome::ToString() const {
  std::string text = kind == Kind::kDomino ? "domino" : "blocked";
  text += winner ? " winner=" + std::to_string(PlayerNumber(*winner))
                 : std::string(" draw");
  text += " payoff_p1=" + std::to_string(payoff_p1);
  return text;
}

std::optional<Outcome> TerminalOutcome(const GameState& state) {
  const int pips1 = PipSum(state.hand(Player::kOne));
  const int pips2 = PipSum(state.hand(Player::kTwo));
  for (Player p : {Player::kOne, Player::kTwo}) {
    if (state.hand(p).empty()) {
      const int gain = PipSum(state.hand(Opponent(p)));
      return Outcome{Outcome::Kind::kDomino, p,
                     p == Player::kOne ? gain : -gain};
    }
  }
  if (state.consecutive_passes() >= 2) {
    Outcome out{Outcome::Kind::kBlocked, std::nullopt, pips2 - pips1};
    if (pips1 < pips2) out.winner = Player::kOne;
    if (pips2 < pips1) out.winner = Player::kTwo;
    return out;
  }
  return std::nullopt;
}

int PipSum(const Hand& hand) {
  int sum = 0;
  for (const Tile& t : hand) sum += t.PipValue();
  return sum;
}

std::string TranscriptLine(int period, Player player, const Move& move,
                           const GameState& after) {
  std::ostringstream out;
  out << period << " " << PlayerNumber(player) << " " << move.ToString()
      << " ";
  if (auto ends = after.free_ends()) {
    out << "[" << int{ends->first} << "," << int{ends->second} << "]";
  } else {
    out << "[]";
  }
  return out.str();
}

}  // namespace dominoes
