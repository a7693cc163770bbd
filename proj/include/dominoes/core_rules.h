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

#ifndef DOMINOES_CORE_RULES_H_
#define DOMINOES_CORE_RULES_H_

// Two-player draw dominoes without a boneyard: tiles are dealt once, players
// alternately attach a tile to one of the two free ends of the train, a
// player who cannot attach must pass, and the game ends when a hand is empty
// ("domino") or both players pass in a row ("blocked").

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dominoes {

using Pip = std::uint8_t;

inline constexpr int kMaxPipLimit = 18;

enum class Player : std::uint8_t { kOne = 1, kTwo = 2 };

inline constexpr Player Opponent(Player p) {
  return p == Player::kOne ? Player::kTwo : Player::kOne;
}
inline constexpr int PlayerIndex(Player p) { return static_cast<int>(p) - 1; }
inline constexpr int PlayerNumber(Player p) { return static_cast<int>(p); }
Player PlayerFromNumber(int number);

// Canonical tile: low <= high.
struct Tile {
  Pip low = 0;
  Pip high = 0;

  constexpr Tile() = default;
  constexpr Tile(int a, int b)
      : low(static_cast<Pip>(a < b ? a : b)),
        high(static_cast<Pip>(a < b ? b : a)) {}

  constexpr bool IsDouble() const { return low == high; }
  constexpr int PipValue() const { return low + high; }
  constexpr bool Matches(int end) const { return low == end || high == end; }
  // Pip value left exposed when this tile is attached on `end`.
  constexpr Pip OtherSide(int end) const { return low == end ? high : low; }

  friend constexpr auto operator<=>(const Tile&, const Tile&) = default;
  std::string ToString() const;  // "a-b"
};

using Hand = std::vector<Tile>;

struct TileSet {
  int max_pip = 0;
  std::vector<Tile> tiles;
};

TileSet StandardSet(int max_pip);

struct Deal {
  int max_pip = 0;
  std::array<Hand, 2> hands;

  const Hand& hand(Player p) const { return hands[PlayerIndex(p)]; }
  // Throws kParameter if hands overlap, differ in size or contain a tile
  // outside the double-max_pip set.
  void Validate() const;
  friend bool operator==(const Deal&, const Deal&) = default;
};

// Deterministic for a given seed. Undealt tiles are discarded.
Deal DealRandom(const TileSet& set, int per_player, std::uint64_t seed);

class Move {
 public:
  enum class Kind : std::uint8_t { kPlace, kPass };

  static Move Place(Tile tile, Pip end) { return Move(Kind::kPlace, tile, end); }
  // First tile of the train; it does not attach to any end.
  static Move Opening(Tile tile) {
    return Move(Kind::kPlace, tile, std::nullopt);
  }
  static Move Pass() { return Move(Kind::kPass, Tile(), std::nullopt); }

  // "P a-b@e", "P a-b@-" for an opening placement, or "pass".
  static Move Parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_pass() const { return kind_ == Kind::kPass; }
  Tile tile() const { return tile_; }
  std::optional<Pip> end() const { return end_; }
  std::string ToString() const;

  friend auto operator<=>(const Move&, const Move&) = default;

 private:
  Move(Kind kind, Tile tile, std::optional<Pip> end)
      : kind_(kind), tile_(tile), end_(end) {}

  // Member order gives the legal-move ordering: places by tile then end,
  // pass last.
  Kind kind_;
  Tile tile_;
  std::optional<Pip> end_;
};

// A tile on the table as it reads left to right.
struct PlacedTile {
  Pip left = 0;
  Pip right = 0;
  friend bool operator==(const PlacedTile&, const PlacedTile&) = default;
};

using FreeEnds = std::pair<Pip, Pip>;

class GameState {
 public:
  static GameState Initial(const Deal& deal, Player starter);

  const Hand& hand(Player p) const { return hands_[PlayerIndex(p)]; }
  const std::vector<PlacedTile>& train() const { return train_; }
  // Left and right endpoint values; absent while the train is empty.
  std::optional<FreeEnds> free_ends() const;
  Player to_move() const { return to_move_; }
  int consecutive_passes() const { return consecutive_passes_; }
  int period() const { return period_; }
  int max_pip() const { return max_pip_; }

  bool IsTerminal() const;

  // Compact encoding of everything that affects future play (hands, free
  // ends, mover, pass counter). Train layout and period are excluded.
  std::string Key() const;
  std::string ToString() const;

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  friend GameState ApplyMove(const GameState& state, const Move& move);

  int max_pip_ = 0;
  std::array<Hand, 2> hands_;
  std::vector<PlacedTile> train_;
  Player to_move_ = Player::kOne;
  int consecutive_passes_ = 0;
  int period_ = 1;
};

struct OpeningRule {
  enum class Kind : std::uint8_t { kBiggestDoubleForced, kStarterFreeChoice };
  Kind kind = Kind::kStarterFreeChoice;
  Player starter = Player::kOne;

  static OpeningRule BiggestDoubleForced() {
    return {Kind::kBiggestDoubleForced, Player::kOne};
  }
  static OpeningRule FreeChoice(Player starter) {
    return {Kind::kStarterFreeChoice, starter};
  }
  // "double" or "free:1" / "free:2".
  static OpeningRule Parse(std::string_view text);
  std::string ToString() const;
  friend bool operator==(const OpeningRule&, const OpeningRule&) = default;
};

struct OpeningDecision {
  Player starter = Player::kOne;
  std::optional<Move> forced;
};

// kRule error when the biggest-double rule finds no double in either hand.
OpeningDecision Opening(const Deal& deal, const OpeningRule& rule);

// Places sorted by (tile, end value), deduplicated so that two placements of
// the same tile leaving the same free-end multiset count once. Exactly
// {Pass} when nothing can be placed. kState error on terminal states.
std::vector<Move> LegalMoves(const GameState& state);

// Placements available to `hand` on `ends` (all held tiles on an empty
// train). Usable on terminal states; never includes Pass.
std::vector<Move> PlaceMoves(const Hand& hand,
                             const std::optional<FreeEnds>& ends);

// kMove error when `move` is not legal in `state`.
GameState ApplyMove(const GameState& state, const Move& move);

struct Outcome {
  enum class Kind : std::uint8_t { kDomino, kBlocked };
  Kind kind = Kind::kBlocked;
  std::optional<Player> winner;  // absent for a blocked draw
  int payoff_p1 = 0;

  int PayoffTo(Player p) const {
    return p == Player::kOne ? payoff_p1 : -payoff_p1;
  }
  std::string ToString() const;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Domino: winner collects the opponent's pip sum. Blocked: the lower pip sum
// wins the difference; equal sums draw.
std::optional<Outcome> TerminalOutcome(const GameState& state);

int PipSum(const Hand& hand);

// "t p move [l,r]" transcript line for the ply that produced `after`.
std::string TranscriptLine(int period, Player player, const Move& move,
                           const GameState& after);

}  // namespace dominoes

#endif  // DOMINOES_CORE_RULES_H_
