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

#ifndef DOMINOES_TREE_H_
#define DOMINOES_TREE_H_

// Capability-bounded game-tree expansion and the path algebra used by
// forecasts: truncation to the first n / last N plies, concatenation, and
// continuation paths induced by a strategy profile.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dominoes/core_rules.h"

namespace dominoes {

struct PlyMove {
  Player player = Player::kOne;
  Move move = Move::Pass();
  friend bool operator==(const PlyMove&, const PlyMove&) = default;
};

// A stream of alternating plies played from `origin`. Construction and
// Append validate alternation and legality (kPath / kMove errors).
class Path {
 public:
  explicit Path(GameState origin);
  Path(GameState origin, const std::vector<PlyMove>& moves);

  const GameState& origin() const { return origin_; }
  const GameState& end_state() const { return end_; }
  const std::vector<PlyMove>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }

  void Append(const Move& move);
  std::vector<std::string> MoveStrings() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.origin_ == b.origin_ && a.moves_ == b.moves_;
  }

 private:
  GameState origin_;
  GameState end_;
  std::vector<PlyMove> moves_;
};

// [Q]_n
Path TruncateFirst(const Path& path, std::size_t n);
// [q]^N; the result's origin is the state after the dropped prefix.
Path TruncateLast(const Path& path, std::size_t n);
// (q, q'); kPath error unless q2 starts where q ends.
Path Concat(const Path& q, const Path& q2);

// Node-count capability c. Unlimited expands to terminals.
class Budget {
 public:
  static Budget Unlimited() { return Budget(); }
  static Budget Nodes(std::uint64_t c);
  // "<int>" or "inf".
  static Budget Parse(const std::string& text);

  bool unlimited() const { return !limit_; }
  std::uint64_t limit() const { return limit_.value_or(UINT64_MAX); }
  bool Admits(std::uint64_t nodes) const { return !limit_ || nodes <= *limit_; }
  std::string ToString() const;
  friend bool operator==(const Budget&, const Budget&) = default;

 private:
  Budget() = default;
  std::optional<std::uint64_t> limit_;
};

// Recall window N over past plies.
class Recall {
 public:
  static Recall Unlimited() { return Recall(); }
  static Recall Last(std::uint64_t n);
  static Recall Parse(const std::string& text);

  bool unlimited() const { return !window_; }
  std::uint64_t window() const { return window_.value_or(UINT64_MAX); }
  std::string ToString() const;
  friend bool operator==(const Recall&, const Recall&) = default;

 private:
  Recall() = default;
  std::optional<std::uint64_t> window_;
};

struct History {
  std::vector<PlyMove> moves;
  // The last N entries, [q]^N.
  std::vector<PlyMove> Recalled(const Recall& recall) const;
};

struct SubtreeNode {
  GameState state;
  std::optional<Move> move;  // edge from the parent; absent at the root
  int parent = -1;
  int level = 0;
  std::vector<int> children;
};

// Levels 1..depth of the game tree below `root`, each complete. Node 0 is
// the root; nodes are stored level by level, children in legal-move order.
class Subtree {
 public:
  const std::vector<SubtreeNode>& nodes() const { return nodes_; }
  const SubtreeNode& root() const { return nodes_.front(); }
  const SubtreeNode& node(int id) const { return nodes_[id]; }
  int depth() const { return depth_; }
  // Non-root nodes.
  std::uint64_t node_count() const { return nodes_.size() - 1; }
  bool horizon_visible() const { return horizon_visible_; }
  const Budget& budget() const { return budget_; }

 private:
  friend Subtree ExpandWithinBudget(const GameState& root, Budget budget);

  std::vector<SubtreeNode> nodes_;
  int depth_ = 0;
  bool horizon_visible_ = false;
  Budget budget_ = Budget::Unlimited();
};

// Deepest subtree whose levels 1..n are all complete and together hold at
// most c nodes. A level that does not fit is dropped entirely, so depth 0 is
// possible when the player's own moves already exceed c. kState error on a
// terminal root.
Subtree ExpandWithinBudget(const GameState& root, Budget budget);

// Breadth of levels 1..d of the full tree, stopping at the first empty level.
std::vector<std::uint64_t> CountLevelNodes(const GameState& root, int depth);

// One node per line: indentation by level, then level, move, free ends, id.
std::string DumpSubtree(const Subtree& subtree);

// Both players' decision rules; each maps a non-terminal state where that
// player moves to a move.
struct StrategyProfile {
  using Rule = std::function<Move(const GameState&)>;
  std::array<Rule, 2> rules;

  Move Choose(const GameState& state) const {
    return rules[PlayerIndex(state.to_move())](state);
  }
};

// Q(sigma | h* a): plays `action` after `h_star` (replayed from `origin`) and
// then follows `profile`. The returned path starts at the successor of
// `action`. Stops after `max_length` plies when given, which equals
// truncating the full continuation.
Path ContinuationPath(const StrategyProfile& profile, const GameState& origin,
                      const History& h_star, const Move& action,
                      std::optional<std::size_t> max_length = std::nullopt);

}  // namespace dominoes

#endif  // DOMINOES_TREE_H_
