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

#include "dominoes/tree.h"

#include <charconv>
#include <sstream>

#include "dominoes/error.h"

namespace dominoes {
namespace {

std::optional<std::uint64_t> ParseBound(const std::string& text,
                                        const char* what) {
  if (text == "inf") return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParameter,
                std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

}  // namespace

Path::Path(GameState origin) : origin_(origin), end_(std::move(origin)) {}

Path::Path(GameState origin, const std::vector<PlyMove>& moves)
    : Path(std::move(origin)) {
  for (const PlyMove& ply : moves) {
    if (ply.player != end_.to_move()) {
      throw Error(ErrorCode::kPath,
                  "ply " + ply.move.ToString() + " attributed to player " +
                      std::to_string(PlayerNumber(ply.player)) +
                      " but player " +
                      std::to_string(PlayerNumber(end_.to_move())) +
                      " is to move");
    }
    Append(ply.move);
  }
}

void Path::Append(const Move& move) {
  const Player mover = end_.to_move();
  end_ = ApplyMove(end_, move);
  moves_.push_back({mover, move});
}

std::vector<std::string> Path::MoveStrings() const {
  std::vector<std::string> out;
  out.reserve(moves_.size());
  for (const PlyMove& ply : moves_) out.push_back(ply.move.ToString());
  return out;
}

Path TruncateFirst(const Path& path, std::size_t n) {
  Path out(path.origin());
  for (std::size_t i = 0; i < std::min(n, path.size()); ++i) {
    out.Append(path.moves()[i].move);
  }
  return out;
}

Path TruncateLast(const Path& path, std::size_t n) {
  const std::size_t drop = path.size() > n ? path.size() - n : 0;
  GameState origin = path.origin();
  for (std::size_t i = 0; i < drop; ++i) {
    origin = ApplyMove(origin, path.moves()[i].move);
  }
  Path out(std::move(origin));
  for (std::size_t i = drop; i < path.size(); ++i) {
    out.Append(path.moves()[i].move);
  }
  return out;
}

Path Concat(const Path& q, const Path& q2) {
  if (!(q2.origin() == q.end_state())) {
    throw Error(ErrorCode::kPath,
                "concatenation junction mismatch: first path ends at " +
                    q.end_state().ToString() + ", second starts at " +
                    q2.origin().ToString());
  }
  if (!q.empty() && !q2.empty() &&
      q.moves().back().player == q2.moves().front().player) {
    throw Error(ErrorCode::kPath, "players must alternate across the junction");
  }
  std::vector<PlyMove> joined = q.moves();
  joined.insert(joined.end(), q2.moves().begin(), q2.moves().end());
  return Path(q.origin(), joined);
}

Budget Budget::Nodes(std::uint64_t c) {
  if (c < 1) throw Error(ErrorCode::kParameter, "budget must be >= 1");
  Budget b;
  b.limit_ = c;
  return b;
}

Budget Budget::Parse(const std::string& text) {
  auto bound = ParseBound(text, "budget");
  return bound ? Nodes(*bound) : Unlimited();
}

std::string Budget::ToString() const {
  return limit_ ? std::to_string(*limit_) : "inf";
}

Recall Recall::Last(std::uint64_t n) {
  Recall r;
  r.window_ = n;
  return r;
}

Recall Recall::Parse(const std::string& text) {
  auto bound = ParseBound(text, "recall");
  return bound ? Last(*bound) : Unlimited();
}

std::string Recall::ToString() const {
  return window_ ? std::to_string(*window_) : "inf";
}

std::vector<PlyMove> History::Recalled(const Recall& recall) const {
  if (recall.unlimited() || recall.window() >= moves.size()) return moves;
  return {moves.end() - static_cast<std::ptrdiff_t>(recall.window()),
          moves.end()};
}

Subtree ExpandWithinBudget(const GameState& root, Budget budget) {
  if (root.IsTerminal()) {
    throw Error(ErrorCode::kState, "cannot expand a terminal root");
  }
  Subtree tree;
  tree.budget_ = budget;
  tree.nodes_.push_back({root, std::nullopt, -1, 0, {}});
  std::size_t level_begin = 0;
  std::uint64_t used = 0;
  while (true) {
    const std::size_t level_end = tree.nodes_.size();
    std::vector<SubtreeNode> next;
    bool overflow = false;
    for (std::size_t id = level_begin; id < level_end && !overflow; ++id) {
      const SubtreeNode& parent = tree.nodes_[id];
      if (parent.state.IsTerminal()) continue;
      for (const Move& move : LegalMoves(parent.state)) {
        if (!budget.Admits(used + next.size() + 1)) {
          overflow = true;
          break;
        }
        next.push_back({ApplyMove(parent.state, move), move,
                        static_cast<int>(id), parent.level + 1, {}});
      }
    }
    if (overflow) break;
    if (next.empty()) {
      tree.horizon_visible_ = true;
      break;
    }
    used += next.size();
    for (SubtreeNode& child : next) {
      const int child_id = static_cast<int>(tree.nodes_.size());
      tree.nodes_[child.parent].children.push_back(child_id);
      tree.nodes_.push_back(std::move(child));
    }
    level_begin = level_end;
    ++tree.depth_;
  }
  return tree;
}

std::vector<std::uint64_t> CountLevelNodes(const GameState& root, int depth) {
  if (depth < 1) throw Error(ErrorCode::kParameter, "depth must be >= 1");
  std::vector<std::uint64_t> counts;
  std::vector<GameState> level{root};
  for (int d = 1; d <= depth; ++d) {
    std::vector<GameState> next;
    for (const GameState& s : level) {
      if (s.IsTerminal()) continue;
      for (const Move& m : LegalMoves(s)) next.push_back(ApplyMove(s, m));
    }
    if (next.empty()) break;
    counts.push_back(next.size());
    level = std::move(next);
  }
  return counts;
}

std::string DumpSubtree(const Subtree& subtree) {
  std::ostringstream out;
  // Depth-first so each node sits under its parent.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const SubtreeNode& n = subtree.node(id);
    out << std::string(2 * n.level, ' ') << n.level << " "
        << (n.move ? n.move->ToString() : std::string("root")) << " ";
    if (auto ends = n.state.free_ends()) {
      out << "[" << int{ends->first} << "," << int{ends->second} << "]";
    } else {
      out << "[]";
    }
    out << " #" << id << "\n";
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out.str();
}

Path ContinuationPath(const StrategyProfile& profile, const GameState& origin,
                      const History& h_star, const Move& action,
                      std::optional<std::size_t> max_length) {
  GameState state = origin;
  for (const PlyMove& ply : h_star.moves) state = ApplyMove(state, ply.move);
  Path path(ApplyMove(state, action));
  while (!path.end_state().IsTerminal() &&
         (!max_length || path.size() < *max_length)) {
    path.Append(profile.Choose(path.end_state()));
  }
  return path;
}

}  // namespace dominoes
