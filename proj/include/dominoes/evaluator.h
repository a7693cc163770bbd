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

#ifndef DOMINOES_EVALUATOR_H_
#define DOMINOES_EVALUATOR_H_

#include <array>
#include <string_view>

#include "dominoes/core_rules.h"

namespace dominoes {

enum class Guideline { kShedPips = 0, kBlockOpponent = 1, kRepeatStrongNumber = 2 };

inline constexpr std::array<Guideline, 3> kAllGuidelines = {
    Guideline::kShedPips, Guideline::kBlockOpponent,
    Guideline::kRepeatStrongNumber};

// Config-file key: "shed_pips", "block_opponent", "repeat_strong_number".
std::string_view GuidelineName(Guideline g);

// Weights over the guideline scores. Scores are in pip units so heuristic
// and exact terminal values share one scale.
class GuidelineConfig {
 public:
  // ShedPips at 1, everything else 0.
  GuidelineConfig();
  // kParameter error on a non-finite weight or when every weight is zero.
  static GuidelineConfig FromWeights(double shed, double block, double repeat);

  double weight(Guideline g) const { return weights_[static_cast<int>(g)]; }
  GuidelineConfig Scaled(double factor) const;

  friend bool operator==(const GuidelineConfig&,
                         const GuidelineConfig&) = default;

 private:
  std::array<double, 3> weights_;
};

struct LeafValue {
  double value = 0.0;
  bool exact = false;  // true at terminal states
};

// Opponent pips minus own pips.
int GuideShedPips(const GameState& state, Player player);
// Minus the number of placements open to the opponent on the current ends.
int GuideBlockOpponent(const GameState& state, Player player);
// Number of (tile, end) placements open to `player` on the current ends.
int GuideRepeatStrongNumber(const GameState& state, Player player);

int GuideScore(Guideline g, const GameState& state, Player player);

// Exact payoff to `player` at terminal states, weighted guideline sum
// otherwise.
LeafValue Phi(const GameState& leaf, Player player,
              const GuidelineConfig& config);

}  // namespace dominoes

#endif  // DOMINOES_EVALUATOR_H_
