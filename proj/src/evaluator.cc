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

#include "dominoes/evaluator.h"

#include <cmath>

#include "dominoes/error.h"

namespace dominoes {

std::string_view GuidelineName(Guideline g) {
  switch (g) {
    case Guideline::kShedPips: return "shed_pips";
    case Guideline::kBlockOpponent: return "block_opponent";
    case Guideline::kRepeatStrongNumber: return "repeat_strong_number";
  }
  return "unknown";
}

GuidelineConfig::GuidelineConfig() : weights_{1.0, 0.0, 0.0} {}

GuidelineConfig GuidelineConfig::FromWeights(double shed, double block,
                                             double repeat) {
  GuidelineConfig config;
  config.weights_ = {shed, block, repeat};
  bool any_nonzero = false;
  for (double w : config.weights_) {
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::kParameter, "guideline weights must be finite");
    }
    any_nonzero = any_nonzero || w != 0.0;
  }
  if (!any_nonzero) {
    throw Error(ErrorCode::kParameter,
                "at least one guideline weight must be nonzero");
  }
  return config;
}

GuidelineConfig GuidelineConfig::Scaled(double factor) const {
  return FromWeights(weights_[0] * factor, weights_[1] * factor,
                     weights_[2] * factor);
}

int GuideShedPips(const GameState& state, Player player) {
  return PipSum(state.hand(Opponent(player))) - PipSum(state.hand(player));
}

int GuideBlockOpponent(const GameState& state, Player player) {
  return -static_cast<int>(
      PlaceMoves(state.hand(Opponent(player)), state.free_ends()).size());
}

int GuideRepeatStrongNumber(const GameState& state, Player player) {
  return static_cast<int>(
      PlaceMoves(state.hand(player), state.free_ends()).size());
}

int GuideScore(Guideline g, const GameState& state, Player player) {
  switch (g) {
    case Guideline::kShedPips: return GuideShedPips(state, player);
    case Guideline::kBlockOpponent: return GuideBlockOpponent(state, player);
    case Guideline::kRepeatStrongNumber:
      return GuideRepeatStrongNumber(state, player);
  }
  return 0;
}

LeafValue Phi(const GameState& leaf, Player player,
              const GuidelineConfig& config) {
  if (auto outcome = TerminalOutcome(leaf)) {
    return {static_cast<double>(outcome->PayoffTo(player)), true};
  }
  double value = 0.0;
  for (Guideline g : kAllGuidelines) {
    const double w = config.weight(g);
    if (w != 0.0) value += w * GuideScore(g, leaf, player);
  }
  return {value, false};
}

}  // namespace dominoes
