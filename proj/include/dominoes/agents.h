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

#ifndef DOMINOES_AGENTS_H_
#define DOMINOES_AGENTS_H_

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "dominoes/core_rules.h"
#include "dominoes/evaluator.h"
#include "dominoes/solver.h"

namespace dominoes {

struct LimitedForecastAgent {
  LimitedForecastRule rule;
  friend bool operator==(const LimitedForecastAgent&,
                         const LimitedForecastAgent&) = default;
};

struct RandomAgent {
  friend bool operator==(const RandomAgent&, const RandomAgent&) = default;
};

struct PerfectAgent {
  std::uint64_t cap = kDefaultOracleCap;
  friend bool operator==(const PerfectAgent&, const PerfectAgent&) = default;
};

// Depth-1 argmax of Phi; baseline isolating the heuristic from lookahead.
struct GreedyAgent {
  GuidelineConfig config;
  friend bool operator==(const GreedyAgent&, const GreedyAgent&) = default;
};

struct AgentSpec {
  std::variant<LimitedForecastAgent, RandomAgent, PerfectAgent, GreedyAgent>
      kind;
  std::uint64_t seed = 0;

  // lf:c=<int|inf>[,N=<int|inf>][,w.shed=<f>,w.block=<f>,w.repeat=<f>]
  // random | perfect | greedy[:w.shed=<f>,...]
  // `defaults` supplies weights the string leaves unset.
  static AgentSpec Parse(const std::string& text,
                         const GuidelineConfig& defaults = GuidelineConfig());
  std::string ToString() const;

  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

using TurnRng = std::mt19937_64;

// kState error on terminal states; kCapacity error when a Perfect agent's
// oracle overflows. Only Random draws from `rng`.
Move AgentMove(const AgentSpec& spec, const GameState& state, TurnRng& rng);

}  // namespace dominoes

#endif  // DOMINOES_AGENTS_H_
