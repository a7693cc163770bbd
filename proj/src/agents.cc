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

#include "dominoes/agents.h"

#include <cstdlib>
#include <sstream>
#include <vector>

#include "dominoes/error.h"

namespace dominoes {
namespace {

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double ParseWeight(const std::string& text) {
  char* end = nullptr;
  const double w = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw Error(ErrorCode::kParameter, "bad weight '" + text + "'");
  }
  return w;
}

std::string FormatWeight(double w) {
  std::ostringstream out;
  out << w;
  return out.str();
}

// Parses "key=value" options; weight keys update `weights`.
void ApplyOption(const std::string& option, std::array<double, 3>& weights,
                 Budget* budget, Recall* recall, bool& saw_budget) {
  const auto eq = option.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorCode::kParameter, "agent option '" + option +
                                           "' is not key=value");
  }
  const std::string key = option.substr(0, eq);
  const std::string value = option.substr(eq + 1);
  if (key == "c" && budget) {
    *budget = Budget::Parse(value);
    saw_budget = true;
  } else if (key == "N" && recall) {
    *recall = Recall::Parse(value);
  } else if (key == "w.shed") {
    weights[0] = ParseWeight(value);
  } else if (key == "w.block") {
    weights[1] = ParseWeight(value);
  } else if (key == "w.repeat") {
    weights[2] = ParseWeight(value);
  } else {
    throw Error(ErrorCode::kParameter, "unknown agent option '" + key + "'");
  }
}

std::string WeightSuffix(const GuidelineConfig& config) {
  if (config == GuidelineConfig()) return "";
  return ",w.shed=" + FormatWeight(config.weight(Guideline::kShedPips)) +
         ",w.block=" + FormatWeight(config.weight(Guideline::kBlockOpponent)) +
         ",w.repeat=" +
         FormatWeight(config.weight(Guideline::kRepeatStrongNumber));
}

// Greedy and Spe share the tie-break: most blocking child, then legal order.
Move GreedyMove(const GameState& state, const GuidelineConfig& config) {
  const Player mover = state.to_move();
  std::optional<Move> best;
  double best_value = 0.0;
  int best_block = 0;
  for (const Move& m : LegalMoves(state)) {
    const GameState child = ApplyMove(state, m);
    const double v = Phi(child, mover, config).value;
    const int block = GuideBlockOpponent(child, mover);
    if (!best || v > best_value || (v == best_value && block > best_block)) {
      best = m;
      best_value = v;
      best_block = block;
    }
  }
  return *best;
}

}  // namespace

AgentSpec AgentSpec::Parse(const std::string& text,
                           const GuidelineConfig& defaults) {
  std::array<double, 3> weights = {
      defaults.weight(Guideline::kShedPips),
      defaults.weight(Guideline::kBlockOpponent),
      defaults.weight(Guideline::kRepeatStrongNumber)};
  AgentSpec spec;
  if (text == "random") {
    spec.kind = RandomAgent{};
  } else if (text == "perfect") {
    spec.kind = PerfectAgent{};
  } else if (text.rfind("greedy", 0) == 0) {
    const std::string rest = text.substr(6);
    if (!rest.empty()) {
      if (rest[0] != ':') {
        throw Error(ErrorCode::kParameter, "bad agent spec '" + text + "'");
      }
      bool unused = false;
      for (const std::string& opt : Split(rest.substr(1), ',')) {
        ApplyOption(opt, weights, nullptr, nullptr, unused);
      }
    }
    spec.kind = GreedyAgent{
        GuidelineConfig::FromWeights(weights[0], weights[1], weights[2])};
  } else if (text.rfind("lf:", 0) == 0) {
    LimitedForecastRule rule;
    bool saw_budget = false;
    for (const std::string& opt : Split(text.substr(3), ',')) {
      ApplyOption(opt, weights, &rule.budget, &rule.recall, saw_budget);
    }
    if (!saw_budget) {
      throw Error(ErrorCode::kParameter,
                  "lf agent needs c=<int|inf>: '" + text + "'");
    }
    rule.config =
        GuidelineConfig::FromWeights(weights[0], weights[1], weights[2]);
    spec.kind = LimitedForecastAgent{rule};
  } else {
    throw Error(ErrorCode::kParameter, "unknown agent spec '" + text + "'");
  }
  return spec;
}

std::string AgentSpec::ToString() const {
  struct Visitor {
    std::string operator()(const LimitedForecastAgent& a) const {
      std::string s = "lf:c=" + a.rule.budget.ToString();
      if (!a.rule.recall.unlimited()) s += ",N=" + a.rule.recall.ToString();
      return s + WeightSuffix(a.rule.config);
    }
    std::string operator()(const RandomAgent&) const { return "random"; }
    std::string operator()(const PerfectAgent&) const { return "perfect"; }
    std::string operator()(const GreedyAgent& a) const {
      const std::string w = WeightSuffix(a.config);
      return w.empty() ? "greedy" : "greedy:" + w.substr(1);
    }
  };
  return std::visit(Visitor{}, kind);
}

Move AgentMove(const AgentSpec& spec, const GameState& state, TurnRng& rng) {
  if (state.IsTerminal()) {
    throw Error(ErrorCode::kState, "agent asked to move in a terminal state");
  }
  struct Visitor {
    const GameState& state;
    TurnRng& rng;
    Move operator()(const LimitedForecastAgent& a) const {
      return Decide(state, a.rule).move;
    }
    Move operator()(const RandomAgent&) const {
      const std::vector<Move> legal = LegalMoves(state);
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      return legal[pick(rng)];
    }
    Move operator()(const PerfectAgent& a) const {
      return SolveFullTree(state, a.cap).EntryFor(state).move;
    }
    Move operator()(const GreedyAgent& a) const {
      return GreedyMove(state, a.config);
    }
  };
  return std::visit(Visitor{state, rng}, spec.kind);
}

}  // namespace dominoes
