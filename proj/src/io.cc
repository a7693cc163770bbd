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

#include "dominoes/io.h"

#include <fstream>
#include <sstream>

#include "dominoes/error.h"

namespace dominoes {
namespace {

Json TileToJson(const Tile& t) { return Json::array({t.low, t.high}); }

Tile TileFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::kParameter, "tile must be [a, b]: " + j.dump());
  }
  const int a = j[0].get<int>();
  const int b = j[1].get<int>();
  if (a > b) {
    throw Error(ErrorCode::kParameter,
                "tile must be written low first: " + j.dump());
  }
  if (a < 0 || b > kMaxPipLimit) {
    throw Error(ErrorCode::kParameter, "tile pip out of range: " + j.dump());
  }
  return Tile(a, b);
}

Json EndsToJson(const std::optional<FreeEnds>& ends) {
  if (!ends) return Json::array();
  return Json::array({ends->first, ends->second});
}

std::optional<FreeEnds> EndsFromJson(const Json& j) {
  if (j.empty()) return std::nullopt;
  return FreeEnds{j.at(0).get<Pip>(), j.at(1).get<Pip>()};
}

Json PliesToJson(const std::vector<PlyMove>& plies) {
  Json out = Json::array();
  for (const PlyMove& p : plies) {
    out.push_back(std::to_string(PlayerNumber(p.player)) + ":" +
                  p.move.ToString());
  }
  return out;
}

std::vector<PlyMove> PliesFromJson(const Json& j) {
  std::vector<PlyMove> plies;
  for (const Json& item : j) {
    const std::string s = item.get<std::string>();
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kTrace, "bad ply '" + s + "'");
    }
    plies.push_back({PlayerFromNumber(std::stoi(s.substr(0, colon))),
                     Move::Parse(s.substr(colon + 1))});
  }
  return plies;
}

Json MovesToJson(const std::vector<std::string>& moves) {
  Json out = Json::array();
  for (const std::string& m : moves) out.push_back(m);
  return out;
}

Json BudgetToJson(const Budget& b) {
  return b.unlimited() ? Json("inf") : Json(b.limit());
}

Budget BudgetFromJson(const Json& j) {
  if (j.is_string()) return Budget::Parse(j.get<std::string>());
  return Budget::Nodes(j.get<std::uint64_t>());
}

Json RecallToJson(const Recall& r) {
  return r.unlimited() ? Json("inf") : Json(r.window());
}

Recall RecallFromJson(const Json& j) {
  if (j.is_string()) return Recall::Parse(j.get<std::string>());
  return Recall::Last(j.get<std::uint64_t>());
}

Json OutcomeToJson(const Outcome& o) {
  Json j;
  j["kind"] = o.kind == Outcome::Kind::kDomino ? "domino" : "blocked";
  j["winner"] = o.winner ? Json(PlayerNumber(*o.winner)) : Json(nullptr);
  j["payoff_p1"] = o.payoff_p1;
  return j;
}

Outcome OutcomeFromJson(const Json& j) {
  Outcome o;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "domino") {
    o.kind = Outcome::Kind::kDomino;
  } else if (kind == "blocked") {
    o.kind = Outcome::Kind::kBlocked;
  } else {
    throw Error(ErrorCode::kTrace, "unknown outcome kind '" + kind + "'");
  }
  if (!j.at("winner").is_null()) {
    o.winner = PlayerFromNumber(j.at("winner").get<int>());
  }
  o.payoff_p1 = j.at("payoff_p1").get<int>();
  return o;
}

Json OptionalValue(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json StatsToJson(const AgentStats& s) {
  Json j;
  j["spec"] = s.spec;
  j["wins"] = s.wins;
  j["draws"] = s.draws;
  j["losses"] = s.losses;
  j["mean_payoff"] = s.mean_payoff;
  j["payoff_variance"] = s.payoff_variance;
  j["win_rate"] = s.win_rate;
  j["win_rate_ci95"] = Json::array({s.win_rate_ci_low, s.win_rate_ci_high});
  return j;
}

}  // namespace

Json DealToJson(const Deal& deal) {
  Json j;
  j["max_pip"] = deal.max_pip;
  Json hands = Json::array();
  for (const Hand& h : deal.hands) {
    Json hand = Json::array();
    for (const Tile& t : h) hand.push_back(TileToJson(t));
    hands.push_back(hand);
  }
  j["hands"] = hands;
  return j;
}

Deal DealFromJson(const Json& json) {
  Deal deal;
  try {
    deal.max_pip = json.at("max_pip").get<int>();
    const Json& hands = json.at("hands");
    if (!hands.is_array() || hands.size() != 2) {
      throw Error(ErrorCode::kParameter, "deal needs exactly two hands");
    }
    for (int p = 0; p < 2; ++p) {
      for (const Json& t : hands[p]) deal.hands[p].push_back(TileFromJson(t));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParameter, std::string("malformed deal: ") + e.what());
  }
  deal.Validate();
  return deal;
}

Json GuidelineConfigToJson(const GuidelineConfig& config) {
  Json weights;
  for (Guideline g : kAllGuidelines) {
    weights[std::string(GuidelineName(g))] = config.weight(g);
  }
  Json j;
  j["weights"] = weights;
  return j;
}

GuidelineConfig GuidelineConfigFromJson(const Json& json) {
  const GuidelineConfig defaults;
  std::array<double, 3> w{};
  for (Guideline g : kAllGuidelines) w[static_cast<int>(g)] = defaults.weight(g);
  if (json.contains("weights")) {
    for (const auto& [key, value] : json.at("weights").items()) {
      bool known = false;
      for (Guideline g : kAllGuidelines) {
        if (key == GuidelineName(g)) {
          w[static_cast<int>(g)] = value.get<double>();
          known = true;
        }
      }
      if (!known) {
        throw Error(ErrorCode::kParameter, "unknown guideline '" + key + "'");
      }
    }
  }
  return GuidelineConfig::FromWeights(w[0], w[1], w[2]);
}

Json TraceToJson(const SolutionTrace& trace) {
  Json j;
  j["format"] = "dominoes-solution-trace/1";
  j["deal"] = DealToJson(trace.deal);
  j["opening"] = trace.opening.ToString();
  Json players = Json::array();
  for (int i = 0; i < 2; ++i) {
    const LimitedForecastRule& r = trace.rules[i];
    Json p;
    p["player"] = i + 1;
    p["budget"] = BudgetToJson(r.budget);
    p["recall"] = RecallToJson(r.recall);
    p["tiebreak"] = std::string(TieBreakName(r.tiebreak));
    p["weights"] = GuidelineConfigToJson(r.config)["weights"];
    players.push_back(p);
  }
  j["players"] = players;
  Json periods = Json::array();
  for (const PeriodRecord& r : trace.periods) {
    Json p;
    p["t"] = r.period;
    p["player"] = PlayerNumber(r.player);
    p["forced"] = r.forced;
    p["move"] = r.move.ToString();
    p["ends_after"] = EndsToJson(r.ends_after);
    p["value"] = r.value;
    p["depth"] = r.forecast.summary.depth;
    p["node_count"] = r.forecast.summary.node_count;
    p["horizon_visible"] = r.forecast.summary.horizon_visible;
    p["history"] = PliesToJson(r.forecast.recalled_history);
    Json forecast = Json::array();
    for (const ActionForecast& af : r.forecast.actions) {
      Json a;
      a["action"] = af.action.ToString();
      a["value"] = OptionalValue(af.value);
      a["prediction"] = PliesToJson(af.prediction.moves());
      a["belief"] = PliesToJson(af.belief);
      forecast.push_back(a);
    }
    p["forecast"] = forecast;
    periods.push_back(p);
  }
  j["periods"] = periods;
  j["outcome"] = OutcomeToJson(trace.outcome);
  return j;
}

SolutionTrace TraceFromJson(const Json& json) {
  SolutionTrace trace;
  try {
    trace.deal = DealFromJson(json.at("deal"));
    trace.opening = OpeningRule::Parse(json.at("opening").get<std::string>());
    const Json& players = json.at("players");
    if (players.size() != 2) {
      throw Error(ErrorCode::kTrace, "trace needs two player rules");
    }
    for (int i = 0; i < 2; ++i) {
      const Json& p = players[i];
      LimitedForecastRule& r = trace.rules[i];
      r.budget = BudgetFromJson(p.at("budget"));
      r.recall = RecallFromJson(p.at("recall"));
      r.tiebreak = ParseTieBreak(p.at("tiebreak").get<std::string>());
      Json wrapper;
      wrapper["weights"] = p.at("weights");
      r.config = GuidelineConfigFromJson(wrapper);
    }
    const OpeningDecision od = Opening(trace.deal, trace.opening);
    GameState state = GameState::Initial(trace.deal, od.starter);
    for (const Json& p : json.at("periods")) {
      PeriodRecord r;
      r.period = p.at("t").get<int>();
      r.player = PlayerFromNumber(p.at("player").get<int>());
      r.forced = p.at("forced").get<bool>();
      r.move = Move::Parse(p.at("move").get<std::string>());
      r.ends_after = EndsFromJson(p.at("ends_after"));
      r.value = p.at("value").get<double>();
      r.forecast.period = r.period;
      r.forecast.player = r.player;
      r.forecast.summary = {p.at("depth").get<int>(),
                            p.at("node_count").get<std::uint64_t>(),
                            p.at("horizon_visible").get<bool>()};
      r.forecast.recalled_history = PliesFromJson(p.at("history"));
      if (state.IsTerminal()) {
        throw Error(ErrorCode::kTrace, "trace continues past the end");
      }
      for (const Json& a : p.at("forecast")) {
        ActionForecast af;
        af.action = Move::Parse(a.at("action").get<std::string>());
        if (!a.at("value").is_null()) af.value = a.at("value").get<double>();
        af.prediction =
            Path(ApplyMove(state, af.action), PliesFromJson(a.at("prediction")));
        af.belief = PliesFromJson(a.at("belief"));
        r.forecast.actions.push_back(std::move(af));
      }
      state = ApplyMove(state, r.move);
      trace.periods.push_back(std::move(r));
    }
    trace.outcome = OutcomeFromJson(json.at("outcome"));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kTrace, std::string("malformed trace: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTrace) throw;
    throw Error(ErrorCode::kTrace, e.what());
  }
  return trace;
}

Json TranscriptToJson(const Transcript& transcript) {
  Json j;
  j["deal"] = DealToJson(transcript.deal);
  j["opening"] = transcript.opening.ToString();
  Json entries = Json::array();
  for (const TranscriptEntry& e : transcript.entries) {
    Json x;
    x["t"] = e.period;
    x["player"] = PlayerNumber(e.player);
    x["move"] = e.move.ToString();
    x["ends_after"] = EndsToJson(e.ends_after);
    entries.push_back(x);
  }
  j["moves"] = entries;
  j["outcome"] = OutcomeToJson(transcript.outcome);
  return j;
}

Json ReportToJson(const StatsReport& report) {
  const ExperimentConfig& c = report.config;
  Json config;
  config["max_pip"] = c.max_pip;
  config["tiles"] = c.tiles_per_player;
  config["games"] = c.num_games;
  config["seed"] = c.seed;
  config["opening"] = c.opening.ToString();
  config["agent1"] = c.agent1.ToString();
  config["agent2"] = c.agent2.ToString();
  config["swap"] = c.swap_sides;
  Json j;
  j["config"] = config;
  j["agent1"] = StatsToJson(report.agent1);
  j["agent2"] = StatsToJson(report.agent2);
  Json games = Json::array();
  for (const GameRecord& g : report.games) {
    Json x;
    x["index"] = g.index;
    x["seed"] = g.seed;
    x["deal_hash"] = g.deal_hash;
    x["agent1_seat"] = PlayerNumber(g.agent1_seat);
    x["moves"] = MovesToJson(g.moves);
    x["outcome"] = OutcomeToJson(g.outcome);
    x["payoff_agent1"] = g.payoff_agent1;
    games.push_back(x);
  }
  j["games"] = games;
  return j;
}

std::string ReportToCsv(const StatsReport& report) {
  std::ostringstream out;
  out << "index,seed,deal_hash,agent1_seat,outcome,winner,payoff_p1,"
         "payoff_agent1,moves\n";
  for (const GameRecord& g : report.games) {
    std::string moves;
    for (std::size_t i = 0; i < g.moves.size(); ++i) {
      moves += (i ? ";" : "") + g.moves[i];
    }
    out << g.index << "," << g.seed << "," << g.deal_hash << ","
        << PlayerNumber(g.agent1_seat) << ","
        << (g.outcome.kind == Outcome::Kind::kDomino ? "domino" : "blocked")
        << "," << (g.outcome.winner ? PlayerNumber(*g.outcome.winner) : 0)
        << "," << g.outcome.payoff_p1 << "," << g.payoff_agent1 << ","
        << moves << "\n";
  }
  return out.str();
}

ExperimentConfig ExperimentConfigFromJson(const Json& json,
                                          ExperimentConfig base) {
  try {
    GuidelineConfig weights;
    if (json.contains("weights")) weights = GuidelineConfigFromJson(json);
    if (json.contains("max_pip")) base.max_pip = json.at("max_pip").get<int>();
    if (json.contains("tiles")) base.tiles_per_player = json.at("tiles").get<int>();
    if (json.contains("games")) base.num_games = json.at("games").get<int>();
    if (json.contains("seed")) base.seed = json.at("seed").get<std::uint64_t>();
    if (json.contains("opening")) {
      base.opening = OpeningRule::Parse(json.at("opening").get<std::string>());
    }
    if (json.contains("agent1")) {
      base.agent1 = AgentSpec::Parse(json.at("agent1").get<std::string>(), weights);
    }
    if (json.contains("agent2")) {
      base.agent2 = AgentSpec::Parse(json.at("agent2").get<std::string>(), weights);
    }
    if (json.contains("swap")) base.swap_sides = json.at("swap").get<bool>();
    if (json.contains("threads")) base.threads = json.at("threads").get<int>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParameter, std::string("malformed config: ") + e.what());
  }
  return base;
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  return buffer.str();
}

Json ReadJsonFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kIo, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

}  // namespace dominoes
