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

#ifndef DOMINOES_IO_H_
#define DOMINOES_IO_H_

// JSON and CSV formats: deal files, solution traces (the golden fixture
// format), transcripts, tournament reports and experiment configs. Key order
// is fixed so exports are byte-stable.

#include <string>

#include "json.hpp"

#include "dominoes/core_rules.h"
#include "dominoes/evaluator.h"
#include "dominoes/harness.h"
#include "dominoes/solver.h"

namespace dominoes {

using Json = nlohmann::ordered_json;

// {"max_pip": int, "hands": [[[a,b],...],[[a,b],...]]}
Json DealToJson(const Deal& deal);
Deal DealFromJson(const Json& json);

// {"weights": {"shed_pips": w, "block_opponent": w, "repeat_strong_number": w}}
// Missing keys keep their default.
Json GuidelineConfigToJson(const GuidelineConfig& config);
GuidelineConfig GuidelineConfigFromJson(const Json& json);

Json TraceToJson(const SolutionTrace& trace);
// Rebuilds prediction paths by replaying them; kTrace error on bad input.
SolutionTrace TraceFromJson(const Json& json);

Json TranscriptToJson(const Transcript& transcript);

Json ReportToJson(const StatsReport& report);
// Header plus one row per game.
std::string ReportToCsv(const StatsReport& report);

// Keys: max_pip, tiles, games, seed, opening, agent1, agent2, swap, threads,
// weights. Missing keys keep the values already in `base`.
ExperimentConfig ExperimentConfigFromJson(const Json& json,
                                          ExperimentConfig base);

// Serialized with 2-space indent and a trailing newline.
std::string DumpJson(const Json& json);

Json ReadJsonFile(const std::string& path);
std::string ReadTextFile(const std::string& path);
// kIo error with the path on failure.
void WriteTextFile(const std::string& path, const std::string& contents);

}  // namespace dominoes

#endif  // DOMINOES_IO_H_
