// Copyright 2026 The SMRA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON, JSON-lines and CSV formats for scenarios, traces and trial results.

#ifndef SMRA_IO_H_
#define SMRA_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "smra/mechanism.h"
#include "smra/oracle.h"
#include "smra/scenario.h"
#include "smra/strategy.h"
#include "smra/submodularity.h"
#include "smra/valuation.h"

namespace smra {

using Json = nlohmann::json;

// {"type": "table" | "additive" | "unit_demand" | "symmetric_step" |
//  "pair_bonus" | "type2_pair", ...}. With `num_items` < 0 the universe
// comes from "m", or else the table or value-list length.
// Errors are kParseError, or kUniverseMismatch against `num_items`.
Valuation ValuationFromJson(const Json& j, int num_items = -1);
Json ValuationToJson(const Valuation& v);

// {"kind": "truthful" | "locally_optimal" | "secure_profit_max" |
//  "scripted", "script": [[...], ...], "local_start": "previous" | "empty",
//  "secure_variant": "incremented" | "plain"}.
Strategy StrategyFromJson(const Json& j);
Json StrategyToJson(const Strategy& s);

// {"name", "m", "epsilon_label", "bidders": [{"valuation", "strategy"}]}.
Scenario ScenarioFromJson(const Json& j);
Json ScenarioToJson(const Scenario& s);
Scenario LoadScenario(const std::string& path);

Json ItemSetToJson(ItemSet s);
ItemSet ItemSetFromJson(const Json& j);

// One line per round: {"t", "prices_before", "bids", "excess", "draws",
// "prices_after", "provisional"}.
Json RoundRecordToJson(const RoundRecord& r);
RoundRecord RoundRecordFromJson(const Json& j);
void WriteTrace(std::ostream& os, const std::vector<RoundRecord>& trace);
std::vector<RoundRecord> ReadTrace(std::istream& is);

Json ReportToJson(const SubmodularityReport& report);
Json OptimalAllocationToJson(const OptimalAllocation& opt);

// trial,seed,rounds,welfare,optimal,ratio_num,ratio_den,lambda_num,
// lambda_den,diverged,<event>... ; infinite lambda is written as inf,inf.
void WriteTrialsCsv(std::ostream& os, const TrialStats& stats);
// Reads rows written by WriteTrialsCsv and recomputes the aggregates.
TrialStats ReadTrialsCsv(std::istream& is, const std::string& scenario_name);

Json SummaryToJson(const TrialStats& stats, std::uint64_t seed);

}  // namespace smra

#endif  // SMRA_IO_H_
