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

#include "smra/io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "smra/errors.h"

namespace smra {
namespace {

[[noreturn]] void ParseFail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

template <typename T>
T Get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    ParseFail(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    ParseFail(std::string("bad field '") + key + "': " + e.what());
  }
}

template <typename T>
T GetOr(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return Get<T>(j, key);
}

}  // namespace

Json ItemSetToJson(ItemSet s) { return Json(s.Items()); }

ItemSet ItemSetFromJson(const Json& j) {
  if (!j.is_array()) ParseFail("item set must be an array");
  ItemSet s;
  for (const Json& e : j) {
    if (!e.is_number_integer()) ParseFail("item index must be an integer");
    const int item = e.get<int>();
    if (item < 0 || item >= kMaxItems) {
      ParseFail("item index " + std::to_string(item) + " out of range");
    }
    s.insert(item);
  }
  return s;
}

Valuation ValuationFromJson(const Json& j, int num_items) {
  if (!j.is_object()) ParseFail("valuation must be an object");
  const std::string type = Get<std::string>(j, "type");
  int m = GetOr<int>(j, "m", num_items);
  // Item-list forms imply their own size when nothing else fixes it.
  if (m < 0 && j.contains("values") && j["values"].is_array()) {
    const std::size_t count = j["values"].size();
    if (type == "table") {
      m = 0;
      while ((std::size_t{1} << m) < count) ++m;
    } else if (type == "additive" || type == "unit_demand") {
      m = static_cast<int>(count);
    }
  }
  if (m < 1 || m > kMaxItems) ParseFail("valuation needs an item count 'm'");
  if (num_items >= 0 && m != num_items) {
    throw Error(ErrorCode::kUniverseMismatch,
                "valuation has " + std::to_string(m) + " items, scenario has " +
                    std::to_string(num_items));
  }
  if (type == "table") {
    return Valuation::Table(m, Get<std::vector<Value>>(j, "values"));
  }
  if (type == "additive") {
    return Valuation::Additive(m, Get<std::vector<Value>>(j, "values"));
  }
  if (type == "unit_demand") {
    return Valuation::UnitDemand(m, Get<std::vector<Value>>(j, "values"));
  }
  if (type == "symmetric_step") {
    const ItemSet support =
        j.contains("support") ? ItemSetFromJson(j["support"]) : ItemSet::Full(m);
    return Valuation::SymmetricStep(m, support, Get<std::int64_t>(j, "alpha_num"),
                                    GetOr<std::int64_t>(j, "alpha_den", 1),
                                    GetOr<Value>(j, "scale", 1));
  }
  if (type == "pair_bonus") {
    std::vector<int> items = GetOr<std::vector<int>>(j, "items", {0, 1});
    if (items.size() != 2) ParseFail("pair_bonus 'items' needs two entries");
    return Valuation::PairBonus(m, Get<Value>(j, "unit"), Get<Value>(j, "pair"),
                                items[0], items[1]);
  }
  if (type == "type2_pair") {
    return Valuation::Type2Pair(m, Get<int>(j, "target"), Get<int>(j, "special"),
                                Get<Value>(j, "unit"), Get<Value>(j, "high"),
                                Get<Value>(j, "bonus"));
  }
  ParseFail("unknown valuation type '" + type + "'");
}

Json ValuationToJson(const Valuation& v) {
  Json j;
  j["m"] = v.num_items();
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, TableForm>) {
          j["type"] = "table";
          j["values"] = f.values;
        } else if constexpr (std::is_same_v<F, AdditiveForm>) {
          j["type"] = "additive";
          j["values"] = f.item_values;
        } else if constexpr (std::is_same_v<F, UnitDemandForm>) {
          j["type"] = "unit_demand";
          j["values"] = f.item_values;
        } else if constexpr (std::is_same_v<F, SymmetricStepForm>) {
          j["type"] = "symmetric_step";
          j["alpha_num"] = f.alpha_num;
          j["alpha_den"] = f.alpha_den;
          j["scale"] = f.scale;
          j["support"] = ItemSetToJson(f.support);
        } else if constexpr (std::is_same_v<F, PairBonusForm>) {
          j["type"] = "pair_bonus";
          j["unit"] = f.unit;
          j["pair"] = f.pair;
          j["items"] = {f.first, f.second};
        } else {
          j["type"] = "type2_pair";
          j["target"] = f.target;
          j["special"] = f.special;
          j["unit"] = f.unit;
          j["high"] = f.high;
          j["bonus"] = f.bonus;
        }
      },
      v.form());
  return j;
}

Strategy StrategyFromJson(const Json& j) {
  if (j.is_string()) return StrategyFromJson(Json{{"kind", j}});
  const std::string kind = Get<std::string>(j, "kind");
  if (kind == "truthful") return Strategy::Truthful();
  if (kind == "locally_optimal") {
    const std::string start = GetOr<std::string>(j, "local_start", "previous");
    if (start != "previous" && start != "empty") {
      ParseFail("local_start must be 'previous' or 'empty'");
    }
    return Strategy::LocallyOptimal(start == "empty" ? LocalStart::kEmpty
                                                     : LocalStart::kPrevious);
  }
  if (kind == "secure_profit_max") {
    const std::string variant =
        GetOr<std::string>(j, "secure_variant", "incremented");
    if (variant != "incremented" && variant != "plain") {
      ParseFail("secure_variant must be 'incremented' or 'plain'");
    }
    return Strategy::SecureProfitMax(variant == "plain"
                                         ? SecureVariant::kPlain
                                         : SecureVariant::kIncremented);
  }
  if (kind == "scripted") {
    std::vector<ItemSet> script;
    if (!j.contains("script") || !j["script"].is_array()) {
      ParseFail("scripted strategy needs a 'script' array");
    }
    for (const Json& round : j["script"]) script.push_back(ItemSetFromJson(round));
    return Strategy::Scripted(std::move(script));
  }
  ParseFail("unknown strategy kind '" + kind + "'");
}

Json StrategyToJson(const Strategy& s) {
  Json j;
  j["kind"] = std::string(StrategyKindName(s.kind()));
  switch (s.kind()) {
    case StrategyKind::kLocallyOptimal:
      j["local_start"] =
          s.local_start() == LocalStart::kEmpty ? "empty" : "previous";
      break;
    case StrategyKind::kSecureProfitMax:
      j["secure_variant"] =
          s.secure_variant() == SecureVariant::kPlain ? "plain" : "incremented";
      break;
    case StrategyKind::kScripted: {
      Json script = Json::array();
      for (ItemSet t : s.script()) script.push_back(ItemSetToJson(t));
      j["script"] = script;
      break;
    }
    default:
      break;
  }
  return j;
}

Scenario ScenarioFromJson(const Json& j) {
  if (!j.is_object()) ParseFail("scenario must be an object");
  Scenario s;
  s.name = GetOr<std::string>(j, "name", "custom");
  s.num_items = Get<int>(j, "m");
  s.epsilon_label = GetOr<std::string>(j, "epsilon_label", "1");
  if (!j.contains("bidders") || !j["bidders"].is_array()) {
    ParseFail("scenario needs a 'bidders' array");
  }
  for (const Json& b : j["bidders"]) {
    if (!b.contains("valuation")) ParseFail("bidder needs a 'valuation'");
    s.valuations.push_back(ValuationFromJson(b["valuation"], s.num_items));
    s.strategies.push_back(b.contains("strategy")
                               ? StrategyFromJson(b["strategy"])
                               : Strategy::Truthful());
  }
  if (j.contains("alpha")) {
    const Json& a = j["alpha"];
    s.claimed_alpha = a.is_array() && a.size() == 2
                          ? Rational(a[0].get<std::int64_t>(),
                                     a[1].get<std::int64_t>())
                          : Rational(Get<std::int64_t>(j, "alpha"));
  }
  s.Validate();
  return s;
}

Json ScenarioToJson(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["m"] = s.num_items;
  j["epsilon_label"] = s.epsilon_label;
  if (s.claimed_alpha) {
    j["alpha"] = {s.claimed_alpha->numerator(), s.claimed_alpha->denominator()};
  }
  Json bidders = Json::array();
  for (int i = 0; i < s.num_bidders(); ++i) {
    bidders.push_back({{"valuation", ValuationToJson(s.valuations[i])},
                       {"strategy", StrategyToJson(s.strategies[i])}});
  }
  j["bidders"] = bidders;
  return j;
}

Scenario LoadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) ParseFail("cannot open scenario file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    ParseFail("scenario file '" + path + "': " + e.what());
  }
  return ScenarioFromJson(j);
}

namespace {

Json SetsToJson(const std::vector<ItemSet>& sets) {
  Json a = Json::array();
  for (ItemSet s : sets) a.push_back(ItemSetToJson(s));
  return a;
}

std::vector<ItemSet> SetsFromJson(const Json& j) {
  if (!j.is_array()) ParseFail("expected an array of item sets");
  std::vector<ItemSet> out;
  for (const Json& e : j) out.push_back(ItemSetFromJson(e));
  return out;
}

}  // namespace

Json RoundRecordToJson(const RoundRecord& r) {
  Json draws = Json::array();
  for (const WinnerDraw& d : r.draws) {
    draws.push_back(
        {{"item", d.item}, {"candidates", d.candidates}, {"chosen", d.chosen}});
  }
  Json j;
  j["t"] = r.round;
  j["prices_before"] = r.prices_before;
  j["bids"] = SetsToJson(r.bids);
  j["excess"] = ItemSetToJson(r.excess);
  j["draws"] = draws;
  j["prices_after"] = r.prices_after;
  j["provisional"] = SetsToJson(r.provisional_after);
  return j;
}

RoundRecord RoundRecordFromJson(const Json& j) {
  RoundRecord r;
  r.round = Get<int>(j, "t");
  r.prices_before = Get<std::vector<Value>>(j, "prices_before");
  r.bids = SetsFromJson(j.at("bids"));
  r.excess = ItemSetFromJson(j.at("excess"));
  for (const Json& d : j.at("draws")) {
    r.draws.push_back(WinnerDraw{Get<int>(d, "item"),
                                 Get<std::vector<int>>(d, "candidates"),
                                 Get<int>(d, "chosen")});
  }
  r.prices_after = Get<std::vector<Value>>(j, "prices_after");
  r.provisional_after = SetsFromJson(j.at("provisional"));
  return r;
}

void WriteTrace(std::ostream& os, const std::vector<RoundRecord>& trace) {
  for (const RoundRecord& r : trace) os << RoundRecordToJson(r).dump() << '\n';
}

std::vector<RoundRecord> ReadTrace(std::istream& is) {
  std::vector<RoundRecord> trace;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      ParseFail(std::string("trace line: ") + e.what());
    }
    trace.push_back(RoundRecordFromJson(j));
  }
  return trace;
}

Json ReportToJson(const SubmodularityReport& report) {
  Json j;
  j["degree"] = report.degree.ToString();
  j["alpha"] = report.alpha.ToString();
  if (report.witness) {
    j["witness"] = {{"item", report.witness->item},
                    {"smaller", ItemSetToJson(report.witness->smaller)},
                    {"larger", ItemSetToJson(report.witness->larger)}};
  }
  return j;
}

Json OptimalAllocationToJson(const OptimalAllocation& opt) {
  Json j;
  j["welfare"] = opt.welfare;
  j["assignment"] = SetsToJson(opt.assignment);
  return j;
}

namespace {

constexpr const char* kCsvFixedColumns[] = {
    "trial",   "seed",      "rounds",     "welfare",    "optimal",
    "ratio_num", "ratio_den", "lambda_num", "lambda_den", "diverged"};
constexpr int kNumFixedColumns = 10;

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T ParseNumber(const std::string& s) {
  std::istringstream in(s);
  T value{};
  if (!(in >> value) || !in.eof()) ParseFail("bad CSV number '" + s + "'");
  return value;
}

}  // namespace

void WriteTrialsCsv(std::ostream& os, const TrialStats& stats) {
  for (int c = 0; c < kNumFixedColumns; ++c) {
    os << (c ? "," : "") << kCsvFixedColumns[c];
  }
  for (const std::string& e : stats.event_names) os << ',' << e;
  os << '\n';
  for (const TrialRow& r : stats.rows) {
    os << r.trial << ',' << r.seed << ',' << r.rounds << ',' << r.welfare << ','
       << r.optimal << ',' << r.ratio.numerator() << ','
       << r.ratio.denominator() << ',';
    if (r.lambda.is_infinite()) {
      os << "inf,inf";
    } else {
      os << r.lambda.numerator() << ',' << r.lambda.denominator();
    }
    os << ',' << (r.diverged ? 1 : 0);
    for (bool e : r.events) os << ',' << (e ? 1 : 0);
    os << '\n';
  }
}

TrialStats ReadTrialsCsv(std::istream& is, const std::string& scenario_name) {
  TrialStats stats;
  stats.scenario = scenario_name;
  std::string line;
  if (!std::getline(is, line)) ParseFail("empty CSV");
  const std::vector<std::string> header = SplitCsv(line);
  if (static_cast<int>(header.size()) < kNumFixedColumns) {
    ParseFail("CSV header too short");
  }
  for (int c = 0; c < kNumFixedColumns; ++c) {
    if (header[c] != kCsvFixedColumns[c]) {
      ParseFail("unexpected CSV column '" + header[c] + "'");
    }
  }
  stats.event_names.assign(header.begin() + kNumFixedColumns, header.end());
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsv(line);
    if (f.size() != header.size()) ParseFail("CSV row has wrong width");
    TrialRow r;
    r.trial = ParseNumber<int>(f[0]);
    r.seed = ParseNumber<std::uint64_t>(f[1]);
    r.rounds = ParseNumber<int>(f[2]);
    r.welfare = ParseNumber<Value>(f[3]);
    r.optimal = ParseNumber<Value>(f[4]);
    r.ratio = Rational(ParseNumber<std::int64_t>(f[5]),
                       ParseNumber<std::int64_t>(f[6]));
    r.lambda = f[7] == "inf" ? ExtendedRational::Infinity()
                             : ExtendedRational(ParseNumber<std::int64_t>(f[7]),
                                                ParseNumber<std::int64_t>(f[8]));
    r.diverged = f[9] == "1";
    for (std::size_t c = kNumFixedColumns; c < f.size(); ++c) {
      r.events.push_back(f[c] == "1");
    }
    stats.rows.push_back(std::move(r));
  }
  stats.Aggregate();
  return stats;
}

Json SummaryToJson(const TrialStats& stats, std::uint64_t seed) {
  Json j;
  j["scenario"] = stats.scenario;
  j["trials"] = stats.trials();
  j["seed"] = seed;
  j["optimal"] = stats.optimal;
  j["mean_welfare"] = stats.mean_welfare;
  j["mean_ratio"] = stats.mean_ratio;
  j["max_lambda"] = stats.max_lambda.ToString();
  j["divergences"] = stats.divergences;
  for (std::size_t e = 0; e < stats.event_names.size(); ++e) {
    j["freq_" + stats.event_names[e]] = stats.event_frequencies[e];
  }
  return j;
}

}  // namespace smra
