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

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "smra/errors.h"

namespace smra {
namespace {

std::vector<Valuation> SampleValuations() {
  return {Valuation::Table(2, {0, 1, 2, 5}),
          Valuation::Additive(3, {1, 0, 4}),
          Valuation::UnitDemand(3, {2, 7, 1}),
          Valuation::SymmetricStep(4, ItemSet({0, 2}), 3, 2, 4),
          Valuation::PairBonus(3, 1, 9, 0, 2),
          Valuation::Type2Pair(3, 1, 2, 1, 5, 2)};
}

TEST(ValuationJsonTest, RoundTripsEveryForm) {
  for (const Valuation& v : SampleValuations()) {
    const Json j = ValuationToJson(v);
    const Valuation back = ValuationFromJson(j);
    EXPECT_EQ(back.FormName(), v.FormName());
    EXPECT_EQ(back.ExpandValues(), v.ExpandValues()) << j.dump();
  }
}

TEST(ValuationJsonTest, Defaults) {
  Valuation v = ValuationFromJson(
      Json::parse(R"({"type": "symmetric_step", "alpha_num": 3})"), 4);
  EXPECT_EQ(v(ItemSet::Full(4)), 10);
  Valuation p = ValuationFromJson(
      Json::parse(R"({"type": "pair_bonus", "unit": 1, "pair": 10})"), 2);
  EXPECT_EQ(p(ItemSet({0, 1})), 10);
}

TEST(ValuationJsonTest, Errors) {
  auto code_of = [](const char* text, int m) {
    try {
      ValuationFromJson(Json::parse(text), m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of(R"({"type": "mystery"})", 2), ErrorCode::kParseError);
  EXPECT_EQ(code_of(R"({"type": "additive"})", 2), ErrorCode::kParseError);
  EXPECT_EQ(code_of(R"({"type": "pair_bonus", "unit": 1, "pair": 2})", -1),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of(R"({"type": "additive", "m": 3, "values": [1]})", 2),
            ErrorCode::kUniverseMismatch);
  EXPECT_EQ(code_of(R"({"type": "additive", "values": ["x"]})", 2),
            ErrorCode::kParseError);
}

TEST(StrategyJsonTest, RoundTrips) {
  const std::vector<Strategy> strategies = {
      Strategy::Truthful(), Strategy::LocallyOptimal(LocalStart::kEmpty),
      Strategy::SecureProfitMax(SecureVariant::kPlain),
      Strategy::Scripted({ItemSet({0, 1}), ItemSet{}, ItemSet{2}})};
  for (const Strategy& s : strategies) {
    const Strategy back = StrategyFromJson(StrategyToJson(s));
    EXPECT_EQ(back.kind(), s.kind());
    EXPECT_EQ(back.local_start(), s.local_start());
    EXPECT_EQ(back.secure_variant(), s.secure_variant());
    EXPECT_EQ(back.script(), s.script());
  }
  EXPECT_EQ(StrategyFromJson(Json("truthful")).kind(), StrategyKind::kTruthful);
  EXPECT_THROW(StrategyFromJson(Json::parse(R"({"kind": "psychic"})")), Error);
}

TEST(ScenarioJsonTest, RoundTrips) {
  Scenario s;
  s.name = "mixed";
  s.num_items = 3;
  s.claimed_alpha = Rational(3, 2);
  for (const Valuation& v : SampleValuations()) {
    if (v.num_items() == 3) s.valuations.push_back(v);
  }
  s.strategies.assign(s.valuations.size(), Strategy::LocallyOptimal());
  const Json j = ScenarioToJson(s);
  const Scenario back = ScenarioFromJson(j);
  EXPECT_EQ(back.name, "mixed");
  EXPECT_EQ(back.num_items, 3);
  EXPECT_EQ(back.claimed_alpha, s.claimed_alpha);
  ASSERT_EQ(back.num_bidders(), s.num_bidders());
  for (int i = 0; i < s.num_bidders(); ++i) {
    EXPECT_EQ(back.valuations[i].ExpandValues(), s.valuations[i].ExpandValues());
    EXPECT_EQ(back.strategies[i].kind(), StrategyKind::kLocallyOptimal);
  }
  EXPECT_EQ(ScenarioToJson(back), j);
}

TEST(ScenarioJsonTest, RejectsNonMonotoneValuation) {
  const Json j = Json::parse(R"({
    "m": 1,
    "bidders": [{"valuation": {"type": "table", "values": [0, 0]}},
                {"valuation": {"type": "table", "values": [0, 3]}}]})");
  EXPECT_NO_THROW(ScenarioFromJson(j));
  const Json bad = Json::parse(R"({
    "m": 2,
    "bidders": [{"valuation": {"type": "table", "values": [0, 4, 1, 2]}}]})");
  EXPECT_THROW(ScenarioFromJson(bad), Error);
}

TEST(TraceJsonTest, RoundTripsThroughJsonl) {
  std::vector<Valuation> vals(2, Valuation::PairBonus(2, 1, 10));
  std::vector<Strategy> strats(2, Strategy::Truthful());
  AuctionOutcome o = RunAuction(vals, strats, 3);
  std::stringstream ss;
  WriteTrace(ss, o.trace);
  const std::string text = ss.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'),
            static_cast<long>(o.trace.size()));
  std::istringstream in(text);
  EXPECT_EQ(ReadTrace(in), o.trace);
  const Json first = RoundRecordToJson(o.trace.front());
  for (const char* key : {"t", "prices_before", "bids", "excess", "draws",
                          "prices_after", "provisional"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
}

TEST(TraceJsonTest, RejectsGarbage) {
  std::istringstream in("{not json}\n");
  EXPECT_THROW(ReadTrace(in), Error);
}

TEST(TrialsCsvTest, RoundTripReproducesAggregates) {
  TrialStats stats = RunTrials(BuildBadPair(10), 300, 5);
  // Force an infinite ratio row through the writer.
  stats.rows[3].lambda = ExtendedRational::Infinity();
  stats.Aggregate();
  std::stringstream ss;
  WriteTrialsCsv(ss, stats);
  TrialStats back = ReadTrialsCsv(ss, stats.scenario);
  EXPECT_EQ(back.rows, stats.rows);
  EXPECT_EQ(back.event_names, stats.event_names);
  EXPECT_EQ(SummaryToJson(back, 5), SummaryToJson(stats, 5));
  EXPECT_TRUE(back.max_lambda.is_infinite());
}

TEST(TrialsCsvTest, HeaderLayout) {
  TrialStats stats = RunTrials(BuildBadPair(10), 1, 5);
  std::stringstream ss;
  WriteTrialsCsv(ss, stats);
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header,
            "trial,seed,rounds,welfare,optimal,ratio_num,ratio_den,"
            "lambda_num,lambda_den,diverged,welfare_2");
}

TEST(TrialsCsvTest, RejectsMalformedInput) {
  std::istringstream empty("");
  EXPECT_THROW(ReadTrialsCsv(empty, "x"), Error);
  std::istringstream wrong("a,b,c\n");
  EXPECT_THROW(ReadTrialsCsv(wrong, "x"), Error);
}

TEST(SummaryJsonTest, ContainsEventFrequencies) {
  TrialStats stats = RunTrials(BuildBadPair(10), 20, 5);
  const Json j = SummaryToJson(stats, 5);
  EXPECT_TRUE(j.contains("freq_welfare_2"));
  EXPECT_EQ(j["optimal"], 10);
  EXPECT_EQ(j["trials"], 20);
}

TEST(ReportJsonTest, Fields) {
  const Json j = ReportToJson(DegreeOfSubmodularity(Valuation::SymmetricStep(4, 3)));
  EXPECT_EQ(j["alpha"], "3");
  EXPECT_EQ(j["degree"], "1/3");
  EXPECT_TRUE(j.contains("witness"));
}

}  // namespace
}  // namespace smra
