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

#ifndef SMRA_SCENARIO_H_
#define SMRA_SCENARIO_H_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smra/item_set.h"
#include "smra/mechanism.h"
#include "smra/rational.h"
#include "smra/strategy.h"
#include "smra/valuation.h"

namespace smra {

struct Scenario;

// A named yes/no property of one completed auction, tallied across trials.
struct ScenarioEvent {
  std::string name;
  std::function<bool(const Scenario&, const AuctionOutcome&)> holds;
};

struct Scenario {
  std::string name;
  int num_items = 0;
  std::string epsilon_label = "1";
  std::vector<Valuation> valuations;
  std::vector<Strategy> strategies;
  // Near-submodularity the instance family is built to satisfy.
  std::optional<Rational> claimed_alpha;
  // Builder parameters, in insertion order.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ScenarioEvent> events;

  int num_bidders() const { return static_cast<int>(valuations.size()); }
  // Throws kUniverseMismatch / kNotMonotone / kInvalidArgument.
  void Validate() const;
};

// Two items, two bidders valuing each item at 1 and the pair at `pair_value`.
// Truthful bidders. Event "welfare_2": the items were split.
Scenario BuildBadPair(Value pair_value);

// k items and `num_bidders` identical bidders with value (|S|-1)*alpha + 1.
// Truthful bidders. Event "distinct_winners": k different bidders win one
// item each.
Scenario BuildTruthfulTight(int k, int alpha, int num_bidders);

// k*n + 1 items: blocks X_1..X_n of k items and a shared item z (last index).
// n block bidders value (|S & X_i| - 1)*alpha^2 + alpha; for every block item
// x there are `copies` pair bidders with v(x) = 1, v(z) = high and
// v(x, z) = high + alpha. Locally optimal bidders. Block bidders come first.
// Events "type1_empty" and "all_type2".
Scenario BuildLocalTight(int k, int n, int alpha, Value high, int copies);

// Two items; unit-demand bidders 0 and 1 each value one item at scale,
// bidder 2 values each item at scale/2 and the pair at scale * pair_value.
// Secure profit-maximizing bidders. Event "bidder2_empty".
Scenario BuildSuperadditivePair(Value pair_value, Value scale = 2);

// One bidder per part, each scripted to bid its part in round 0. Default
// valuations are additive with value 1 on the bidder's own part. Throws
// kInvalidPartition on empty or overlapping parts.
Scenario BuildScriptedPartition(const std::vector<ItemSet>& partition,
                                int num_items);
Scenario BuildScriptedPartition(const std::vector<ItemSet>& partition,
                                std::vector<Valuation> valuations);

// Three items. Bidder 0 values items 0 and 1 as a complementary pair and is
// scripted to keep bidding on both past the point where item 0 alone is
// worth less than its price; six secure additive bidders value the items at
// 2, 13 and 13. Event "scripted_negative_utility".
Scenario BuildNonsecurePunishment();

// Per-trial seed derived from (master seed, trial index).
std::uint64_t DeriveTrialSeed(std::uint64_t master_seed, int trial);

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int rounds = 0;
  Value welfare = 0;
  Value optimal = 0;
  Rational ratio{1};
  ExtendedRational lambda{1, 1};
  bool diverged = false;
  std::vector<bool> events;

  bool operator==(const TrialRow&) const = default;
};

struct TrialStats {
  std::string scenario;
  std::vector<std::string> event_names;
  std::vector<TrialRow> rows;
  Value optimal = 0;
  double mean_welfare = 0.0;
  double mean_ratio = 0.0;
  ExtendedRational max_lambda{1, 1};
  std::vector<double> event_frequencies;
  int divergences = 0;

  int trials() const { return static_cast<int>(rows.size()); }
  // Recomputes every aggregate from `rows`.
  void Aggregate();
};

struct TrialOptions {
  int jobs = 1;
  int max_rounds = 0;
  // Called once per trial with its outcome; serialized by a mutex.
  std::function<void(const TrialRow&, const AuctionOutcome&)> observer;
};

// Runs `trials` independent auctions; rows are ordered by trial index for
// any job count. Divergent trials are recorded, not thrown.
TrialStats RunTrials(const Scenario& s, int trials, std::uint64_t seed,
                     const TrialOptions& options = {});

}  // namespace smra

#endif  // SMRA_SCENARIO_H_
