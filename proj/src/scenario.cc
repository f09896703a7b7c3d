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

#include "smra/scenario.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "smra/errors.h"
#include "smra/oracle.h"

namespace smra {

void Scenario::Validate() const {
  if (num_items < 1 || num_items > kMaxItems) {
    throw Error(ErrorCode::kInvalidArgument,
                "scenario '" + name + "' has invalid item count");
  }
  if (valuations.empty() || valuations.size() != strategies.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "scenario '" + name + "' needs one strategy per bidder");
  }
  for (std::size_t i = 0; i < valuations.size(); ++i) {
    if (valuations[i].num_items() != num_items) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "bidder " + std::to_string(i) + " valuation has " +
                      std::to_string(valuations[i].num_items()) + " items");
    }
    if (!IsMonotone(valuations[i])) {
      throw Error(ErrorCode::kNotMonotone,
                  "bidder " + std::to_string(i) + " valuation not monotone");
    }
    for (const ItemSet& s : strategies[i].script()) {
      if (!s.WithinUniverse(num_items)) {
        throw Error(ErrorCode::kUniverseMismatch,
                    "bidder " + std::to_string(i) + " script leaves universe");
      }
    }
  }
}

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

Value UtilityOf(const Scenario& s, const AuctionOutcome& out, int bidder) {
  return s.valuations[bidder].Eval(out.allocation[bidder]) -
         out.PriceOf(out.allocation[bidder]);
}

}  // namespace

Scenario BuildBadPair(Value pair_value) {
  Require(pair_value >= 2, "bad_pair needs M >= 2");
  Scenario s;
  s.name = "bad_pair";
  s.num_items = 2;
  for (int i = 0; i < 2; ++i) {
    s.valuations.push_back(Valuation::PairBonus(2, 1, pair_value));
    s.strategies.push_back(Strategy::Truthful());
  }
  s.claimed_alpha = Rational(std::max<Value>(1, pair_value - 1));
  s.parameters = {{"M", std::to_string(pair_value)}};
  s.events.push_back({"welfare_2", [](const Scenario&, const AuctionOutcome& o) {
                        return o.allocation[0].size() == 1 &&
                               o.allocation[1].size() == 1;
                      }});
  return s;
}

Scenario BuildTruthfulTight(int k, int alpha, int num_bidders) {
  Require(k >= 2, "truthful_tight needs k >= 2");
  Require(alpha >= 1, "truthful_tight needs alpha >= 1");
  Require(num_bidders > k, "truthful_tight needs L > k");
  Scenario s;
  s.name = "truthful_tight";
  s.num_items = k;
  for (int i = 0; i < num_bidders; ++i) {
    s.valuations.push_back(Valuation::SymmetricStep(k, alpha));
    s.strategies.push_back(Strategy::Truthful());
  }
  s.claimed_alpha = Rational(alpha);
  s.parameters = {{"k", std::to_string(k)},
                  {"alpha", std::to_string(alpha)},
                  {"L", std::to_string(num_bidders)}};
  s.events.push_back(
      {"distinct_winners", [](const Scenario& sc, const AuctionOutcome& o) {
         int winners = 0;
         for (const ItemSet& a : o.allocation) {
           if (a.size() > 1) return false;
           winners += a.size();
         }
         return winners == sc.num_items;
       }});
  return s;
}

Scenario BuildLocalTight(int k, int n, int alpha, Value high, int copies) {
  Require(k >= 1 && n >= 1, "local_tight needs k, n >= 1");
  Require(alpha >= 1, "local_tight needs alpha >= 1");
  Require(high > alpha, "local_tight needs H > alpha");
  Require(copies >= 1, "local_tight needs L >= 1");
  const int m = k * n + 1;
  Require(m <= kMaxItems, "local_tight has too many items");
  const int z = m - 1;
  Scenario s;
  s.name = "local_tight";
  s.num_items = m;
  for (int i = 0; i < n; ++i) {
    ItemSet block;
    for (int j = 0; j < k; ++j) block.insert(i * k + j);
    s.valuations.push_back(Valuation::SymmetricStep(m, block, alpha, 1, alpha));
    s.strategies.push_back(Strategy::LocallyOptimal(LocalStart::kEmpty));
  }
  for (int x = 0; x < k * n; ++x) {
    for (int c = 0; c < copies; ++c) {
      s.valuations.push_back(Valuation::Type2Pair(m, x, z, 1, high, alpha));
      s.strategies.push_back(Strategy::LocallyOptimal(LocalStart::kEmpty));
    }
  }
  s.claimed_alpha = Rational(alpha);
  s.parameters = {{"k", std::to_string(k)},     {"n", std::to_string(n)},
                  {"alpha", std::to_string(alpha)}, {"H", std::to_string(high)},
                  {"L", std::to_string(copies)}};
  s.events.push_back({"type1_empty", [n](const Scenario&, const AuctionOutcome& o) {
                        for (int i = 0; i < n; ++i) {
                          if (!o.allocation[i].empty()) return false;
                        }
                        return true;
                      }});
  s.events.push_back({"all_type2", [n](const Scenario& sc, const AuctionOutcome& o) {
                        ItemSet owned;
                        for (int i = n; i < sc.num_bidders(); ++i) {
                          owned |= o.allocation[i];
                        }
                        return owned == ItemSet::Full(sc.num_items);
                      }});
  return s;
}

Scenario BuildSuperadditivePair(Value pair_value, Value scale) {
  Require(pair_value >= 2, "superadditive_pair needs M >= 2");
  Require(scale >= 2 && scale % 2 == 0, "superadditive_pair scale must be even");
  Scenario s;
  s.name = "superadditive_pair";
  s.num_items = 2;
  s.valuations.push_back(Valuation::UnitDemand(2, {scale, 0}));
  s.valuations.push_back(Valuation::UnitDemand(2, {0, scale}));
  s.valuations.push_back(
      Valuation::PairBonus(2, scale / 2, scale * pair_value));
  for (int i = 0; i < 3; ++i) s.strategies.push_back(Strategy::SecureProfitMax());
  s.parameters = {{"M", std::to_string(pair_value)},
                  {"scale", std::to_string(scale)}};
  s.events.push_back(
      {"bidder2_empty", [](const Scenario&, const AuctionOutcome& o) {
         return o.allocation[2].empty();
       }});
  return s;
}

Scenario BuildScriptedPartition(const std::vector<ItemSet>& partition,
                                int num_items) {
  std::vector<Valuation> valuations;
  for (const ItemSet& part : partition) {
    std::vector<Value> w(num_items, 0);
    part.ForEach([&](int j) {
      if (j < num_items) w[j] = 1;
    });
    valuations.push_back(Valuation::Additive(num_items, w));
  }
  return BuildScriptedPartition(partition, std::move(valuations));
}

Scenario BuildScriptedPartition(const std::vector<ItemSet>& partition,
                                std::vector<Valuation> valuations) {
  if (partition.empty() || partition.size() != valuations.size()) {
    throw Error(ErrorCode::kInvalidPartition,
                "need one nonempty part per bidder");
  }
  const int m = valuations.front().num_items();
  ItemSet seen;
  for (const ItemSet& part : partition) {
    if (part.empty()) {
      throw Error(ErrorCode::kInvalidPartition, "empty part");
    }
    if (!part.WithinUniverse(m) || part.Intersects(seen)) {
      throw Error(ErrorCode::kInvalidPartition,
                  "part " + part.ToString() + " overlaps or leaves universe");
    }
    seen |= part;
  }
  Scenario s;
  s.name = "scripted_partition";
  s.num_items = m;
  s.valuations = std::move(valuations);
  for (const ItemSet& part : partition) {
    s.strategies.push_back(Strategy::Scripted({part}));
  }
  std::string parts;
  for (const ItemSet& part : partition) parts += part.ToString();
  s.parameters = {{"partition", parts}};
  std::vector<ItemSet> target = partition;
  s.events.push_back(
      {"partition_reproduced",
       [target](const Scenario&, const AuctionOutcome& o) {
         return o.allocation == target;
       }});
  return s;
}

Scenario BuildNonsecurePunishment() {
  Scenario s;
  s.name = "nonsecure_punishment";
  s.num_items = 3;
  const ItemSet pair{0, 1};
  s.valuations.push_back(Valuation::PairBonus(3, 1, 10, 0, 1));
  s.strategies.push_back(Strategy::Scripted({pair, pair, pair}));
  for (int c = 0; c < 6; ++c) {
    s.valuations.push_back(Valuation::Additive(3, {2, 13, 13}));
    s.strategies.push_back(Strategy::SecureProfitMax());
  }
  s.events.push_back(
      {"scripted_negative_utility",
       [](const Scenario& sc, const AuctionOutcome& o) {
         return UtilityOf(sc, o, 0) < 0;
       }});
  return s;
}

std::uint64_t DeriveTrialSeed(std::uint64_t master_seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

void TrialStats::Aggregate() {
  optimal = rows.empty() ? 0 : rows.front().optimal;
  event_frequencies.assign(event_names.size(), 0.0);
  max_lambda = ExtendedRational(1, 1);
  divergences = 0;
  long double welfare_sum = 0;
  long double ratio_sum = 0;
  std::vector<int> counts(event_names.size(), 0);
  bool first = true;
  for (const TrialRow& r : rows) {
    welfare_sum += r.welfare;
    ratio_sum += boost::rational_cast<long double>(r.ratio);
    if (first || r.lambda > max_lambda) max_lambda = r.lambda;
    first = false;
    divergences += r.diverged ? 1 : 0;
    for (std::size_t e = 0; e < counts.size() && e < r.events.size(); ++e) {
      counts[e] += r.events[e] ? 1 : 0;
    }
  }
  const double n = rows.empty() ? 1.0 : static_cast<double>(rows.size());
  mean_welfare = static_cast<double>(welfare_sum / n);
  mean_ratio = static_cast<double>(ratio_sum / n);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    event_frequencies[e] = counts[e] / n;
  }
}

TrialStats RunTrials(const Scenario& s, int trials, std::uint64_t seed,
                     const TrialOptions& options) {
  Require(trials >= 1, "trials must be at least 1");
  s.Validate();
  const OptimalAllocation opt = OptimalWelfare(s.valuations);

  TrialStats stats;
  stats.scenario = s.name;
  for (const ScenarioEvent& e : s.events) stats.event_names.push_back(e.name);
  stats.rows.resize(trials);

  std::mutex observer_mutex;
  auto run_one = [&](int t) {
    TrialRow row;
    row.trial = t;
    row.seed = DeriveTrialSeed(seed, t);
    row.optimal = opt.welfare;
    AuctionOutcome outcome;
    try {
      outcome = RunAuction(s.valuations, s.strategies, row.seed,
                           options.max_rounds);
    } catch (const DivergenceError& e) {
      outcome = e.partial();
    }
    row.rounds = outcome.rounds;
    row.diverged = outcome.diverged;
    row.welfare = Welfare(outcome.allocation, s.valuations);
    row.ratio = WelfareRatio(row.welfare, opt);
    row.lambda = MeasureRationality(outcome, s.valuations).lambda;
    for (const ScenarioEvent& e : s.events) {
      row.events.push_back(e.holds(s, outcome));
    }
    if (options.observer) {
      std::lock_guard<std::mutex> lock(observer_mutex);
      options.observer(row, outcome);
    }
    stats.rows[t] = std::move(row);
  };

  const int jobs = std::clamp(options.jobs, 1, trials);
  if (jobs == 1) {
    for (int t = 0; t < trials; ++t) run_one(t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    std::mutex error_mutex;
    std::exception_ptr failure;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        try {
          for (int t = next++; t < trials; t = next++) run_one(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!failure) failure = std::current_exception();
          next = trials;
        }
      });
    }
    for (std::thread& th : workers) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  stats.Aggregate();
  return stats;
}

}  // namespace smra
