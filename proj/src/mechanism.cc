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

#include "smra/mechanism.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace smra {

int AuctionState::OwnerOf(int item) const {
  for (int i = 0; i < num_bidders(); ++i) {
    if (provisional[i].contains(item)) return i;
  }
  return -1;
}

Value AuctionOutcome::PriceOf(ItemSet s) const {
  Value total = 0;
  s.ForEach([&](int j) { total += prices[j]; });
  return total;
}

DivergenceError::DivergenceError(AuctionOutcome partial)
    : Error(ErrorCode::kDivergence,
            "no termination after " + std::to_string(partial.rounds) +
                " rounds"),
      partial_(std::move(partial)) {}

AuctionState InitAuction(int num_items, int num_bidders) {
  if (num_items < 1 || num_items > kMaxItems) {
    throw Error(ErrorCode::kInvalidArgument,
                "item count must be in [1, " + std::to_string(kMaxItems) + "]");
  }
  if (num_bidders < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one bidder");
  }
  AuctionState state;
  state.prices.assign(num_items, 0);
  state.provisional.assign(num_bidders, ItemSet{});
  return state;
}

Value PersonalizedPrice(const AuctionState& state, int bidder, ItemSet s) {
  return PersonalizedPrice(state.prices, state.provisional.at(bidder), s);
}

AuctionState RunRound(AuctionState state, std::span<const ItemSet> bids,
                      const WinnerChooser& choose) {
  const int n = state.num_bidders();
  const int m = state.num_items();
  if (static_cast<int>(bids.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(n) + " bids, got " +
                    std::to_string(bids.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (!bids[i].WithinUniverse(m) || bids[i].Intersects(state.provisional[i])) {
      throw Error(ErrorCode::kInvalidBid,
                  "bidder " + std::to_string(i) + " bid " + bids[i].ToString() +
                      " against provisional set " +
                      state.provisional[i].ToString());
    }
  }

  RoundRecord record;
  record.round = state.round;
  record.prices_before = state.prices;
  record.bids.assign(bids.begin(), bids.end());

  std::vector<int> candidates;
  for (int j = 0; j < m; ++j) {
    candidates.clear();
    for (int i = 0; i < n; ++i) {
      if (bids[i].contains(j)) candidates.push_back(i);
    }
    if (candidates.empty()) continue;
    const std::size_t pick = choose(j, candidates);
    if (pick >= candidates.size()) {
      throw Error(ErrorCode::kInvalidBid,
                  "winner draw out of range for item " + std::to_string(j));
    }
    const int winner = candidates[pick];
    for (ItemSet& s : state.provisional) s.erase(j);
    state.provisional[winner].insert(j);
    state.prices[j] += 1;
    record.excess.insert(j);
    record.draws.push_back(WinnerDraw{j, candidates, winner});
  }

  record.prices_after = state.prices;
  record.provisional_after = state.provisional;
  state.history.push_back(std::move(record));
  state.round += 1;
  return state;
}

AuctionState RunRound(AuctionState state, std::span<const ItemSet> bids,
                      Rng& rng) {
  return RunRound(std::move(state), bids,
                  [&rng](int, std::span<const int> candidates) {
                    if (candidates.size() == 1) return std::size_t{0};
                    std::uniform_int_distribution<std::size_t> dist(
                        0, candidates.size() - 1);
                    return dist(rng);
                  });
}

int DefaultMaxRounds(std::span<const Valuation> valuations) {
  if (valuations.empty()) return 1;
  const long long n = static_cast<long long>(valuations.size());
  const long long m = valuations.front().num_items();
  Value top = 0;
  for (const Valuation& v : valuations) top = std::max(top, v.FullValue());
  long long bound = n * m * (1 + top);
  return static_cast<int>(
      std::min<long long>(bound, std::numeric_limits<int>::max()));
}

AuctionOutcome RunAuction(std::span<const Valuation> valuations,
                          std::span<const Strategy> strategies,
                          std::uint64_t seed, int max_rounds) {
  if (valuations.empty() || valuations.size() != strategies.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need one strategy per valuation and at least one bidder");
  }
  const int n = static_cast<int>(valuations.size());
  const int m = valuations.front().num_items();
  for (const Valuation& v : valuations) {
    if (v.num_items() != m) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "valuations disagree on the item count");
    }
  }
  if (max_rounds <= 0) max_rounds = DefaultMaxRounds(valuations);

  Rng rng(seed);
  AuctionState state = InitAuction(m, n);

  // History storage the bid contexts view into.
  std::vector<std::vector<Value>> price_history{state.prices};
  std::vector<std::vector<ItemSet>> provisional_history(
      n, std::vector<ItemSet>{ItemSet{}});
  std::vector<std::vector<ItemSet>> bid_history(n);

  auto finish = [&](bool diverged) {
    AuctionOutcome out;
    out.allocation = state.provisional;
    out.prices = state.prices;
    out.rounds = state.round;
    out.trace = std::move(state.history);
    out.diverged = diverged;
    return out;
  };

  std::vector<ItemSet> bids(n);
  while (true) {
    bool any = false;
    for (int i = 0; i < n; ++i) {
      BidContext ctx;
      ctx.bidder = i;
      ctx.valuation = &valuations[i];
      ctx.round = state.round;
      ctx.price_history = price_history;
      ctx.provisional_history = provisional_history[i];
      ctx.bid_history = bid_history[i];
      bids[i] = strategies[i].Bid(ctx);
      any = any || !bids[i].empty();
    }
    if (!any) break;
    if (state.round >= max_rounds) throw DivergenceError(finish(true));

    state = RunRound(std::move(state), bids, rng);
    price_history.push_back(state.prices);
    for (int i = 0; i < n; ++i) {
      provisional_history[i].push_back(state.provisional[i]);
      bid_history[i].push_back(bids[i]);
    }
  }
  return finish(false);
}

std::vector<std::vector<ItemSet>> ReplayTrace(
    std::span<const RoundRecord> trace, int num_items, int num_bidders) {
  AuctionState state = InitAuction(num_items, num_bidders);
  std::vector<std::vector<ItemSet>> sequence;
  for (const RoundRecord& r : trace) {
    std::size_t next = 0;
    auto replay = [&](int item, std::span<const int> candidates) {
      if (next >= r.draws.size() || r.draws[next].item != item ||
          !std::equal(candidates.begin(), candidates.end(),
                      r.draws[next].candidates.begin(),
                      r.draws[next].candidates.end())) {
        throw Error(ErrorCode::kInvalidBid,
                    "trace draw mismatch at round " + std::to_string(r.round) +
                        " item " + std::to_string(item));
      }
      const WinnerDraw& d = r.draws[next++];
      auto it = std::find(candidates.begin(), candidates.end(), d.chosen);
      return static_cast<std::size_t>(it - candidates.begin());
    };
    state = RunRound(std::move(state), r.bids, replay);
    if (next != r.draws.size()) {
      throw Error(ErrorCode::kInvalidBid,
                  "unused draws at round " + std::to_string(r.round));
    }
    sequence.push_back(state.provisional);
  }
  return sequence;
}

}  // namespace smra
