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

#ifndef SMRA_MECHANISM_H_
#define SMRA_MECHANISM_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "smra/errors.h"
#include "smra/item_set.h"
#include "smra/strategy.h"
#include "smra/valuation.h"

namespace smra {

// Seeded source for winner draws; owned per run.
using Rng = std::mt19937_64;

// One random standing-high-bidder selection.
struct WinnerDraw {
  int item = 0;
  // Bidders whose conditional bid contains the item, ascending.
  std::vector<int> candidates;
  int chosen = 0;

  bool operator==(const WinnerDraw&) const = default;
};

struct RoundRecord {
  int round = 0;
  std::vector<Value> prices_before;
  std::vector<ItemSet> bids;
  ItemSet excess;
  // In ascending item order, one per excess-demand item.
  std::vector<WinnerDraw> draws;
  std::vector<Value> prices_after;
  std::vector<ItemSet> provisional_after;

  bool operator==(const RoundRecord&) const = default;
};

struct AuctionState {
  int round = 0;
  std::vector<Value> prices;
  std::vector<ItemSet> provisional;
  std::vector<RoundRecord> history;

  int num_items() const { return static_cast<int>(prices.size()); }
  int num_bidders() const { return static_cast<int>(provisional.size()); }
  // Standing high bidder of `item`, or -1.
  int OwnerOf(int item) const;
};

struct AuctionOutcome {
  std::vector<ItemSet> allocation;
  std::vector<Value> prices;
  int rounds = 0;
  std::vector<RoundRecord> trace;
  bool diverged = false;

  Value PriceOf(ItemSet s) const;
};

// Raised when the round counter passes max_rounds; carries the partial run.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(AuctionOutcome partial);
  const AuctionOutcome& partial() const { return partial_; }

 private:
  AuctionOutcome partial_;
};

// Round 0 state: zero prices, empty provisional sets. Requires m in
// [1, kMaxItems] and n >= 1.
AuctionState InitAuction(int num_items, int num_bidders);

// p^t on held items, p^t + 1 on the rest.
Value PersonalizedPrice(const AuctionState& state, int bidder, ItemSet s);

// Picks the new standing high bidder among `candidates` for `item`; returns
// an index into `candidates`.
using WinnerChooser =
    std::function<std::size_t(int item, std::span<const int> candidates)>;

// Applies one round of conditional bids: every item in some bid gains one
// increment and a new standing high bidder drawn from its bidders (ascending
// item order). Throws kInvalidBid when a bid overlaps its bidder's
// provisional set or leaves the universe.
AuctionState RunRound(AuctionState state, std::span<const ItemSet> bids,
                      Rng& rng);
AuctionState RunRound(AuctionState state, std::span<const ItemSet> bids,
                      const WinnerChooser& choose);

// n * m * (1 + max_i v_i(all items)).
int DefaultMaxRounds(std::span<const Valuation> valuations);

// Runs the auction until every conditional bid is empty. max_rounds <= 0
// selects DefaultMaxRounds. Throws DivergenceError when the bound is hit.
AuctionOutcome RunAuction(std::span<const Valuation> valuations,
                          std::span<const Strategy> strategies,
                          std::uint64_t seed, int max_rounds = 0);

// Re-applies the recorded bids and draws from a fresh state and returns the
// provisional sets after each round. Throws kInvalidBid if a recorded draw
// is inconsistent with the recorded bids.
std::vector<std::vector<ItemSet>> ReplayTrace(
    std::span<const RoundRecord> trace, int num_items, int num_bidders);

}  // namespace smra

#endif  // SMRA_MECHANISM_H_
