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

#ifndef SMRA_STRATEGY_H_
#define SMRA_STRATEGY_H_

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "smra/item_set.h"
#include "smra/valuation.h"

namespace smra {

// Everything a bidder may observe when choosing a conditional bid in round t.
// Histories are views into storage owned by the auction driver.
struct BidContext {
  int bidder = 0;
  const Valuation* valuation = nullptr;
  int round = 0;
  // p^0 .. p^t.
  std::span<const std::vector<Value>> price_history;
  // S^0 .. S^t for this bidder.
  std::span<const ItemSet> provisional_history;
  // T^0 .. T^{t-1} for this bidder.
  std::span<const ItemSet> bid_history;

  int num_items() const { return valuation->num_items(); }
  const std::vector<Value>& prices() const { return price_history.back(); }
  ItemSet held() const { return provisional_history.back(); }
  // Items the bidder may bid on this round.
  ItemSet biddable() const { return ItemSet::Full(num_items()) - held(); }
  bool HasConsistentHistory() const;
};

// Owned storage for a BidContext, for tests and one-off queries.
struct ContextSnapshot {
  Valuation valuation;
  std::vector<std::vector<Value>> price_history;
  std::vector<ItemSet> provisional_history;
  std::vector<ItemSet> bid_history;
  int bidder = 0;

  // Single-round snapshot: t = 0 history with the given prices and holdings.
  static ContextSnapshot At(Valuation v, std::vector<Value> prices,
                            ItemSet held, ItemSet previous_bid = {});
  BidContext context() const;
};

// Whether the security check charges bid items the incremented price
// (p + 1) or the current price p.
enum class SecureVariant { kIncremented, kPlain };
// Starting point of the local search.
enum class LocalStart { kPrevious, kEmpty };

// v(S + T) - sum_{j in T} (p_j + 1): the quantity truthful and local bidders
// compare; it differs from the conditional utility by the constant v(S).
Value ConditionalSurplus(const BidContext& ctx, ItemSet bid);

// Price of `s` as seen by the bidder: current price on held items, current
// price plus one increment elsewhere.
Value PersonalizedPrice(std::span<const Value> prices, ItemSet held,
                        ItemSet s);

// Exhaustive argmax of the conditional surplus over T within the biddable
// items. Ties go to the smaller cardinality, then the smaller bitmask, so a
// zero-surplus maximum yields the empty bid.
ItemSet TruthfulBid(const BidContext& ctx);

// Best-improvement add/delete/swap search on the conditional surplus.
ItemSet LocallyOptimalBid(const BidContext& ctx,
                          LocalStart start = LocalStart::kPrevious);

// No bid within one add, delete or swap of `bid` has strictly larger surplus.
bool IsLocallyOptimal(const BidContext& ctx, ItemSet bid);

// Every subset of held + bid is worth at least its personalized price.
bool IsSecure(const BidContext& ctx, ItemSet bid,
              SecureVariant variant = SecureVariant::kIncremented);

// Utility-maximizing secure bid. A nonempty secure bid that ties the empty
// bid is preferred; remaining ties go to smaller cardinality, then bitmask.
// Throws kInsecureProvisionalState when even the empty bid is insecure.
ItemSet ProfitMaxSecureBid(const BidContext& ctx,
                           SecureVariant variant = SecureVariant::kIncremented);

// script[t] minus held items; empty after the script ends.
ItemSet ScriptedBid(const BidContext& ctx,
                    std::span<const ItemSet> script);

enum class StrategyKind {
  kTruthful,
  kLocallyOptimal,
  kSecureProfitMax,
  kScripted,
  kCustom,
};

std::string_view StrategyKindName(StrategyKind kind);

// A bidding behavior: one of the built-in kinds or a custom function of the
// context. Must be a pure function of the context.
class Strategy {
 public:
  using BidFunction = std::function<ItemSet(const BidContext&)>;

  static Strategy Truthful();
  static Strategy LocallyOptimal(LocalStart start = LocalStart::kPrevious);
  static Strategy SecureProfitMax(
      SecureVariant variant = SecureVariant::kIncremented);
  static Strategy Scripted(std::vector<ItemSet> script);
  static Strategy Custom(BidFunction fn);

  StrategyKind kind() const { return kind_; }
  LocalStart local_start() const { return local_start_; }
  SecureVariant secure_variant() const { return secure_variant_; }
  const std::vector<ItemSet>& script() const { return script_; }

  void set_local_start(LocalStart s) { local_start_ = s; }
  void set_secure_variant(SecureVariant v) { secure_variant_ = v; }

  ItemSet Bid(const BidContext& ctx) const;

 private:
  explicit Strategy(StrategyKind kind) : kind_(kind) {}

  StrategyKind kind_;
  LocalStart local_start_ = LocalStart::kPrevious;
  SecureVariant secure_variant_ = SecureVariant::kIncremented;
  std::vector<ItemSet> script_;
  BidFunction custom_;
};

}  // namespace smra

#endif  // SMRA_STRATEGY_H_
