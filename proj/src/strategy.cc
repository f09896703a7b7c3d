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

#include "smra/strategy.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>
#include <utility>

#include "smra/errors.h"

namespace smra {

bool BidContext::HasConsistentHistory() const {
  const auto t = static_cast<std::size_t>(round);
  return price_history.size() == t + 1 && provisional_history.size() == t + 1 &&
         bid_history.size() == t;
}

ContextSnapshot ContextSnapshot::At(Valuation v, std::vector<Value> prices,
                                    ItemSet held, ItemSet previous_bid) {
  ContextSnapshot snap{std::move(v), {}, {}, {}, 0};
  // A previous bid implies one earlier round at the same prices.
  if (!previous_bid.empty()) {
    snap.price_history.push_back(prices);
    snap.provisional_history.push_back(held);
    snap.bid_history.push_back(previous_bid);
  }
  snap.price_history.push_back(std::move(prices));
  snap.provisional_history.push_back(held);
  return snap;
}

BidContext ContextSnapshot::context() const {
  BidContext ctx;
  ctx.bidder = bidder;
  ctx.valuation = &valuation;
  ctx.round = static_cast<int>(bid_history.size());
  ctx.price_history = price_history;
  ctx.provisional_history = provisional_history;
  ctx.bid_history = bid_history;
  return ctx;
}

Value PersonalizedPrice(std::span<const Value> prices, ItemSet held,
                        ItemSet s) {
  Value total = 0;
  s.ForEach([&](int j) { total += prices[j] + (held.contains(j) ? 0 : 1); });
  return total;
}

Value ConditionalSurplus(const BidContext& ctx, ItemSet bid) {
  const auto& p = ctx.prices();
  Value cost = 0;
  bid.ForEach([&](int j) { cost += p[j] + 1; });
  return ctx.valuation->EvalUnchecked(ctx.held() | bid) - cost;
}

namespace {

// Smaller cardinality, then smaller bitmask.
bool PreferredOnTie(ItemSet a, ItemSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace

ItemSet TruthfulBid(const BidContext& ctx) {
  ItemSet best;
  Value best_surplus = ConditionalSurplus(ctx, best);
  for (ItemSet t : Subsets(ctx.biddable())) {
    Value s = ConditionalSurplus(ctx, t);
    if (s > best_surplus || (s == best_surplus && PreferredOnTie(t, best))) {
      best = t;
      best_surplus = s;
    }
  }
  return best;
}

namespace {

struct Move {
  // 0 = delete, 1 = add, 2 = swap; lower wins ties.
  int type = -1;
  int removed = -1;
  int added = -1;
  ItemSet result;
  Value surplus = std::numeric_limits<Value>::min();
};

bool BetterMove(const Move& a, const Move& b) {
  if (b.type < 0) return true;
  if (a.surplus != b.surplus) return a.surplus > b.surplus;
  if (a.type != b.type) return a.type < b.type;
  if (a.removed != b.removed) return a.removed < b.removed;
  return a.added < b.added;
}

// Best neighbor of `bid` under add, delete and swap moves.
Move BestMove(const BidContext& ctx, ItemSet bid) {
  Move best;
  const ItemSet outside = ctx.biddable() - bid;
  auto consider = [&](Move m) {
    m.surplus = ConditionalSurplus(ctx, m.result);
    if (BetterMove(m, best)) best = m;
  };
  bid.ForEach([&](int r) { consider(Move{0, r, -1, bid - ItemSet::Single(r)}); });
  outside.ForEach(
      [&](int a) { consider(Move{1, -1, a, bid | ItemSet::Single(a)}); });
  bid.ForEach([&](int r) {
    outside.ForEach([&](int a) {
      consider(Move{2, r, a, (bid - ItemSet::Single(r)) | ItemSet::Single(a)});
    });
  });
  return best;
}

}  // namespace

ItemSet LocallyOptimalBid(const BidContext& ctx, LocalStart start) {
  ItemSet bid;
  if (start == LocalStart::kPrevious && !ctx.bid_history.empty()) {
    bid = ctx.bid_history.back() & ctx.biddable();
  }
  Value surplus = ConditionalSurplus(ctx, bid);
  // Surplus strictly increases per move and takes at most 2^m distinct sets.
  const long long max_moves = (1LL << ctx.num_items()) + 1;
  for (long long moves = 0;; ++moves) {
    if (moves > max_moves) {
      throw Error(ErrorCode::kInvalidArgument,
                  "local search exceeded its move bound");
    }
    Move m = BestMove(ctx, bid);
    if (m.type < 0 || m.surplus <= surplus) break;
    bid = m.result;
    surplus = m.surplus;
  }
  return bid;
}

bool IsLocallyOptimal(const BidContext& ctx, ItemSet bid) {
  if (!bid.IsSubsetOf(ctx.biddable())) return false;
  Move m = BestMove(ctx, bid);
  return m.type < 0 || m.surplus <= ConditionalSurplus(ctx, bid);
}

bool IsSecure(const BidContext& ctx, ItemSet bid, SecureVariant variant) {
  const ItemSet held = ctx.held();
  const auto& p = ctx.prices();
  const Value bump = variant == SecureVariant::kIncremented ? 1 : 0;
  for (ItemSet sub : Subsets(held | bid)) {
    Value price = 0;
    sub.ForEach([&](int j) { price += p[j] + (held.contains(j) ? 0 : bump); });
    if (ctx.valuation->EvalUnchecked(sub) < price) return false;
  }
  return true;
}

ItemSet ProfitMaxSecureBid(const BidContext& ctx, SecureVariant variant) {
  const int m = ctx.num_items();
  const ItemSet held = ctx.held();
  const auto& p = ctx.prices();
  const Value bump = variant == SecureVariant::kIncremented ? 1 : 0;
  const std::uint32_t num_sets = std::uint32_t{1} << m;

  // slack[X] = v(X) - price(X); min_slack[X] = min over subsets of X. A bid
  // T is secure iff min_slack[held | T] >= 0.
  std::vector<Value> min_slack(num_sets);
  for (std::uint32_t x = 0; x < num_sets; ++x) {
    ItemSet set(x);
    Value price = 0;
    set.ForEach([&](int j) { price += p[j] + (held.contains(j) ? 0 : bump); });
    Value slack = ctx.valuation->EvalUnchecked(set) - price;
    for (std::uint32_t b = x; b != 0; b &= b - 1) {
      slack = std::min(slack, min_slack[x & ~(b & -b)]);
    }
    min_slack[x] = slack;
  }
  if (min_slack[held.bits()] < 0) {
    throw Error(ErrorCode::kInsecureProvisionalState,
                "bidder " + std::to_string(ctx.bidder) + " holds " +
                    held.ToString() + " with an insecure subset");
  }

  ItemSet best;
  Value best_surplus = ConditionalSurplus(ctx, best);
  for (ItemSet t : Subsets(ctx.biddable())) {
    if (t.empty() || min_slack[(held | t).bits()] < 0) continue;
    Value s = ConditionalSurplus(ctx, t);
    bool better = s > best_surplus;
    if (s == best_surplus) {
      // A nonempty bid that ties the empty bid wins.
      better = best.empty() || PreferredOnTie(t, best);
    }
    if (better) {
      best = t;
      best_surplus = s;
    }
  }
  return best;
}

ItemSet ScriptedBid(const BidContext& ctx, std::span<const ItemSet> script) {
  if (ctx.round < 0 || static_cast<std::size_t>(ctx.round) >= script.size()) {
    return {};
  }
  return script[ctx.round] & ctx.biddable();
}

std::string_view StrategyKindName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kTruthful: return "truthful";
    case StrategyKind::kLocallyOptimal: return "locally_optimal";
    case StrategyKind::kSecureProfitMax: return "secure_profit_max";
    case StrategyKind::kScripted: return "scripted";
    case StrategyKind::kCustom: return "custom";
  }
  return "unknown";
}

Strategy Strategy::Truthful() { return Strategy(StrategyKind::kTruthful); }

Strategy Strategy::LocallyOptimal(LocalStart start) {
  Strategy s(StrategyKind::kLocallyOptimal);
  s.local_start_ = start;
  return s;
}

Strategy Strategy::SecureProfitMax(SecureVariant variant) {
  Strategy s(StrategyKind::kSecureProfitMax);
  s.secure_variant_ = variant;
  return s;
}

Strategy Strategy::Scripted(std::vector<ItemSet> script) {
  Strategy s(StrategyKind::kScripted);
  s.script_ = std::move(script);
  return s;
}

Strategy Strategy::Custom(BidFunction fn) {
  Strategy s(StrategyKind::kCustom);
  s.custom_ = std::move(fn);
  return s;
}

ItemSet Strategy::Bid(const BidContext& ctx) const {
  switch (kind_) {
    case StrategyKind::kTruthful:
      return TruthfulBid(ctx);
    case StrategyKind::kLocallyOptimal:
      return LocallyOptimalBid(ctx, local_start_);
    case StrategyKind::kSecureProfitMax:
      return ProfitMaxSecureBid(ctx, secure_variant_);
    case StrategyKind::kScripted:
      return ScriptedBid(ctx, script_);
    case StrategyKind::kCustom:
      return custom_(ctx);
  }
  return {};
}

}  // namespace smra
