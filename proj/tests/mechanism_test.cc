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

#include <cstdint>
#include <vector>

#include "brute_force.h"
#include "gtest/gtest.h"
#include "smra/errors.h"
#include "smra/oracle.h"

namespace smra {
namespace {

TEST(InitAuctionTest, StartsAtZero) {
  AuctionState s = InitAuction(2, 2);
  EXPECT_EQ(s.prices, (std::vector<Value>{0, 0}));
  EXPECT_EQ(s.provisional, (std::vector<ItemSet>{ItemSet{}, ItemSet{}}));
  AuctionState one = InitAuction(1, 1);
  EXPECT_EQ(one.prices, std::vector<Value>{0});
  EXPECT_THROW(InitAuction(0, 1), Error);
  EXPECT_THROW(InitAuction(25, 1), Error);
  EXPECT_THROW(InitAuction(2, 0), Error);
}

TEST(PersonalizedPriceTest, HeldItemsAtPriceOthersIncremented) {
  AuctionState s = InitAuction(2, 1);
  s.prices = {3, 5};
  s.provisional[0] = ItemSet{0};
  EXPECT_EQ(PersonalizedPrice(s, 0, ItemSet({0, 1})), 9);
  EXPECT_EQ(PersonalizedPrice(s, 0, ItemSet{}), 0);
  s.provisional[0] = ItemSet{};
  EXPECT_EQ(PersonalizedPrice(s, 0, ItemSet({0, 1})), 10);
}

TEST(RunRoundTest, BothBiddersOnBothItems) {
  Rng rng(3);
  AuctionState s = InitAuction(2, 2);
  std::vector<ItemSet> bids = {ItemSet({0, 1}), ItemSet({0, 1})};
  s = RunRound(std::move(s), bids, rng);
  EXPECT_EQ(s.prices, (std::vector<Value>{1, 1}));
  EXPECT_EQ(s.round, 1);
  ASSERT_EQ(s.history.size(), 1u);
  const RoundRecord& r = s.history[0];
  EXPECT_EQ(r.excess, ItemSet({0, 1}));
  ASSERT_EQ(r.draws.size(), 2u);
  for (int j = 0; j < 2; ++j) {
    EXPECT_EQ(r.draws[j].item, j);
    EXPECT_EQ(r.draws[j].candidates, (std::vector<int>{0, 1}));
    EXPECT_TRUE(s.provisional[r.draws[j].chosen].contains(j));
  }
}

TEST(RunRoundTest, EachSplitHasProbabilityOneHalf) {
  int split = 0;
  const int kTrials = 4000;
  Rng rng(17);
  for (int t = 0; t < kTrials; ++t) {
    AuctionState s = InitAuction(2, 2);
    std::vector<ItemSet> bids = {ItemSet({0, 1}), ItemSet({0, 1})};
    s = RunRound(std::move(s), bids, rng);
    split += s.provisional[0].size() == 1 ? 1 : 0;
  }
  EXPECT_NEAR(split / static_cast<double>(kTrials), 0.5, 0.03);
}

TEST(RunRoundTest, EmptyBidsOnlyAdvanceTheCounter) {
  Rng rng(1);
  AuctionState s = InitAuction(2, 2);
  s.prices = {4, 1};
  s.provisional[1] = ItemSet{0};
  std::vector<ItemSet> bids(2);
  AuctionState next = RunRound(s, bids, rng);
  EXPECT_EQ(next.prices, s.prices);
  EXPECT_EQ(next.provisional, s.provisional);
  EXPECT_EQ(next.round, s.round + 1);
}

TEST(RunRoundTest, SingleBidderIsDeterministic) {
  Rng rng(1);
  Rng untouched(1);
  AuctionState s = InitAuction(1, 1);
  std::vector<ItemSet> bids = {ItemSet{0}};
  s = RunRound(std::move(s), bids, rng);
  EXPECT_EQ(s.prices, std::vector<Value>{1});
  EXPECT_EQ(s.provisional[0], ItemSet{0});
  EXPECT_EQ(rng(), untouched());
}

TEST(RunRoundTest, RejectsBidsOnHeldOrForeignItems) {
  Rng rng(1);
  AuctionState s = InitAuction(2, 2);
  s.provisional[0] = ItemSet{1};
  std::vector<ItemSet> overlap = {ItemSet{1}, ItemSet{}};
  EXPECT_THROW(RunRound(s, overlap, rng), Error);
  std::vector<ItemSet> foreign = {ItemSet{}, ItemSet{5}};
  EXPECT_THROW(RunRound(s, foreign, rng), Error);
  std::vector<ItemSet> short_list = {ItemSet{}};
  EXPECT_THROW(RunRound(s, short_list, rng), Error);
}

TEST(RunAuctionTest, PairInstanceWelfareIsTwoOrTen) {
  std::vector<Valuation> vals(2, Valuation::PairBonus(2, 1, 10));
  std::vector<Strategy> strats(2, Strategy::Truthful());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    AuctionOutcome o = RunAuction(vals, strats, seed);
    const Value w = Welfare(o.allocation, vals);
    EXPECT_TRUE(w == 2 || w == 10) << "seed " << seed << " welfare " << w;
  }
}

TEST(RunAuctionTest, LoneBidderWinsAtOneIncrement) {
  std::vector<Valuation> vals = {Valuation::Additive({5})};
  std::vector<Strategy> strats = {Strategy::Truthful()};
  AuctionOutcome o = RunAuction(vals, strats, 0);
  EXPECT_EQ(o.rounds, 1);
  EXPECT_EQ(o.prices, std::vector<Value>{1});
  EXPECT_EQ(o.allocation[0], ItemSet{0});
}

TEST(RunAuctionTest, ZeroValuationsTerminateImmediately) {
  std::vector<Valuation> vals(3, Valuation::Zero(4));
  std::vector<Strategy> strats(3, Strategy::Truthful());
  AuctionOutcome o = RunAuction(vals, strats, 0);
  EXPECT_EQ(o.rounds, 0);
  EXPECT_EQ(o.prices, std::vector<Value>(4, 0));
  for (ItemSet a : o.allocation) EXPECT_TRUE(a.empty());
}

TEST(RunAuctionTest, DivergenceCarriesPartialOutcome) {
  // Always bids on everything not held; never stops.
  Strategy greedy = Strategy::Custom(
      [](const BidContext& ctx) { return ctx.biddable(); });
  std::vector<Valuation> vals(2, Valuation::Additive({1, 1}));
  std::vector<Strategy> strats(2, greedy);
  try {
    RunAuction(vals, strats, 0, 7);
    FAIL() << "expected divergence";
  } catch (const DivergenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivergence);
    EXPECT_TRUE(e.partial().diverged);
    EXPECT_EQ(e.partial().rounds, 7);
  }
}

// Round-level invariants over a mix of strategies.
class AuctionInvariantTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(AuctionInvariantTest, RoundInvariantsHold) {
  const std::uint64_t seed = GetParam();
  testing::RandomInstance inst = testing::MakeRandomInstance(seed);
  const int n = static_cast<int>(inst.valuations.size());
  std::vector<Strategy> strats;
  for (int i = 0; i < n; ++i) {
    switch ((seed + i) % 3) {
      case 0: strats.push_back(Strategy::Truthful()); break;
      case 1: strats.push_back(Strategy::LocallyOptimal()); break;
      default: strats.push_back(Strategy::SecureProfitMax()); break;
    }
  }
  AuctionOutcome o = RunAuction(inst.valuations, strats, seed);
  ASSERT_FALSE(o.diverged);
  std::vector<Value> prices(inst.num_items, 0);
  std::vector<ItemSet> held(n);
  for (const RoundRecord& r : o.trace) {
    EXPECT_EQ(r.prices_before, prices);
    for (int j = 0; j < inst.num_items; ++j) {
      const Value step = r.prices_after[j] - r.prices_before[j];
      EXPECT_TRUE(step == 0 || step == 1);
      EXPECT_EQ(step == 1, r.excess.contains(j));
    }
    ItemSet seen;
    for (int i = 0; i < n; ++i) {
      EXPECT_FALSE(r.provisional_after[i].Intersects(seen));
      seen |= r.provisional_after[i];
      EXPECT_FALSE(r.bids[i].Intersects(held[i]));
    }
    for (int j = 0; j < inst.num_items; ++j) {
      int before = -1;
      int after = -1;
      for (int i = 0; i < n; ++i) {
        if (held[i].contains(j)) before = i;
        if (r.provisional_after[i].contains(j)) after = i;
      }
      if (r.excess.contains(j)) {
        ASSERT_GE(after, 0);
        EXPECT_TRUE(r.bids[after].contains(j));
      } else {
        EXPECT_EQ(before, after);
      }
    }
    prices = r.prices_after;
    held = r.provisional_after;
  }
  EXPECT_EQ(o.prices, prices);
  // Every priced item is allocated at termination.
  Value allocated = 0;
  for (ItemSet a : o.allocation) allocated += o.PriceOf(a);
  Value priced = 0;
  for (Value p : o.prices) priced += p;
  EXPECT_EQ(allocated, priced);
}

TEST_P(AuctionInvariantTest, DeterministicAndReplayable) {
  const std::uint64_t seed = GetParam();
  testing::RandomInstance inst = testing::MakeRandomInstance(seed);
  std::vector<Strategy> strats(inst.valuations.size(), Strategy::Truthful());
  AuctionOutcome a = RunAuction(inst.valuations, strats, seed);
  AuctionOutcome b = RunAuction(inst.valuations, strats, seed);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.allocation, b.allocation);
  auto replayed = ReplayTrace(a.trace, inst.num_items,
                              static_cast<int>(inst.valuations.size()));
  ASSERT_EQ(replayed.size(), a.trace.size());
  for (std::size_t r = 0; r < replayed.size(); ++r) {
    EXPECT_EQ(replayed[r], a.trace[r].provisional_after);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, AuctionInvariantTest,
                         ::testing::Range<std::uint64_t>(0, 60));

TEST(ReplayTraceTest, RejectsTamperedDraws) {
  std::vector<Valuation> vals(2, Valuation::PairBonus(2, 1, 10));
  std::vector<Strategy> strats(2, Strategy::Truthful());
  AuctionOutcome o = RunAuction(vals, strats, 4);
  ASSERT_FALSE(o.trace.empty());
  std::vector<RoundRecord> trace = o.trace;
  trace[0].draws[0].item = 1;
  EXPECT_THROW(ReplayTrace(trace, 2, 2), Error);
}

}  // namespace
}  // namespace smra
