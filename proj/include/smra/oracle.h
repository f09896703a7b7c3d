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

#ifndef SMRA_ORACLE_H_
#define SMRA_ORACLE_H_

#include <span>
#include <vector>

#include "smra/item_set.h"
#include "smra/mechanism.h"
#include "smra/rational.h"
#include "smra/valuation.h"

namespace smra {

inline constexpr int kMaxOracleItems = 16;
// Upper bound on n * 3^m subset pairs visited by the DP.
inline constexpr double kOracleBudget = 4e9;
// Above this provisional-set size only the full-set ratio is measured.
inline constexpr int kMaxSubsetScan = 20;

struct OptimalAllocation {
  Value welfare = 0;
  std::vector<ItemSet> assignment;
};

// Exact welfare maximization over disjoint (not necessarily covering)
// assignments by DP over item subsets. Ties prefer the smaller subset for
// the later bidder. Throws kOracleTooLarge past the budget.
OptimalAllocation OptimalWelfare(std::span<const Valuation> valuations);

// Sum of v_i(S_i). Throws kInvalidAllocation on overlap or size mismatch.
Value Welfare(std::span<const ItemSet> allocation,
              std::span<const Valuation> valuations);

struct RationalityWitness {
  // State index: 0 is the initial state, t is the state after round t-1.
  int round = 0;
  int bidder = -1;
  ItemSet subset;
};

struct RationalityReport {
  // max p^t(S') / v_i(S') over states t, bidders i and nonempty
  // S' within S_i^t with p^t(S') > 0; 1 when no such pair exists.
  ExtendedRational lambda{1, 1};
  // Same, restricted to S' = S_i^t.
  ExtendedRational lambda_full{1, 1};
  RationalityWitness witness;
  RationalityWitness full_witness;
};

RationalityReport MeasureRationality(const AuctionOutcome& outcome,
                                     std::span<const Valuation> valuations);

// Auction welfare over optimal welfare; 1 when the optimum is 0.
Rational WelfareRatio(Value auction_welfare, const OptimalAllocation& opt);
Rational WelfareRatio(const AuctionOutcome& outcome,
                      std::span<const Valuation> valuations,
                      const OptimalAllocation& opt);

}  // namespace smra

#endif  // SMRA_ORACLE_H_
