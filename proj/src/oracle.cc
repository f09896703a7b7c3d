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

#include "smra/oracle.h"

#include <cmath>
#include <string>

#include "smra/errors.h"

namespace smra {

OptimalAllocation OptimalWelfare(std::span<const Valuation> valuations) {
  OptimalAllocation opt;
  if (valuations.empty()) return opt;
  const int n = static_cast<int>(valuations.size());
  const int m = valuations.front().num_items();
  for (const Valuation& v : valuations) {
    if (v.num_items() != m) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "valuations disagree on the item count");
    }
  }
  if (m > kMaxOracleItems || n * std::pow(3.0, m) > kOracleBudget) {
    throw Error(ErrorCode::kOracleTooLarge,
                std::to_string(n) + " bidders over " + std::to_string(m) +
                    " items exceeds the oracle budget");
  }
  const std::uint32_t num_sets = std::uint32_t{1} << m;

  // best[mask]: optimal welfare of bidders 0..i on items `mask`.
  // choice[i][mask]: subset given to bidder i in that optimum.
  std::vector<Value> best(num_sets, 0);
  std::vector<Value> next(num_sets);
  std::vector<std::vector<std::uint32_t>> choice(
      n, std::vector<std::uint32_t>(num_sets, 0));
  for (int i = 0; i < n; ++i) {
    const std::vector<Value> values = valuations[i].ExpandValues();
    for (std::uint32_t mask = 0; mask < num_sets; ++mask) {
      Value top = best[mask];
      std::uint32_t pick = 0;
      // Ascending submasks; strict improvement keeps the smaller subset.
      for (std::uint32_t sub = (0 - mask) & mask; sub != 0;
           sub = (sub - mask) & mask) {
        Value w = values[sub] + best[mask & ~sub];
        if (w > top) {
          top = w;
          pick = sub;
        }
        if (sub == mask) break;
      }
      next[mask] = top;
      choice[i][mask] = pick;
    }
    best.swap(next);
  }

  opt.welfare = best[num_sets - 1];
  opt.assignment.assign(n, ItemSet{});
  std::uint32_t mask = num_sets - 1;
  for (int i = n - 1; i >= 0; --i) {
    opt.assignment[i] = ItemSet(choice[i][mask]);
    mask &= ~choice[i][mask];
  }
  return opt;
}

Value Welfare(std::span<const ItemSet> allocation,
              std::span<const Valuation> valuations) {
  if (allocation.size() != valuations.size()) {
    throw Error(ErrorCode::kInvalidAllocation,
                "allocation has " + std::to_string(allocation.size()) +
                    " sets for " + std::to_string(valuations.size()) +
                    " bidders");
  }
  ItemSet seen;
  Value total = 0;
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    if (allocation[i].Intersects(seen)) {
      throw Error(ErrorCode::kInvalidAllocation,
                  "set of bidder " + std::to_string(i) + " overlaps another");
    }
    seen |= allocation[i];
    total += valuations[i].Eval(allocation[i]);
  }
  return total;
}

namespace {

// Folds p/v into the running maximum; v == 0 with p > 0 is infinite.
bool Exceeds(Value price, Value value, const ExtendedRational& current,
             bool have_any, ExtendedRational* out) {
  ExtendedRational r = value == 0 ? ExtendedRational::Infinity()
                                  : ExtendedRational(price, value);
  if (!have_any || r > current) {
    *out = r;
    return true;
  }
  return false;
}

}  // namespace

RationalityReport MeasureRationality(const AuctionOutcome& outcome,
                                     std::span<const Valuation> valuations) {
  RationalityReport report;
  bool have_subset = false;
  bool have_full = false;
  // State 0 holds nothing, so only post-round states matter.
  for (std::size_t r = 0; r < outcome.trace.size(); ++r) {
    const RoundRecord& rec = outcome.trace[r];
    const int state_index = static_cast<int>(r) + 1;
    for (std::size_t i = 0; i < rec.provisional_after.size(); ++i) {
      const ItemSet held = rec.provisional_after[i];
      if (held.empty()) continue;
      const Valuation& v = valuations[i];
      auto price_of = [&](ItemSet s) {
        Value p = 0;
        s.ForEach([&](int j) { p += rec.prices_after[j]; });
        return p;
      };
      const Value full_price = price_of(held);
      if (full_price > 0) {
        ExtendedRational candidate;
        if (Exceeds(full_price, v.Eval(held), report.lambda_full, have_full,
                    &candidate)) {
          report.lambda_full = candidate;
          report.full_witness = {state_index, static_cast<int>(i), held};
          have_full = true;
        }
      }
      if (held.size() > kMaxSubsetScan) {
        if (full_price > 0) {
          ExtendedRational candidate;
          if (Exceeds(full_price, v.Eval(held), report.lambda, have_subset,
                      &candidate)) {
            report.lambda = candidate;
            report.witness = {state_index, static_cast<int>(i), held};
            have_subset = true;
          }
        }
        continue;
      }
      for (ItemSet sub : Subsets(held)) {
        const Value p = price_of(sub);
        if (p <= 0) continue;
        ExtendedRational candidate;
        if (Exceeds(p, v.Eval(sub), report.lambda, have_subset, &candidate)) {
          report.lambda = candidate;
          report.witness = {state_index, static_cast<int>(i), sub};
          have_subset = true;
        }
      }
    }
  }
  return report;
}

Rational WelfareRatio(Value auction_welfare, const OptimalAllocation& opt) {
  if (opt.welfare == 0) return Rational(1);
  return Rational(auction_welfare, opt.welfare);
}

Rational WelfareRatio(const AuctionOutcome& outcome,
                      std::span<const Valuation> valuations,
                      const OptimalAllocation& opt) {
  return WelfareRatio(Welfare(outcome.allocation, valuations), opt);
}

}  // namespace smra
