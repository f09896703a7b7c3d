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

// Independent brute-force references for tests. Deliberately naive: they
// share no code paths with the library beyond Valuation::Eval.

#ifndef SMRA_TESTS_BRUTE_FORCE_H_
#define SMRA_TESTS_BRUTE_FORCE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "smra/item_set.h"
#include "smra/rational.h"
#include "smra/strategy.h"
#include "smra/submodularity.h"
#include "smra/valuation.h"

namespace smra::testing {

// Minimum of (v(A+x) - v(A)) / (v(B+x) - v(B)) over x not in B, A strictly
// inside B, with a positive denominator. nullopt means no such triple.
inline std::optional<Rational> BruteDegree(const Valuation& v) {
  const int m = v.num_items();
  const std::uint32_t n = std::uint32_t{1} << m;
  std::optional<Rational> best;
  for (int x = 0; x < m; ++x) {
    const ItemSet xs = ItemSet::Single(x);
    for (std::uint32_t b = 0; b < n; ++b) {
      const ItemSet big(b);
      if (big.contains(x)) continue;
      const Value den = v.Eval(big | xs) - v.Eval(big);
      if (den <= 0) continue;
      for (std::uint32_t a = 0; a < n; ++a) {
        const ItemSet small(a);
        if (!small.IsSubsetOf(big) || small == big) continue;
        const Rational r(v.Eval(small | xs) - v.Eval(small), den);
        if (!best || r < *best) best = r;
      }
    }
  }
  return best;
}

// Best welfare over all (n+1)^m maps from items to a bidder or nobody.
inline Value NaiveOptimalWelfare(const std::vector<Valuation>& vals) {
  if (vals.empty()) return 0;
  const int n = static_cast<int>(vals.size());
  const int m = vals.front().num_items();
  std::vector<int> owner(m, 0);  // 0 = unassigned, i+1 = bidder i
  Value best = 0;
  while (true) {
    std::vector<ItemSet> sets(n);
    for (int j = 0; j < m; ++j) {
      if (owner[j] > 0) sets[owner[j] - 1].insert(j);
    }
    Value w = 0;
    for (int i = 0; i < n; ++i) w += vals[i].Eval(sets[i]);
    best = std::max(best, w);
    int j = 0;
    while (j < m && ++owner[j] > n) owner[j++] = 0;
    if (j == m) break;
  }
  return best;
}

// Largest conditional surplus over every bid disjoint from the held set.
inline Value BruteMaxSurplus(const Valuation& v, const std::vector<Value>& p,
                             ItemSet held) {
  const int m = v.num_items();
  Value best = v.Eval(held);
  for (std::uint32_t t = 0; t < (std::uint32_t{1} << m); ++t) {
    const ItemSet bid(t);
    if (bid.Intersects(held)) continue;
    Value cost = 0;
    for (int j : bid.Items()) cost += p[j] + 1;
    best = std::max(best, v.Eval(held | bid) - cost);
  }
  return best;
}

struct RandomInstance {
  int num_items = 0;
  int alpha = 1;
  std::vector<Valuation> valuations;
};

// m in [1, max_items], n in [1, max_bidders], alpha in {1, 2, 3}.
inline RandomInstance MakeRandomInstance(std::uint64_t seed, int max_items = 6,
                                         int max_bidders = 4,
                                         Value value_cap = 24) {
  std::mt19937_64 rng(seed);
  RandomInstance inst;
  inst.num_items = std::uniform_int_distribution<int>(1, max_items)(rng);
  inst.alpha = std::uniform_int_distribution<int>(1, 3)(rng);
  const int n = std::uniform_int_distribution<int>(1, max_bidders)(rng);
  for (int i = 0; i < n; ++i) {
    inst.valuations.push_back(RandomNearSubmodular(
        inst.num_items, Rational(inst.alpha), value_cap, rng()));
  }
  return inst;
}

}  // namespace smra::testing

#endif  // SMRA_TESTS_BRUTE_FORCE_H_
