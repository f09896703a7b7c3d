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

#include "smra/submodularity.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "smra/errors.h"

namespace smra {
namespace {

// a/b < c/d for b, d > 0.
bool RatioLess(Value a, Value b, Value c, Value d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}

Rational ToRational(Value num, Value den) { return Rational(num, den); }

}  // namespace

SubmodularityReport DegreeOfSubmodularity(const Valuation& v) {
  const int m = v.num_items();
  if (m > kMaxAnalysisItems) {
    throw Error(ErrorCode::kInvalidArgument,
                "degree of submodularity limited to " +
                    std::to_string(kMaxAnalysisItems) + " items");
  }
  if (!IsMonotone(v)) {
    throw Error(ErrorCode::kNotMonotone, "valuation is not monotone");
  }
  const std::vector<Value> values = v.ExpandValues();
  const std::uint32_t num_sets = std::uint32_t{1} << m;

  SubmodularityReport report;
  bool found = false;
  Value best_num = 0;
  Value best_den = 1;

  // For each x, the minimum marginal over strict subsets of B is computed by
  // a subset-minimum sweep, so all (A, B) pairs are covered in O(m^2 2^m).
  std::vector<Value> marginal(num_sets);
  std::vector<Value> min_sub(num_sets);
  std::vector<std::uint32_t> arg_sub(num_sets);
  for (int x = 0; x < m; ++x) {
    const std::uint32_t xbit = std::uint32_t{1} << x;
    for (std::uint32_t s = 0; s < num_sets; ++s) {
      if (s & xbit) continue;
      marginal[s] = values[s | xbit] - values[s];
      // min over A within s (inclusive).
      min_sub[s] = marginal[s];
      arg_sub[s] = s;
      for (std::uint32_t b = s; b != 0; b &= b - 1) {
        std::uint32_t sub = s & ~(b & -b);
        if (min_sub[sub] < min_sub[s] ||
            (min_sub[sub] == min_sub[s] && arg_sub[sub] < arg_sub[s])) {
          min_sub[s] = min_sub[sub];
          arg_sub[s] = arg_sub[sub];
        }
      }
    }
    for (std::uint32_t big = 1; big < num_sets; ++big) {
      if (big & xbit) continue;
      const Value den = marginal[big];
      if (den <= 0) continue;
      // min over strict subsets A of big.
      Value num = 0;
      std::uint32_t arg = 0;
      bool any = false;
      for (std::uint32_t b = big; b != 0; b &= b - 1) {
        std::uint32_t sub = big & ~(b & -b);
        if (!any || min_sub[sub] < num ||
            (min_sub[sub] == num && arg_sub[sub] < arg)) {
          num = min_sub[sub];
          arg = arg_sub[sub];
          any = true;
        }
      }
      if (!found || RatioLess(num, den, best_num, best_den)) {
        found = true;
        best_num = num;
        best_den = den;
        report.witness = SubmodularityWitness{x, ItemSet(arg), ItemSet(big)};
      }
    }
  }
  if (found) report.degree = ToRational(best_num, best_den);
  report.alpha = report.degree.Reciprocal();
  return report;
}

ExtendedRational WitnessRatio(const Valuation& v,
                              const SubmodularityWitness& w) {
  Value num = v.Marginal(w.item, w.smaller);
  Value den = v.Marginal(w.item, w.larger);
  if (den == 0) return ExtendedRational::Infinity();
  return Rational(num, den);
}

bool IsAlphaNearSubmodular(const Valuation& v, const Rational& alpha) {
  if (alpha < 1) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be at least 1");
  }
  return DegreeOfSubmodularity(v).degree >=
         ExtendedRational(Rational(1) / alpha);
}

namespace {

using Table = std::vector<Value>;

Value UniformValue(std::mt19937_64& rng, Value lo, Value hi) {
  if (hi <= lo) return lo;
  return std::uniform_int_distribution<Value>(lo, hi)(rng);
}

ItemSet RandomNonemptySubset(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<std::uint32_t> dist(
      1, (std::uint32_t{1} << m) - 1);
  return ItemSet(dist(rng));
}

// Adds a near-submodular component bounded by `budget` on the full set;
// returns the amount of budget used. Each component is alpha-near-submodular
// on its own and the property is closed under sums.
Value AddComponent(std::mt19937_64& rng, int m, const Rational& alpha,
                   Value budget, Table& table) {
  const ItemSet support = RandomNonemptySubset(rng, m);
  const std::vector<int> items = support.Items();
  const int k = static_cast<int>(items.size());
  const int kind = static_cast<int>(UniformValue(rng, 0, 2));
  const std::uint32_t num_sets = static_cast<std::uint32_t>(table.size());

  if (kind == 0) {  // additive
    std::vector<Value> w(m, 0);
    Value per_item = budget / k;
    Value used = 0;
    for (int j : items) {
      w[j] = UniformValue(rng, 0, per_item);
      used += w[j];
    }
    for (std::uint32_t s = 0; s < num_sets; ++s) {
      ItemSet(s).ForEach([&](int j) { table[s] += w[j]; });
    }
    return used;
  }
  if (kind == 1) {  // unit demand
    std::vector<Value> w(m, 0);
    Value used = 0;
    for (int j : items) {
      w[j] = UniformValue(rng, 0, budget);
      used = std::max(used, w[j]);
    }
    for (std::uint32_t s = 0; s < num_sets; ++s) {
      Value best = 0;
      ItemSet(s).ForEach([&](int j) { best = std::max(best, w[j]); });
      table[s] += best;
    }
    return used;
  }
  // Function of |S & support| whose c-th increment is at most alpha times
  // every earlier increment.
  std::vector<Value> increments(k + 1, 0);
  Value used = 0;
  Value smallest = 0;
  Value first_cap = std::max<Value>(budget / std::max(1, k), budget > 0 ? 1 : 0);
  for (int c = 1; c <= k; ++c) {
    Value hi = c == 1 ? first_cap
                      : alpha.numerator() * smallest / alpha.denominator();
    hi = std::min(hi, budget - used);
    Value lo = c == 1 ? 0 : hi / 2;
    increments[c] = UniformValue(rng, lo, std::max<Value>(hi, 0));
    used += increments[c];
    smallest = c == 1 ? increments[c] : std::min(smallest, increments[c]);
  }
  std::vector<Value> prefix(k + 1, 0);
  for (int c = 1; c <= k; ++c) prefix[c] = prefix[c - 1] + increments[c];
  for (std::uint32_t s = 0; s < num_sets; ++s) {
    table[s] += prefix[(ItemSet(s) & support).size()];
  }
  return used;
}

// Raises v(S) by delta and lifts supersets to keep monotonicity.
Table Bump(const Table& table, std::uint32_t s, Value delta) {
  Table out = table;
  Value target = table[s] + delta;
  for (std::uint32_t t = 0; t < table.size(); ++t) {
    if ((t & s) == s) out[t] = std::max(out[t], target);
  }
  return out;
}

}  // namespace

Valuation RandomNearSubmodular(int num_items, const Rational& alpha,
                               Value value_cap, std::uint64_t seed) {
  if (num_items < 1 || num_items > 10) {
    throw Error(ErrorCode::kInvalidArgument, "random valuations need 1 <= m <= 10");
  }
  if (alpha < 1) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be at least 1");
  }
  if (value_cap < 0) {
    throw Error(ErrorCode::kInvalidArgument, "value cap must be non-negative");
  }
  std::mt19937_64 rng(seed);
  const std::uint32_t num_sets = std::uint32_t{1} << num_items;
  const std::uint32_t full = num_sets - 1;
  constexpr int kAttempts = 64;

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Table table(num_sets, 0);
    Value remaining = value_cap;
    const int components = static_cast<int>(UniformValue(rng, 1, 3));
    for (int c = 0; c < components && remaining > 0; ++c) {
      Value share = c + 1 == components ? remaining
                                        : UniformValue(rng, 1, remaining);
      remaining -= AddComponent(rng, num_items, alpha, share, table);
    }
    Valuation candidate = Valuation::Table(num_items, table);
    if (!IsAlphaNearSubmodular(candidate, alpha)) continue;

    // Local edits diversify the instance beyond sums of simple families.
    const int edits = 2 * num_items;
    for (int e = 0; e < edits; ++e) {
      std::uint32_t s = RandomNonemptySubset(rng, num_items).bits();
      Value delta = UniformValue(rng, 1, value_cap / 4 + 1);
      Table bumped = Bump(table, s, delta);
      if (bumped[full] > value_cap) continue;
      Valuation trial = Valuation::Table(num_items, bumped);
      if (IsAlphaNearSubmodular(trial, alpha)) {
        table = std::move(bumped);
        candidate = std::move(trial);
      }
    }
    return candidate;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no alpha-near-submodular candidate within " +
                  std::to_string(kAttempts) + " attempts");
}

}  // namespace smra
