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

#include <cstdint>
#include <random>
#include <vector>

#include "brute_force.h"
#include "gtest/gtest.h"
#include "smra/errors.h"

namespace smra {
namespace {

using ::smra::testing::BruteDegree;

TEST(DegreeTest, AdditiveIsOne) {
  SubmodularityReport r = DegreeOfSubmodularity(Valuation::Additive({1, 2, 3}));
  EXPECT_EQ(r.degree, ExtendedRational(1, 1));
  EXPECT_EQ(r.alpha, ExtendedRational(1, 1));
}

TEST(DegreeTest, SymmetricStep) {
  SubmodularityReport r = DegreeOfSubmodularity(Valuation::SymmetricStep(4, 3));
  EXPECT_EQ(r.degree, ExtendedRational(1, 3));
  EXPECT_EQ(r.alpha, ExtendedRational(3, 1));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->smaller.empty());
}

TEST(DegreeTest, PairBonus) {
  EXPECT_EQ(DegreeOfSubmodularity(Valuation::PairBonus(2, 1, 10)).degree,
            ExtendedRational(1, 9));
  EXPECT_EQ(DegreeOfSubmodularity(Valuation::PairBonus(2, 1, 100)).alpha,
            ExtendedRational(99, 1));
  EXPECT_EQ(DegreeOfSubmodularity(Valuation::PairBonus(2, 1, 2)).degree,
            ExtendedRational(1, 1));
}

TEST(DegreeTest, Type2PairIsOneOverAlpha) {
  SubmodularityReport r =
      DegreeOfSubmodularity(Valuation::Type2Pair(2, 0, 1, 1, 3, 2));
  EXPECT_EQ(r.degree, ExtendedRational(1, 2));
}

TEST(DegreeTest, SingleItemIsInfinite) {
  SubmodularityReport r = DegreeOfSubmodularity(Valuation::Additive({5}));
  EXPECT_TRUE(r.degree.is_infinite());
  EXPECT_EQ(r.alpha, ExtendedRational(0, 1));
  EXPECT_FALSE(r.witness.has_value());
}

TEST(DegreeTest, ZeroMarginalAtSmallerSetGivesZeroDegree) {
  // v({1}) = 0 but v({0,1}) - v({0}) = 5.
  SubmodularityReport r =
      DegreeOfSubmodularity(Valuation::Table(2, {0, 1, 0, 6}));
  EXPECT_EQ(r.degree, ExtendedRational(0, 1));
  EXPECT_TRUE(r.alpha.is_infinite());
}

TEST(DegreeTest, RejectsNonMonotone) {
  try {
    DegreeOfSubmodularity(Valuation::Table(2, {0, 3, 1, 2}));
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMonotone);
  }
}

TEST(DegreeTest, SymmetricStepAlphaIsExact) {
  for (int m = 2; m <= 6; ++m) {
    for (int a = 1; a <= 5; ++a) {
      EXPECT_EQ(DegreeOfSubmodularity(Valuation::SymmetricStep(m, a)).alpha,
                ExtendedRational(a, 1))
          << "m=" << m << " alpha=" << a;
    }
  }
}

// Random monotone tables: running maximum over subsets of random values.
Valuation RandomMonotoneTable(std::mt19937_64& rng, int m) {
  const std::uint32_t n = std::uint32_t{1} << m;
  std::vector<Value> t(n, 0);
  std::uniform_int_distribution<Value> dist(0, 12);
  for (std::uint32_t s = 1; s < n; ++s) {
    t[s] = dist(rng);
    for (int j = 0; j < m; ++j) {
      if (s >> j & 1) t[s] = std::max(t[s], t[s & ~(1u << j)]);
    }
  }
  return Valuation::Table(m, t);
}

TEST(DegreeTest, MatchesBruteForceOnRandomTables) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 5;
    Valuation v = RandomMonotoneTable(rng, m);
    SubmodularityReport r = DegreeOfSubmodularity(v);
    std::optional<Rational> brute = BruteDegree(v);
    if (brute) {
      EXPECT_EQ(r.degree, ExtendedRational(*brute)) << "trial " << trial;
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_EQ(WitnessRatio(v, *r.witness), r.degree);
      EXPECT_TRUE(r.witness->smaller.IsSubsetOf(r.witness->larger));
      EXPECT_NE(r.witness->smaller, r.witness->larger);
      EXPECT_FALSE(r.witness->larger.contains(r.witness->item));
    } else {
      EXPECT_TRUE(r.degree.is_infinite()) << "trial " << trial;
    }
  }
}

TEST(DegreeTest, SubmodularFormsHaveDegreeAtLeastOne) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Value> dist(0, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Value> w(5);
    for (Value& x : w) x = dist(rng);
    EXPECT_GE(DegreeOfSubmodularity(Valuation::Additive(w)).degree,
              ExtendedRational(1, 1));
    EXPECT_GE(DegreeOfSubmodularity(Valuation::UnitDemand(w)).degree,
              ExtendedRational(1, 1));
  }
}

TEST(NearSubmodularTest, Examples) {
  EXPECT_TRUE(IsAlphaNearSubmodular(Valuation::Additive({1, 2, 3}), 1));
  EXPECT_FALSE(IsAlphaNearSubmodular(Valuation::PairBonus(2, 1, 10), 5));
  EXPECT_TRUE(IsAlphaNearSubmodular(Valuation::PairBonus(2, 1, 10), 9));
  EXPECT_TRUE(IsAlphaNearSubmodular(Valuation::SymmetricStep(4, 3), 3));
  EXPECT_FALSE(IsAlphaNearSubmodular(Valuation::SymmetricStep(4, 3), 2));
  EXPECT_THROW(IsAlphaNearSubmodular(Valuation::Additive({1}), Rational(1, 2)),
               Error);
}

TEST(RandomNearSubmodularTest, Examples) {
  Valuation a = RandomNearSubmodular(3, 1, 10, 7);
  EXPECT_GE(DegreeOfSubmodularity(a).degree, ExtendedRational(1, 1));
  Valuation b = RandomNearSubmodular(1, 3, 5, 0);
  EXPECT_EQ(b.num_items(), 1);
  EXPECT_TRUE(DegreeOfSubmodularity(b).degree.is_infinite());
  EXPECT_TRUE(IsAlphaNearSubmodular(RandomNearSubmodular(3, 2, 10, 7), 2));
}

TEST(RandomNearSubmodularTest, PropertiesHoldAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int m = 1 + static_cast<int>(seed % 6);
    const int alpha = 1 + static_cast<int>(seed % 3);
    Valuation v = RandomNearSubmodular(m, alpha, 30, seed);
    EXPECT_TRUE(IsMonotone(v));
    EXPECT_LE(v.FullValue(), 30);
    std::optional<Rational> brute = BruteDegree(v);
    if (brute) EXPECT_GE(*brute * alpha, 1) << "seed " << seed;
  }
}

TEST(RandomNearSubmodularTest, Deterministic) {
  Valuation a = RandomNearSubmodular(5, 2, 40, 99);
  Valuation b = RandomNearSubmodular(5, 2, 40, 99);
  EXPECT_EQ(a.ExpandValues(), b.ExpandValues());
}

TEST(RandomNearSubmodularTest, ProducesNonSubmodularInstancesForAlphaAboveOne) {
  int strictly_super = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Valuation v = RandomNearSubmodular(4, 3, 30, seed);
    if (DegreeOfSubmodularity(v).degree < ExtendedRational(1, 1)) {
      ++strictly_super;
    }
  }
  EXPECT_GT(strictly_super, 10);
}

}  // namespace
}  // namespace smra
