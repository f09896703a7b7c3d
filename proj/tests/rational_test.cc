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

#include "smra/rational.h"

#include <sstream>

#include "gtest/gtest.h"

namespace smra {
namespace {

TEST(ExtendedRationalTest, OrdersInfinityAboveFinite) {
  const ExtendedRational inf = ExtendedRational::Infinity();
  EXPECT_GT(inf, ExtendedRational(1000000, 1));
  EXPECT_LT(ExtendedRational(1, 3), ExtendedRational(1, 2));
  EXPECT_EQ(inf, ExtendedRational::Infinity());
  EXPECT_EQ(ExtendedRational(2, 4), ExtendedRational(1, 2));
}

TEST(ExtendedRationalTest, Reciprocal) {
  EXPECT_EQ(ExtendedRational(1, 3).Reciprocal(), ExtendedRational(3, 1));
  EXPECT_TRUE(ExtendedRational(0, 1).Reciprocal().is_infinite());
  EXPECT_EQ(ExtendedRational::Infinity().Reciprocal(), ExtendedRational(0, 1));
}

TEST(ExtendedRationalTest, Formatting) {
  EXPECT_EQ(ExtendedRational(6, 4).ToString(), "3/2");
  EXPECT_EQ(ExtendedRational(3, 1).ToString(), "3");
  EXPECT_EQ(ExtendedRational::Infinity().ToString(), "inf");
  std::ostringstream os;
  os << ExtendedRational(1, 9);
  EXPECT_EQ(os.str(), "1/9");
  EXPECT_DOUBLE_EQ(ExtendedRational(1, 4).ToDouble(), 0.25);
}

}  // namespace
}  // namespace smra
