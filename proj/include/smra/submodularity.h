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

#ifndef SMRA_SUBMODULARITY_H_
#define SMRA_SUBMODULARITY_H_

#include <cstdint>
#include <optional>

#include "smra/item_set.h"
#include "smra/rational.h"
#include "smra/valuation.h"

namespace smra {

// Largest universe DegreeOfSubmodularity accepts.
inline constexpr int kMaxAnalysisItems = 16;

// (x, A, B) with x not in B and A a strict subset of B.
struct SubmodularityWitness {
  int item = -1;
  ItemSet smaller;
  ItemSet larger;
};

struct SubmodularityReport {
  // min over triples of (v(A+x) - v(A)) / (v(B+x) - v(B)); +inf when no
  // triple has a positive denominator.
  ExtendedRational degree = ExtendedRational::Infinity();
  // 1 / degree, with 1/0 = +inf and 1/inf = 0.
  ExtendedRational alpha;
  // Absent exactly when the degree is infinite.
  std::optional<SubmodularityWitness> witness;
};

// The degree of submodularity of a monotone valuation. Triples with a zero
// denominator impose no constraint and are skipped.
// Throws kNotMonotone, or kInvalidArgument when m > kMaxAnalysisItems.
SubmodularityReport DegreeOfSubmodularity(const Valuation& v);

// The ratio of the witness triple, for re-checking a report.
ExtendedRational WitnessRatio(const Valuation& v,
                              const SubmodularityWitness& w);

// degree(v) >= 1 / alpha. Requires alpha >= 1.
bool IsAlphaNearSubmodular(const Valuation& v, const Rational& alpha);

// A table-form monotone valuation with v(empty) = 0 and v(all) <= value_cap,
// verified alpha-near-submodular, deterministic per seed. Requires m <= 10
// and alpha >= 1. Throws kGenerationFailed if no candidate verifies.
Valuation RandomNearSubmodular(int num_items, const Rational& alpha,
                               Value value_cap, std::uint64_t seed);

}  // namespace smra

#endif  // SMRA_SUBMODULARITY_H_
