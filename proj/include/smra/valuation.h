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

#ifndef SMRA_VALUATION_H_
#define SMRA_VALUATION_H_

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "smra/item_set.h"

namespace smra {

// Explicit value for every subset; index = bitmask.
struct TableForm {
  std::vector<Value> values;
};

// v(S) = sum of per-item values.
struct AdditiveForm {
  std::vector<Value> item_values;
};

// v(S) = max per-item value over S.
struct UnitDemandForm {
  std::vector<Value> item_values;
};

// Complementarity step over the items of `support`. With c = |S & support|:
// v(S) = 0 for c = 0 and scale * (alpha_den + (c - 1) * alpha_num) otherwise.
// The first item is worth scale * alpha_den and every further one
// scale * alpha_num, so the degree of submodularity is alpha_den/alpha_num.
// Integer alpha with scale 1 gives (c - 1) * alpha + 1; scale = alpha gives
// (c - 1) * alpha^2 + alpha.
struct SymmetricStepForm {
  std::int64_t alpha_num = 1;
  std::int64_t alpha_den = 1;
  Value scale = 1;
  ItemSet support;
};

// Two complementary items: one of them is worth `unit`, both `pair`.
struct PairBonusForm {
  Value unit = 0;
  Value pair = 0;
  int first = 0;
  int second = 1;
};

// v({target}) = unit, v({special}) = high, v({target, special}) = high + bonus.
struct Type2PairForm {
  int target = 0;
  int special = 1;
  Value unit = 0;
  Value high = 0;
  Value bonus = 0;
};

using ValuationForm = std::variant<TableForm, AdditiveForm, UnitDemandForm,
                                   SymmetricStepForm, PairBonusForm,
                                   Type2PairForm>;

// A set function v: 2^items -> non-negative integers with v(empty) = 0.
// Immutable after construction. Construction validates shape and sign;
// monotonicity of table forms is checked separately (IsMonotone) so that
// analysis routines can report it.
class Valuation {
 public:
  static Valuation Table(int num_items, std::vector<Value> values);
  static Valuation Additive(std::vector<Value> item_values);
  static Valuation UnitDemand(std::vector<Value> item_values);
  // Additive/unit-demand over a universe larger than the value list.
  static Valuation Additive(int num_items, std::vector<Value> item_values);
  static Valuation UnitDemand(int num_items, std::vector<Value> item_values);
  static Valuation SymmetricStep(int num_items, std::int64_t alpha_num,
                                 std::int64_t alpha_den = 1, Value scale = 1);
  static Valuation SymmetricStep(int num_items, ItemSet support,
                                 std::int64_t alpha_num, std::int64_t alpha_den,
                                 Value scale);
  static Valuation PairBonus(int num_items, Value unit, Value pair,
                             int first = 0, int second = 1);
  static Valuation Type2Pair(int num_items, int target, int special,
                             Value unit, Value high, Value bonus);
  static Valuation Zero(int num_items);

  int num_items() const { return num_items_; }
  const ValuationForm& form() const { return form_; }
  std::string_view FormName() const;

  // Throws kUniverseMismatch when `s` has items outside the universe.
  Value Eval(ItemSet s) const;
  Value operator()(ItemSet s) const { return Eval(s); }
  Value EvalUnchecked(ItemSet s) const;

  // v(S + item) - v(S).
  Value Marginal(int item, ItemSet s) const;

  // Table of all 2^m values. Requires m <= 24.
  std::vector<Value> ExpandValues() const;
  Valuation ToTable() const;

  Value FullValue() const { return EvalUnchecked(ItemSet::Full(num_items_)); }

 private:
  Valuation(int num_items, ValuationForm form)
      : num_items_(num_items), form_(std::move(form)) {}

  int num_items_ = 0;
  ValuationForm form_;
};

// True when A subset-of B implies v(A) <= v(B). Checked via single-item
// additions over all 2^m sets.
bool IsMonotone(const Valuation& v);

}  // namespace smra

#endif  // SMRA_VALUATION_H_
