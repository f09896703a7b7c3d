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

#include "smra/valuation.h"

#include <algorithm>
#include <string>
#include <utility>

#include "smra/errors.h"

namespace smra {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckUniverse(int m) {
  if (m < 1 || m > kMaxItems) {
    throw Error(ErrorCode::kInvalidArgument,
                "item count " + std::to_string(m) + " outside [1, " +
                    std::to_string(kMaxItems) + "]");
  }
}

void CheckItem(int m, int j, const char* what) {
  if (j < 0 || j >= m) {
    throw Error(ErrorCode::kUniverseMismatch,
                std::string(what) + " item " + std::to_string(j) +
                    " outside universe of " + std::to_string(m));
  }
}

void CheckNonNegative(const std::vector<Value>& values, const char* what) {
  for (Value x : values) {
    if (x < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " values must be non-negative");
    }
  }
}

}  // namespace

Valuation Valuation::Table(int num_items, std::vector<Value> values) {
  CheckUniverse(num_items);
  if (values.size() != (std::size_t{1} << num_items)) {
    throw Error(ErrorCode::kInvalidArgument,
                "table needs 2^" + std::to_string(num_items) + " values, got " +
                    std::to_string(values.size()));
  }
  if (values[0] != 0) {
    throw Error(ErrorCode::kInvalidArgument, "v(empty) must be 0");
  }
  CheckNonNegative(values, "table");
  return Valuation(num_items, TableForm{std::move(values)});
}

Valuation Valuation::Additive(std::vector<Value> item_values) {
  int m = static_cast<int>(item_values.size());
  return Additive(m, std::move(item_values));
}

Valuation Valuation::Additive(int num_items, std::vector<Value> item_values) {
  CheckUniverse(num_items);
  if (static_cast<int>(item_values.size()) > num_items) {
    throw Error(ErrorCode::kUniverseMismatch, "more item values than items");
  }
  CheckNonNegative(item_values, "additive");
  item_values.resize(num_items, 0);
  return Valuation(num_items, AdditiveForm{std::move(item_values)});
}

Valuation Valuation::UnitDemand(std::vector<Value> item_values) {
  int m = static_cast<int>(item_values.size());
  return UnitDemand(m, std::move(item_values));
}

Valuation Valuation::UnitDemand(int num_items, std::vector<Value> item_values) {
  CheckUniverse(num_items);
  if (static_cast<int>(item_values.size()) > num_items) {
    throw Error(ErrorCode::kUniverseMismatch, "more item values than items");
  }
  CheckNonNegative(item_values, "unit-demand");
  item_values.resize(num_items, 0);
  return Valuation(num_items, UnitDemandForm{std::move(item_values)});
}

Valuation Valuation::SymmetricStep(int num_items, std::int64_t alpha_num,
                                   std::int64_t alpha_den, Value scale) {
  return SymmetricStep(num_items, ItemSet::Full(num_items), alpha_num,
                       alpha_den, scale);
}

Valuation Valuation::SymmetricStep(int num_items, ItemSet support,
                                   std::int64_t alpha_num,
                                   std::int64_t alpha_den, Value scale) {
  CheckUniverse(num_items);
  if (!support.WithinUniverse(num_items)) {
    throw Error(ErrorCode::kUniverseMismatch, "support outside universe");
  }
  if (alpha_num <= 0 || alpha_den <= 0 || scale < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "symmetric_step needs alpha_num, alpha_den > 0, scale >= 0");
  }
  return Valuation(num_items,
                   SymmetricStepForm{alpha_num, alpha_den, scale, support});
}

Valuation Valuation::PairBonus(int num_items, Value unit, Value pair,
                               int first, int second) {
  CheckUniverse(num_items);
  CheckItem(num_items, first, "pair_bonus");
  CheckItem(num_items, second, "pair_bonus");
  if (first == second) {
    throw Error(ErrorCode::kInvalidArgument, "pair items must differ");
  }
  if (unit < 0 || pair < 0) {
    throw Error(ErrorCode::kInvalidArgument, "pair_bonus values negative");
  }
  return Valuation(num_items, PairBonusForm{unit, pair, first, second});
}

Valuation Valuation::Type2Pair(int num_items, int target, int special,
                               Value unit, Value high, Value bonus) {
  CheckUniverse(num_items);
  CheckItem(num_items, target, "type2_pair target");
  CheckItem(num_items, special, "type2_pair special");
  if (target == special) {
    throw Error(ErrorCode::kInvalidArgument, "target and special must differ");
  }
  if (unit < 0 || high < 0 || bonus < 0) {
    throw Error(ErrorCode::kInvalidArgument, "type2_pair values negative");
  }
  return Valuation(num_items, Type2PairForm{target, special, unit, high, bonus});
}

Valuation Valuation::Zero(int num_items) {
  return Additive(num_items, {});
}

std::string_view Valuation::FormName() const {
  return std::visit(
      Overloaded{
          [](const TableForm&) { return std::string_view("table"); },
          [](const AdditiveForm&) { return std::string_view("additive"); },
          [](const UnitDemandForm&) { return std::string_view("unit_demand"); },
          [](const SymmetricStepForm&) {
            return std::string_view("symmetric_step");
          },
          [](const PairBonusForm&) { return std::string_view("pair_bonus"); },
          [](const Type2PairForm&) { return std::string_view("type2_pair"); },
      },
      form_);
}

Value Valuation::Eval(ItemSet s) const {
  if (!s.WithinUniverse(num_items_)) {
    throw Error(ErrorCode::kUniverseMismatch,
                "set " + s.ToString() + " outside universe of " +
                    std::to_string(num_items_));
  }
  return EvalUnchecked(s);
}

Value Valuation::EvalUnchecked(ItemSet s) const {
  return std::visit(
      Overloaded{
          [&](const TableForm& f) { return f.values[s.bits()]; },
          [&](const AdditiveForm& f) {
            Value total = 0;
            s.ForEach([&](int j) { total += f.item_values[j]; });
            return total;
          },
          [&](const UnitDemandForm& f) {
            Value best = 0;
            s.ForEach([&](int j) { best = std::max(best, f.item_values[j]); });
            return best;
          },
          [&](const SymmetricStepForm& f) {
            int c = (s & f.support).size();
            if (c == 0) return Value{0};
            return f.scale * (f.alpha_den + (c - 1) * f.alpha_num);
          },
          [&](const PairBonusForm& f) {
            int c = static_cast<int>(s.contains(f.first)) +
                    static_cast<int>(s.contains(f.second));
            return c == 0 ? Value{0} : (c == 1 ? f.unit : f.pair);
          },
          [&](const Type2PairForm& f) {
            bool x = s.contains(f.target);
            bool z = s.contains(f.special);
            if (x && z) return f.high + f.bonus;
            if (z) return f.high;
            return x ? f.unit : Value{0};
          },
      },
      form_);
}

Value Valuation::Marginal(int item, ItemSet s) const {
  ItemSet with = s;
  with.insert(item);
  return Eval(with) - Eval(s);
}

std::vector<Value> Valuation::ExpandValues() const {
  if (const auto* t = std::get_if<TableForm>(&form_)) return t->values;
  std::vector<Value> values(std::size_t{1} << num_items_);
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = EvalUnchecked(ItemSet(static_cast<std::uint32_t>(mask)));
  }
  return values;
}

Valuation Valuation::ToTable() const {
  return Table(num_items_, ExpandValues());
}

bool IsMonotone(const Valuation& v) {
  const int m = v.num_items();
  const std::vector<Value> values = v.ExpandValues();
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
    for (int j = 0; j < m; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if ((mask & bit) == 0 && values[mask | bit] < values[mask]) return false;
    }
  }
  return true;
}

}  // namespace smra
