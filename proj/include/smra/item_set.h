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

#ifndef SMRA_ITEM_SET_H_
#define SMRA_ITEM_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace smra {

// All values and prices are integers counted in units of the bid increment.
using Value = std::int64_t;

inline constexpr int kMaxItems = 24;

// A subset of the item universe {0, ..., m-1}, stored as a bitmask.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint32_t bits) : bits_(bits) {}
  ItemSet(std::initializer_list<int> items) {
    for (int j : items) bits_ |= std::uint32_t{1} << j;
  }

  static constexpr ItemSet Full(int m) {
    return ItemSet(m >= 32 ? ~std::uint32_t{0}
                           : (std::uint32_t{1} << m) - 1);
  }
  static constexpr ItemSet Single(int j) {
    return ItemSet(std::uint32_t{1} << j);
  }
  static ItemSet FromItems(const std::vector<int>& items) {
    ItemSet s;
    for (int j : items) s.bits_ |= std::uint32_t{1} << j;
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int j) const { return (bits_ >> j) & 1u; }
  constexpr bool IsSubsetOf(ItemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(ItemSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // True when every item index is below `m`.
  constexpr bool WithinUniverse(int m) const {
    return IsSubsetOf(Full(m));
  }

  void insert(int j) { bits_ |= std::uint32_t{1} << j; }
  void erase(int j) { bits_ &= ~(std::uint32_t{1} << j); }

  constexpr ItemSet operator|(ItemSet o) const { return ItemSet(bits_ | o.bits_); }
  constexpr ItemSet operator&(ItemSet o) const { return ItemSet(bits_ & o.bits_); }
  // Set difference.
  constexpr ItemSet operator-(ItemSet o) const { return ItemSet(bits_ & ~o.bits_); }
  ItemSet& operator|=(ItemSet o) { bits_ |= o.bits_; return *this; }
  ItemSet& operator&=(ItemSet o) { bits_ &= o.bits_; return *this; }
  ItemSet& operator-=(ItemSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ItemSet&) const = default;
  // Orders by bitmask.
  constexpr auto operator<=>(const ItemSet&) const = default;

  std::vector<int> Items() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // Calls `fn(j)` for each member in ascending order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  std::string ToString() const;

 private:
  std::uint32_t bits_ = 0;
};

// Range over every subset of `mask` in increasing bitmask order, starting
// with the empty set and ending with `mask` itself.
class SubsetRange {
 public:
  explicit SubsetRange(ItemSet mask) : mask_(mask.bits()) {}

  class Iterator {
   public:
    Iterator(std::uint32_t mask, std::uint32_t sub, bool done)
        : mask_(mask), sub_(sub), done_(done) {}
    ItemSet operator*() const { return ItemSet(sub_); }
    Iterator& operator++() {
      if (sub_ == mask_) {
        done_ = true;
      } else {
        sub_ = (sub_ - mask_) & mask_;
      }
      return *this;
    }
    bool operator==(const Iterator& o) const {
      return done_ == o.done_ && (done_ || sub_ == o.sub_);
    }

   private:
    std::uint32_t mask_;
    std::uint32_t sub_;
    bool done_;
  };

  Iterator begin() const { return Iterator(mask_, 0, false); }
  Iterator end() const { return Iterator(mask_, 0, true); }

 private:
  std::uint32_t mask_;
};

inline SubsetRange Subsets(ItemSet mask) { return SubsetRange(mask); }

}  // namespace smra

#endif  // SMRA_ITEM_SET_H_
