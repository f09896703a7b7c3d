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

#ifndef SMRA_RATIONAL_H_
#define SMRA_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/rational.hpp>

namespace smra {

using Rational = boost::rational<std::int64_t>;

// A non-negative exact rational extended with a +infinity marker. Used for
// submodularity degrees, rationality factors and welfare ratios.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(value) {}  // NOLINT: implicit
  ExtendedRational(std::int64_t num, std::int64_t den) : value_(num, den) {}

  static ExtendedRational Infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  // Only meaningful when finite.
  const Rational& value() const { return value_; }
  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }

  // 1/x with 1/0 = +inf and 1/inf = 0.
  ExtendedRational Reciprocal() const;

  double ToDouble() const;
  // "p/q", "p" when q == 1, or "inf".
  std::string ToString() const;

  bool operator==(const ExtendedRational& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return value_ == o.value_;
  }
  std::strong_ordering operator<=>(const ExtendedRational& o) const;

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

}  // namespace smra

#endif  // SMRA_RATIONAL_H_
