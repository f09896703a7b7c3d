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

#include <limits>
#include <ostream>
#include <string>

namespace smra {

ExtendedRational ExtendedRational::Reciprocal() const {
  if (infinite_) return ExtendedRational(0, 1);
  if (value_.numerator() == 0) return Infinity();
  return ExtendedRational(value_.denominator(), value_.numerator());
}

double ExtendedRational::ToDouble() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return boost::rational_cast<double>(value_);
}

std::string ExtendedRational::ToString() const {
  if (infinite_) return "inf";
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" +
         std::to_string(value_.denominator());
}

std::strong_ordering ExtendedRational::operator<=>(
    const ExtendedRational& o) const {
  if (infinite_ || o.infinite_) {
    return static_cast<int>(infinite_) <=> static_cast<int>(o.infinite_);
  }
  if (value_ < o.value_) return std::strong_ordering::less;
  if (o.value_ < value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
  return os << r.ToString();
}

}  // namespace smra
