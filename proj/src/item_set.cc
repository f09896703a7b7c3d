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

#include "smra/item_set.h"

#include <string>

namespace smra {

std::string ItemSet::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int j) {
    if (!first) out += ",";
    out += std::to_string(j);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace smra
