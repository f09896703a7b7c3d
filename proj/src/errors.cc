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

#include "smra/errors.h"

namespace smra {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kInvalidBid: return "InvalidBid";
    case ErrorCode::kDivergence: return "Divergence";
    case ErrorCode::kInsecureProvisionalState: return "InsecureProvisionalState";
    case ErrorCode::kOracleTooLarge: return "OracleTooLarge";
    case ErrorCode::kInvalidAllocation: return "InvalidAllocation";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace smra
