// Copyright 2026 The Authors.
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

#include "lpm/error.hpp"

namespace lpm {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kEmptyWord: return "EmptyWord";
    case ErrorCode::kEndpointMismatch: return "EndpointMismatch";
    case ErrorCode::kDominanceViolation: return "DominanceViolation";
    case ErrorCode::kWrongCardinality: return "WrongCardinality";
    case ErrorCode::kEmptyFace: return "EmptyFace";
    case ErrorCode::kNotGeneralizedCatalan: return "NotGeneralizedCatalan";
    case ErrorCode::kDisconnectedRegion: return "DisconnectedRegion";
    case ErrorCode::kNotAFacet: return "NotAFacet";
    case ErrorCode::kInvalidSplit: return "InvalidSplit";
    case ErrorCode::kWrongChamber: return "WrongChamber";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kNonUnimodularCell: return "NonUnimodularCell";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<int> index)
    : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace lpm
