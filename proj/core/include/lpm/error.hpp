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

#ifndef LPM_ERROR_HPP_
#define LPM_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpm {

enum class ErrorCode {
  kInvalidCharacter,
  kEmptyWord,
  kEndpointMismatch,
  kDominanceViolation,
  kWrongCardinality,
  kEmptyFace,
  kNotGeneralizedCatalan,
  kDisconnectedRegion,
  kNotAFacet,
  kInvalidSplit,
  kWrongChamber,
  kBadK,
  kNonUnimodularCell,
  kTooLarge,
};

std::string_view ErrorName(ErrorCode code);

// Every recoverable failure in the library is reported as an lpm::Error.
// `index` carries the 1-based position the message refers to, when there
// is one (offending character, first dominance violation, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> index = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<int> index() const { return index_; }

 private:
  ErrorCode code_;
  std::optional<int> index_;
};

}  // namespace lpm

#endif  // LPM_ERROR_HPP_
