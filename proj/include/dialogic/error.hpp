// Copyright (c) 2026 The dialogic Authors
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

#ifndef DIALOGIC_ERROR_HPP_
#define DIALOGIC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dialogic {

enum class ErrorCode {
  kNotWav,
  kUnsupportedEncoding,
  kEmptyAudio,
  kTooShort,
  kBadLength,
  kSchemaError,
  kDimensionMismatch,
  kUnknownLabel,
  kZeroVector,
  kEigenFailure,
  kDegenerateInput,
  kRosterTooSmall,
  kAlignmentError,
  kIndexError,
  kZeroDuration,
  kNoVerb,
  kConfigError,
  kStageFailure,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; callers branch on
// code() rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dialogic

#endif  // DIALOGIC_ERROR_HPP_
