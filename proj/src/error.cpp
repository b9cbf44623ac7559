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

#include "dialogic/error.hpp"

namespace dialogic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotWav: return "NotWav";
    case ErrorCode::kUnsupportedEncoding: return "UnsupportedEncoding";
    case ErrorCode::kEmptyAudio: return "EmptyAudio";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kBadLength: return "BadLength";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kEigenFailure: return "EigenFailure";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kRosterTooSmall: return "RosterTooSmall";
    case ErrorCode::kAlignmentError: return "AlignmentError";
    case ErrorCode::kIndexError: return "IndexError";
    case ErrorCode::kZeroDuration: return "ZeroDuration";
    case ErrorCode::kNoVerb: return "NoVerb";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kStageFailure: return "StageFailure";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace dialogic
