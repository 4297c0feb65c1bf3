// Copyright 2026 The logmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "logmaj/error.hpp"

namespace logmaj {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNegativeInput: return "NegativeInput";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotPSD: return "NotPSD";
    case ErrorCode::kNotPartialIsometry: return "NotPartialIsometry";
    case ErrorCode::kZeroPatternViolated: return "ZeroPatternViolated";
    case ErrorCode::kFrameNotNested: return "FrameNotNested";
    case ErrorCode::kNotOrthonormal: return "NotOrthonormal";
    case ErrorCode::kBadIndices: return "BadIndices";
    case ErrorCode::kNotContraction: return "NotContraction";
    case ErrorCode::kNotStrictContraction: return "NotStrictContraction";
    case ErrorCode::kBadSpectrum: return "BadSpectrum";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kInfeasiblePattern: return "InfeasiblePattern";
    case ErrorCode::kDegenerateDraw: return "DegenerateDraw";
    case ErrorCode::kUnknownCheck: return "UnknownCheck";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

}  // namespace logmaj
