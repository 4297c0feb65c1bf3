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

#ifndef LOGMAJ_ERROR_HPP_
#define LOGMAJ_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmaj {

/// Failure categories raised by the library. The names double as the
/// predicate identifiers printed by the CLI on precondition failures.
enum class ErrorCode {
  kNotHermitian,
  kDimensionTooLarge,
  kDimensionMismatch,
  kSingularSystem,
  kIndexOutOfRange,
  kNegativeInput,
  kLengthMismatch,
  kNotPSD,
  kNotPartialIsometry,
  kZeroPatternViolated,
  kFrameNotNested,
  kNotOrthonormal,
  kBadIndices,
  kNotContraction,
  kNotStrictContraction,
  kBadSpectrum,
  kBadConfig,
  kInfeasiblePattern,
  kDegenerateDraw,
  kUnknownCheck,
  kParseError,
  kNoConvergence,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace logmaj

#endif  // LOGMAJ_ERROR_HPP_
