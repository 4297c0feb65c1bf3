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

#ifndef LOGMAJ_MATRIX_IO_HPP_
#define LOGMAJ_MATRIX_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "logmaj/complex_matrix.hpp"

namespace logmaj {

/// Matrix document: {"n": rows, "m": cols, "entries": [[[re, im], ...], ...]},
/// row-major. A bare number is accepted for a real entry. Ragged rows, count
/// mismatches and malformed entries raise kParseError.
ComplexMatrix ParseMatrixJson(std::string_view text);
std::string MatrixToJson(const ComplexMatrix& m);

ComplexMatrix LoadMatrixFile(const std::filesystem::path& path);
void SaveMatrixFile(const std::filesystem::path& path, const ComplexMatrix& m);

/// Reads a whole file; throws kParseError when it cannot be opened.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace logmaj

#endif  // LOGMAJ_MATRIX_IO_HPP_
