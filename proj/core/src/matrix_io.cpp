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

#include "logmaj/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "logmaj/error.hpp"

namespace logmaj {

using nlohmann::json;

namespace {

Complex ParseEntry(const json& e, std::size_t i, std::size_t j) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw Error(ErrorCode::kParseError, "entry (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") is not [re, im]");
}

}  // namespace

ComplexMatrix ParseMatrixJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") ||
      !doc.contains("entries")) {
    throw Error(ErrorCode::kParseError, "matrix needs fields n, m and entries");
  }
  if (!doc["n"].is_number_unsigned() || !doc["m"].is_number_unsigned()) {
    throw Error(ErrorCode::kParseError, "n and m must be positive integers");
  }
  const auto rows = doc["n"].get<std::size_t>();
  const auto cols = doc["m"].get<std::size_t>();
  if (rows < 1 || cols < 1) throw Error(ErrorCode::kParseError, "n and m must be >= 1");
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != rows) {
    throw Error(ErrorCode::kParseError, "entries must hold n rows");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorCode::kParseError, "row " + std::to_string(i + 1) +
                                              " does not have m entries");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ParseEntry(row[j], i, j);
  }
  return m;
}

std::string MatrixToJson(const ComplexMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    entries.push_back(std::move(row));
  }
  json doc = {{"n", m.rows()}, {"m", m.cols()}, {"entries", std::move(entries)}};
  return doc.dump();
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path.string());
  out << text;
}

ComplexMatrix LoadMatrixFile(const std::filesystem::path& path) {
  return ParseMatrixJson(ReadTextFile(path));
}

void SaveMatrixFile(const std::filesystem::path& path, const ComplexMatrix& m) {
  WriteTextFile(path, MatrixToJson(m) + "\n");
}

}  // namespace logmaj
