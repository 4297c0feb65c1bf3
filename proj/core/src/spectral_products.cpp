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

#include "logmaj/spectral_products.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "logmaj/error.hpp"

namespace logmaj {

IndexSequence::IndexSequence(std::size_t n, std::vector<std::size_t> indices)
    : n_(n), indices_(std::move(indices)) {
  if (indices_.empty()) throw Error(ErrorCode::kIndexOutOfRange, "empty index sequence");
  for (std::size_t t = 0; t < indices_.size(); ++t) {
    const std::size_t i = indices_[t];
    if (i < 1 || i > n_) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
    if (t > 0 && indices_[t - 1] >= i) {
      throw Error(ErrorCode::kIndexOutOfRange, "indices must strictly increase");
    }
  }
}

IndexSequence IndexSequence::Range(std::size_t n, std::size_t first, std::size_t last) {
  if (first < 1 || last < first) {
    throw Error(ErrorCode::kIndexOutOfRange, "bad index range");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = first; i <= last; ++i) idx.push_back(i);
  return IndexSequence(n, std::move(idx));
}

IndexSequence IndexSequence::Head(std::size_t n, std::size_t k) { return Range(n, 1, k); }

IndexSequence IndexSequence::Tail(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw Error(ErrorCode::kIndexOutOfRange, "k outside 1..n");
  return Range(n, n - k + 1, n);
}

std::vector<IndexSequence> AllIndexSequences(std::size_t n) {
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) idx.push_back(b + 1);
    subsets.push_back(std::move(idx));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<IndexSequence> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) out.emplace_back(n, std::move(s));
  return out;
}

double LogProduct::value() const {
  if (zero) return 0.0;
  const double m = std::exp(log_magnitude);
  return negative ? -m : m;
}

LogProduct LogProductOf(std::span<const double> factors) {
  LogProduct p;
  for (double f : factors) {
    if (f == 0.0) {
      p.zero = true;
      continue;
    }
    if (f < 0.0) p.negative = !p.negative;
    p.log_magnitude += std::log(std::abs(f));
  }
  return p;
}

namespace {

void RequireMatchingLength(std::span<const double> values, const IndexSequence& index) {
  if (index.n() != values.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index sequence over n=" + std::to_string(index.n()) +
                    " applied to " + std::to_string(values.size()) + " values");
  }
}

std::vector<double> Select(std::span<const double> values, const IndexSequence& index) {
  std::vector<double> out;
  out.reserve(index.size());
  for (std::size_t i : index.indices()) out.push_back(values[i - 1]);
  return out;
}

}  // namespace

double IndexedProduct(std::span<const double> values, const IndexSequence& index) {
  RequireMatchingLength(values, index);
  double p = 1.0;
  for (std::size_t i : index.indices()) p *= values[i - 1];
  return p;
}

LogProduct IndexedLogProduct(std::span<const double> values, const IndexSequence& index) {
  RequireMatchingLength(values, index);
  return LogProductOf(Select(values, index));
}

double TailProduct(std::span<const double> values, std::size_t k) {
  return IndexedProduct(values, IndexSequence::Tail(values.size(), k));
}

double HeadProduct(std::span<const double> values, std::size_t k) {
  if (k < 1 || k > values.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "k outside 1..n");
  }
  return IndexedProduct(values, IndexSequence::Head(values.size(), k));
}

std::vector<double> ClampNegligible(std::vector<double> values, double rel) {
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, v);
  const double cut = rel * vmax;
  for (double& v : values)
    if (v <= cut) v = 0.0;
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace logmaj
