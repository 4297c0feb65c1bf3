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

#ifndef LOGMAJ_SPECTRAL_PRODUCTS_HPP_
#define LOGMAJ_SPECTRAL_PRODUCTS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace logmaj {

/// Strictly increasing 1-based selection i_1 < ... < i_k from {1, ..., n}.
class IndexSequence {
 public:
  /// Throws kIndexOutOfRange on an empty, unsorted or out-of-range list.
  IndexSequence(std::size_t n, std::vector<std::size_t> indices);

  /// {first, ..., last}.
  static IndexSequence Range(std::size_t n, std::size_t first, std::size_t last);
  /// {1, ..., k}
  static IndexSequence Head(std::size_t n, std::size_t k);
  /// {n-k+1, ..., n}
  static IndexSequence Tail(std::size_t n, std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return indices_.size(); }
  /// 1-based index i_t for t in [1, size()].
  std::size_t at(std::size_t t) const { return indices_[t - 1]; }
  std::span<const std::size_t> indices() const noexcept { return indices_; }

  friend bool operator==(const IndexSequence&, const IndexSequence&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> indices_;
};

/// All 2^n - 1 nonempty index sequences of {1..n}, ordered by size and then
/// lexicographically.
std::vector<IndexSequence> AllIndexSequences(std::size_t n);

/// Product in the log domain. `zero` is set when any factor is exactly zero,
/// `negative` when an odd number of factors is negative.
struct LogProduct {
  bool zero = false;
  bool negative = false;
  double log_magnitude = 0.0;

  double value() const;
};

LogProduct LogProductOf(std::span<const double> factors);

/// Plain product of values[i_t - 1]. Throws kIndexOutOfRange when
/// I.n() != values.size().
double IndexedProduct(std::span<const double> values, const IndexSequence& index);
LogProduct IndexedLogProduct(std::span<const double> values, const IndexSequence& index);

/// prod_{t=n-k+1..n} values[t] and prod_{t=1..k} values[t].
double TailProduct(std::span<const double> values, std::size_t k);
double HeadProduct(std::span<const double> values, std::size_t k);

/// Entries with |v| <= rel * max|v| become exactly zero; the result is
/// re-sorted descending. Used on PSD spectra and singular values so that
/// roundoff-level values multiply out to an exact zero.
std::vector<double> ClampNegligible(std::vector<double> values, double rel = 1e-12);

}  // namespace logmaj

#endif  // LOGMAJ_SPECTRAL_PRODUCTS_HPP_
