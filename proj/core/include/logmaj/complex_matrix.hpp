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

#ifndef LOGMAJ_COMPLEX_MATRIX_HPP_
#define LOGMAJ_COMPLEX_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace logmaj {

using Complex = std::complex<double>;

/// Largest dimension accepted by the dense solvers.
inline constexpr std::size_t kMaxDimension = 64;

/// Dense row-major complex matrix. Real data is stored with zero imaginary
/// parts; every routine in the library works over the complex field.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-wise literal, e.g. {{1, 2}, {3, 4}}. Rows must have equal length.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix Zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix Identity(std::size_t n);
  static ComplexMatrix Diagonal(std::span<const double> diag);
  static ComplexMatrix Diagonal(std::initializer_list<double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  /// Columns [first, first + count).
  ComplexMatrix columns(std::size_t first, std::size_t count) const;
  std::vector<Complex> column(std::size_t j) const;

  /// max |a_ij|.
  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;

  /// max |A - A*|.
  double hermitian_deviation() const;

  /// Returns (A + A*) / 2 with an exactly real diagonal.
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);

/// A* B without forming A*.
ComplexMatrix AdjointTimes(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |A - B| over entries; shapes must agree.
double MaxAbsDifference(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |X*X - I|.
double OrthonormalityResidual(const ComplexMatrix& x);

}  // namespace logmaj

#endif  // LOGMAJ_COMPLEX_MATRIX_HPP_
