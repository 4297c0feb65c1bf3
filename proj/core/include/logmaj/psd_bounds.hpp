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

#ifndef LOGMAJ_PSD_BOUNDS_HPP_
#define LOGMAJ_PSD_BOUNDS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "logmaj/complex_matrix.hpp"
#include "logmaj/report.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

/// Descending eigenvalues of a PSD matrix with negligible entries clamped to
/// zero. Throws kNotPSD when lambda_min < -1e-10 * max(lambda_1, 0).
std::vector<double> PsdSpectrum(const ComplexMatrix& a);

/// Spectra of A, B and A + B for a pair of equally sized PSD matrices.
struct PsdPairSpectra {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> sum;

  static PsdPairSpectra From(const ComplexMatrix& a, const ComplexMatrix& b);
  std::size_t n() const noexcept { return a.size(); }
};

/// prod(a_t + b_t) >= prod a_t + prod b_t + (2^n - 2) sqrt(prod a_t b_t), together
/// with its power form in x = prod a_t, y = prod b_t.
BoundReport ScalarProductBound(std::span<const double> a, std::span<const double> b,
                               double tol = kDefaultBoundTolerance);

/// Tail products over t = k..n:
/// prod lambda_t(A+B) >= prod [lambda_t(A) + lambda_t(B)] >= prod lambda_t(A) + prod lambda_t(B).
BoundReport FiedlerChain(const PsdPairSpectra& s, std::size_t k,
                         double tol = kDefaultBoundTolerance);
BoundReport FiedlerChain(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                         double tol = kDefaultBoundTolerance);

/// (n-k+1)-th roots of the tail products: superadditive over A + B.
BoundReport OppenheimTailPower(const PsdPairSpectra& s, std::size_t k,
                               double tol = kDefaultBoundTolerance);
BoundReport OppenheimTailPower(const ComplexMatrix& a, const ComplexMatrix& b,
                               std::size_t k, double tol = kDefaultBoundTolerance);

/// det(A+B)^{1/n} >= det(A)^{1/n} + det(B)^{1/n}, determinants taken as
/// eigenvalue products. Identical to OppenheimTailPower with k = 1.
BoundReport MinkowskiDet(const PsdPairSpectra& s, double tol = kDefaultBoundTolerance);
BoundReport MinkowskiDet(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol = kDefaultBoundTolerance);

/// det(A+B) >= det A + det B + (2^n - 2) sqrt(det A det B).
BoundReport HartfielDet(const PsdPairSpectra& s, double tol = kDefaultBoundTolerance);
BoundReport HartfielDet(const ComplexMatrix& a, const ComplexMatrix& b,
                        double tol = kDefaultBoundTolerance);

/// Spectra needed for products of eigenvalues of AB, evaluated through the
/// Hermitian matrix A^{1/2} B A^{1/2}.
struct PsdProductSpectra {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> product;

  static PsdProductSpectra From(const ComplexMatrix& a, const ComplexMatrix& b);
};

/// prod lambda_{i_t}(A) lambda_{n-t+1}(B) <= prod lambda_{i_t}(AB)
///   <= prod lambda_{i_t}(A) lambda_t(B).
/// Links: "upper" (upper >= middle), "lower" (middle >= lower).
BoundReport LidskiiProduct(const PsdProductSpectra& s, const IndexSequence& index,
                           double tol = kDefaultBoundTolerance);
BoundReport LidskiiProduct(const ComplexMatrix& a, const ComplexMatrix& b,
                           const IndexSequence& index, double tol = kDefaultBoundTolerance);

/// Indexed sum bounds for PSD A, B with k = |I|. Links:
///   "power_form":      prod lambda_{i_t}(A+B)^{1/k}
///                        >= prod lambda_{i_t}(A)^{1/k} + prod lambda_{n-t+1}(B)^{1/k}
///   "three_term_form": prod lambda_{i_t}(A+B) >= x + y + (2^k - 2) sqrt(xy)
///   "power_dominates": (x^{1/k} + y^{1/k})^k >= x + y + (2^k - 2) sqrt(xy)
/// with x = prod lambda_{i_t}(A), y = prod lambda_{n-t+1}(B).
BoundReport MainBounds(const PsdPairSpectra& s, const IndexSequence& index,
                       double tol = kDefaultBoundTolerance);
BoundReport MainBounds(const ComplexMatrix& a, const ComplexMatrix& b,
                       const IndexSequence& index, double tol = kDefaultBoundTolerance);

/// Power form restricted to the k largest eigenvalues of A + B.
BoundReport HeadTailPower(const PsdPairSpectra& s, std::size_t k,
                          double tol = kDefaultBoundTolerance);
BoundReport HeadTailPower(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                          double tol = kDefaultBoundTolerance);

/// lambda_i(A+B) lambda_j(A+B) >= lambda_i(A) lambda_j(A) + lambda_{n-1}(B) lambda_n(B)
///   + 2 sqrt(...), for 1 <= i < j <= n.
BoundReport PairwiseBound(const PsdPairSpectra& s, std::size_t i, std::size_t j,
                          double tol = kDefaultBoundTolerance);
BoundReport PairwiseBound(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t i,
                          std::size_t j, double tol = kDefaultBoundTolerance);

/// Three links:
///   "tail_sum":        prod_{tail} lambda_t(A+B) >= prod_{tail} [lambda_t(A) + lambda_t(B)]
///   "tail_three_term": prod_{tail} [lambda_t(A) + lambda_t(B)]
///                        >= prod lambda_t(A) + prod lambda_t(B) + (2^k-2) prod sqrt(lambda_t(A) lambda_t(B))
///   "head_three_term": prod_{t<=k} lambda_t(A+B)
///                        >= prod lambda_t(A) + prod lambda_{n-t+1}(B) + (2^k-2) prod sqrt(...)
/// where tail = {n-k+1, ..., n}.
BoundReport TailChain(const PsdPairSpectra& s, std::size_t k,
                      double tol = kDefaultBoundTolerance);
BoundReport TailChain(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                      double tol = kDefaultBoundTolerance);

/// 2^k - 2 as a double.
double CrossTermWeight(std::size_t k);

}  // namespace logmaj

#endif  // LOGMAJ_PSD_BOUNDS_HPP_
