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

#ifndef LOGMAJ_CONTRACTION_BOUNDS_HPP_
#define LOGMAJ_CONTRACTION_BOUNDS_HPP_

#include <cstddef>

#include "logmaj/complex_matrix.hpp"
#include "logmaj/report.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

/// sigma_1 <= 1 - kStrictContractionMargin is required of user-supplied strict
/// contractions.
inline constexpr double kStrictContractionMargin = 1e-6;

/// Throws kNotStrictContraction unless sigma_1(A) <= 1 - margin.
void RequireStrictContraction(const ComplexMatrix& a,
                              double margin = kStrictContractionMargin);
/// Throws kNotContraction unless sigma_1(A) <= 1 + 1e-12.
void RequireContraction(const ComplexMatrix& a);

/// Residual of F + H = (I - B*A)(I - A*A)^{-1}(I - A*B), where
/// F = I - B*B and H = (A - B)*(I - AA*)^{-1}(A - B).
IdentityReport HuaIdentityResidual(const ComplexMatrix& a, const ComplexMatrix& b,
                                   double tol = kDefaultIdentityTolerance);

/// Residual of I + A*A = P + Q, P = (A+B)*(I+BB*)^{-1}(A+B),
/// Q = (I-A*B)(I+B*B)^{-1}(I-A*B)*. Holds for all square A, B.
IdentityReport SumIdentityResidual(const ComplexMatrix& a, const ComplexMatrix& b,
                                   double tol = kDefaultIdentityTolerance);

/// Links "hua": |det(I-A*B)|^2 >= det(I-A*A) det(I-B*B) + |det(A-B)|^2 and
/// "hua_weak" without the |det(A-B)|^2 term.
BoundReport HuaDetInequality(const ComplexMatrix& a, const ComplexMatrix& b,
                             double tol = kDefaultBoundTolerance);

/// det(I+A*A) det(I+B*B) - |det(A+B)|^2 >= |det(I-A*B)|^2 for any square A, B.
BoundReport HuaReversalDet(const ComplexMatrix& a, const ComplexMatrix& b,
                           double tol = kDefaultBoundTolerance);

/// For contractions A, B and M = I - A*B, with R = prod_{t<=k} [1-lambda_t(A*A)][1-lambda_t(B*B)]:
///   "marcus_eigen":    prod |lambda_{n-t+1}(M)|^2 >= R
///   "marcus_singular": prod sigma_{n-t+1}(M)^2 >= R
///   "weyl_tail":       prod |lambda_{n-t+1}(M)| >= prod sigma_{n-t+1}(M)
BoundReport MarcusBounds(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                         double tol = kDefaultBoundTolerance);

/// Everything the indexed contraction bound needs, computed once per pair.
struct ContractionPairData {
  std::vector<double> aa;        // lambda(A*A), descending
  std::vector<double> bb;        // lambda(B*B)
  std::vector<double> sigma_m;   // sigma(I - A*B)
  std::vector<double> sigma_d;   // sigma(A - B)
  std::vector<double> f;         // lambda(I - B*B)
  std::vector<double> h;         // lambda((A-B)*(I-AA*)^{-1}(A-B))

  /// Requires strict contractions.
  static ContractionPairData From(const ComplexMatrix& a, const ComplexMatrix& b);
  std::size_t n() const noexcept { return aa.size(); }
};

/// prod sigma^2_{i_t}(I-A*B) >= T1 + T2 + T3 ("indexed" link) with
///   T1 = prod [1-lambda_t(A*A)][1-lambda_{n-i_t+1}(B*B)]
///   T2 = prod [1-lambda_t(A*A)] sigma^2_{n-t+1}(A-B) / [1-lambda_{n-t+1}(A*A)]
///   T3 = (2^k-2) prod [1-lambda_t(A*A)] sqrt(lambda_{i_t}(F) lambda_{n-t+1}(H)).
BoundReport ContractionMainBound(const ContractionPairData& d, const IndexSequence& index,
                                 double tol = kDefaultBoundTolerance);
BoundReport ContractionMainBound(const ComplexMatrix& a, const ComplexMatrix& b,
                                 const IndexSequence& index,
                                 double tol = kDefaultBoundTolerance);

/// |det(I-A*B)|^2 >= det(I-A*A) det(I-B*B) + |det(A-B)|^2
///   + (2^n-2) sqrt(det(I-A*A) det(I-B*B)) |det(A-B)|.
BoundReport HuaStrengthenedDet(const ComplexMatrix& a, const ComplexMatrix& b,
                               double tol = kDefaultBoundTolerance);

/// Spectral data for the indexed reversal bound.
struct ReversalPairData {
  std::vector<double> aa;       // lambda(A*A)
  std::vector<double> bb;       // lambda(B*B)
  std::vector<double> sigma_m;  // sigma(I - A*B)
  std::vector<double> sigma_s;  // sigma(A + B)

  static ReversalPairData From(const ComplexMatrix& a, const ComplexMatrix& b);
  std::size_t n() const noexcept { return aa.size(); }
};

/// prod [1+lambda_{i_t}(A*A)][1+lambda_t(B*B)] - prod sigma^2_{n-t+1}(A+B)
///   - (2^k-2) prod sigma_{i_t}(I-A*B) sigma_{n-t+1}(A+B) >= prod sigma^2_{i_t}(I-A*B).
BoundReport ReversalBound(const ReversalPairData& d, const IndexSequence& index,
                          double tol = kDefaultBoundTolerance);
BoundReport ReversalBound(const ComplexMatrix& a, const ComplexMatrix& b,
                          const IndexSequence& index, double tol = kDefaultBoundTolerance);

/// Links "reversal": det(I+A*A)det(I+B*B) - |det(A+B)|^2 - (2^n-2)|det(I-A*B)||det(A+B)|
///   >= |det(I-A*B)|^2 and "reversal_weak" without the cross term.
BoundReport ReversalDet(const ComplexMatrix& a, const ComplexMatrix& b,
                        double tol = kDefaultBoundTolerance);

}  // namespace logmaj

#endif  // LOGMAJ_CONTRACTION_BOUNDS_HPP_
