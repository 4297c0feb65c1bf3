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

#ifndef LOGMAJ_FRAME_BOUNDS_HPP_
#define LOGMAJ_FRAME_BOUNDS_HPP_

#include <cstddef>
#include <span>

#include "logmaj/complex_matrix.hpp"
#include "logmaj/decompositions.hpp"
#include "logmaj/report.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

inline constexpr double kIsometryTolerance = 1e-10;
inline constexpr double kNestingTolerance = 1e-8;

/// For D = diag(lambdas) (descending, nonnegative) and an n x k partial
/// isometry U whose first column vanishes below row m:
///   det(U* D U) >= lambda_m det(V* D_m V),
/// V = U without its first column, D_m = D with its first m entries replaced
/// by lambda_m. The k = 1 case uses det of the empty matrix = 1.
BoundReport PartialIsometryReduction(std::span<const double> lambdas, const ComplexMatrix& u,
                                     std::size_t m, double tol = kDefaultBoundTolerance);

/// det(X* A X) >= prod lambda_{i_t}(A) for an orthonormal frame X = (x_1..x_k)
/// with x_t in the span of the eigenvectors belonging to the i_t largest
/// eigenvalues. Eigenvectors of eigenvalues tied with lambda_{i_t} count as
/// part of that span, so any valid choice of eigenbasis is accepted.
BoundReport NestedFrameDetBound(const SpectralDecomposition& decomposition,
                                const IndexSequence& index, const ComplexMatrix& frame,
                                double tol = kDefaultBoundTolerance);
BoundReport NestedFrameDetBound(const ComplexMatrix& a, const IndexSequence& index,
                                const ComplexMatrix& frame,
                                double tol = kDefaultBoundTolerance);

/// det(U* B U) >= prod_{t=1..k} lambda_{n-t+1}(B) for any n x k partial isometry U.
BoundReport FanMinDet(const ComplexMatrix& b, const ComplexMatrix& u,
                      double tol = kDefaultBoundTolerance);

/// Throws kNotPartialIsometry unless max|U*U - I| <= kIsometryTolerance.
void RequirePartialIsometry(const ComplexMatrix& u);

}  // namespace logmaj

#endif  // LOGMAJ_FRAME_BOUNDS_HPP_
