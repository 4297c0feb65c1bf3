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

#ifndef LOGMAJ_DECOMPOSITIONS_HPP_
#define LOGMAJ_DECOMPOSITIONS_HPP_

#include <vector>

#include "logmaj/complex_matrix.hpp"

namespace logmaj {

/// Eigen-decomposition A = frame * diag(eigenvalues) * frame* of a Hermitian
/// matrix. Eigenvalues are sorted descending; the columns of `frame` are the
/// matching orthonormal eigenvectors.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix frame;

  std::size_t dimension() const noexcept { return eigenvalues.size(); }

  /// frame * diag(eigenvalues) * frame*.
  ComplexMatrix Reconstruct() const;
};

inline constexpr double kDefaultHermitianTolerance = 1e-10;

/// Cyclic complex Jacobi eigensolver. Throws kNotHermitian when
/// max|A - A*| > tol * (1 + max|A|) and kDimensionTooLarge above 64.
SpectralDecomposition HermitianEig(const ComplexMatrix& a,
                                   double tol = kDefaultHermitianTolerance);

/// Eigenvalues only (descending).
std::vector<double> HermitianEigenvalues(const ComplexMatrix& a,
                                         double tol = kDefaultHermitianTolerance);

/// Singular values in descending order, computed with one-sided Jacobi
/// rotations on the columns of A (or of A* when A is wide).
std::vector<double> SingularValues(const ComplexMatrix& a);

/// Determinant by LU with partial pivoting.
Complex Determinant(const ComplexMatrix& a);

/// Solves A X = B for Hermitian positive definite A. Throws kSingularSystem
/// unless min eig(A) > 1e-10 * max eig(A).
ComplexMatrix SolveHermitian(const ComplexMatrix& a, const ComplexMatrix& b);

/// Principal square root of a Hermitian PSD matrix via its spectrum.
/// Eigenvalues below zero (roundoff) are treated as zero.
ComplexMatrix HermitianSqrt(const ComplexMatrix& a);

/// Eigenvalues of a general square matrix: Householder reduction to upper
/// Hessenberg form followed by single-shift complex QR with deflation.
std::vector<Complex> GeneralEigenvalues(const ComplexMatrix& a);

/// |lambda| of a general square matrix, sorted descending.
std::vector<double> EigenvalueModuli(const ComplexMatrix& a);

/// Tail products used by the Weyl log-majorization relation:
/// singular = prod_{t=1..k} sigma_{n-t+1}(M),
/// eigen    = prod_{t=1..k} |lambda_{n-t+1}(M)|.
/// For every square M, singular <= eigen.
struct WeylTailProducts {
  double singular = 0.0;
  double eigen = 0.0;
};
WeylTailProducts WeylTail(const ComplexMatrix& m, std::size_t k);

}  // namespace logmaj

#endif  // LOGMAJ_DECOMPOSITIONS_HPP_
