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

#include "logmaj/frame_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logmaj/error.hpp"
#include "logmaj/psd_bounds.hpp"
#include "product_helpers.hpp"

namespace logmaj {

using internal::Prod;

namespace {

// det of the Hermitian matrix X* D X; real by construction.
double CompressedDet(const ComplexMatrix& x, const ComplexMatrix& d) {
  if (x.cols() == 0) return 1.0;
  return Determinant(AdjointTimes(x, d * x).hermitian_part()).real();
}

}  // namespace

void RequirePartialIsometry(const ComplexMatrix& u) {
  if (u.empty() || u.cols() > u.rows()) {
    throw Error(ErrorCode::kNotPartialIsometry, "need an n x k matrix with 1 <= k <= n");
  }
  const double residual = OrthonormalityResidual(u);
  if (residual > kIsometryTolerance) {
    throw Error(ErrorCode::kNotPartialIsometry,
                "max|U*U - I| = " + std::to_string(residual));
  }
}

BoundReport PartialIsometryReduction(std::span<const double> lambdas, const ComplexMatrix& u,
                                     std::size_t m, double tol) {
  const std::size_t n = lambdas.size();
  if (u.rows() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "U must have one row per eigenvalue");
  }
  if (m < 1 || m > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "m = " + std::to_string(m) + " outside 1..n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lambdas[i] < 0.0 || (i > 0 && lambdas[i] > lambdas[i - 1])) {
      throw Error(ErrorCode::kBadSpectrum, "lambdas must be descending and nonnegative");
    }
  }
  RequirePartialIsometry(u);
  for (std::size_t i = m; i < n; ++i) {
    if (std::abs(u(i, 0)) > 1e-12) {
      throw Error(ErrorCode::kZeroPatternViolated,
                  "u(" + std::to_string(i + 1) + ",1) is nonzero");
    }
  }

  const double lambda_m = lambdas[m - 1];
  std::vector<double> flattened(lambdas.begin(), lambdas.end());
  std::fill(flattened.begin(), flattened.begin() + static_cast<std::ptrdiff_t>(m), lambda_m);

  const double lhs = CompressedDet(u, ComplexMatrix::Diagonal(lambdas));
  const ComplexMatrix v = u.columns(1, u.cols() - 1);
  const double rhs = lambda_m * CompressedDet(v, ComplexMatrix::Diagonal(flattened));
  return BoundReportBuilder("partial_isometry_reduction", tol)
      .Link("reduction", lhs, rhs)
      .Statement(lhs, {rhs})
      .Build();
}

namespace {

BoundReport NestedFrameImpl(const SpectralDecomposition& decomposition,
                            const ComplexMatrix& a, const IndexSequence& index,
                            const ComplexMatrix& frame, double tol) {
  const std::size_t n = decomposition.dimension();
  const std::size_t k = index.size();
  if (index.n() != n || frame.rows() != n || frame.cols() != k) {
    throw Error(ErrorCode::kDimensionMismatch, "frame must be n x |I|");
  }
  const auto& lam = decomposition.eigenvalues;
  const double lam_top = std::max(std::abs(lam.front()), std::abs(lam.back()));
  if (lam.back() < -1e-10 * std::max(lam.front(), 0.0) ||
      (lam.front() <= 0.0 && lam.back() < 0.0)) {
    throw Error(ErrorCode::kNotPSD, "minimum eigenvalue " + std::to_string(lam.back()));
  }
  const double orth = OrthonormalityResidual(frame);
  if (orth > kIsometryTolerance) {
    throw Error(ErrorCode::kNotOrthonormal, "max|X*X - I| = " + std::to_string(orth));
  }

  // Coefficients of the frame in the eigenbasis.
  const ComplexMatrix coeff = AdjointTimes(decomposition.frame, frame);
  const double tie = 1e-10 * std::max(1.0, lam_top);
  for (std::size_t t = 1; t <= k; ++t) {
    std::size_t span_end = index.at(t);
    while (span_end < n && lam[span_end] >= lam[index.at(t) - 1] - tie) ++span_end;
    double outside = 0.0;
    for (std::size_t r = span_end; r < n; ++r) outside += std::norm(coeff(r, t - 1));
    if (std::sqrt(outside) > kNestingTolerance) {
      throw Error(ErrorCode::kFrameNotNested,
                  "column " + std::to_string(t) + " leaves its span by " +
                      std::to_string(std::sqrt(outside)));
    }
  }

  const std::vector<double> clamped = ClampNegligible(lam);
  const double lhs = CompressedDet(frame, a);
  const double rhs = IndexedLogProduct(clamped, index).value();
  return BoundReportBuilder("nested_frame_det_bound", tol)
      .Link("nested_frame", lhs, rhs)
      .Statement(lhs, {rhs})
      .Build();
}

}  // namespace

BoundReport NestedFrameDetBound(const SpectralDecomposition& decomposition,
                                const IndexSequence& index, const ComplexMatrix& frame,
                                double tol) {
  return NestedFrameImpl(decomposition, decomposition.Reconstruct(), index, frame, tol);
}

BoundReport NestedFrameDetBound(const ComplexMatrix& a, const IndexSequence& index,
                                const ComplexMatrix& frame, double tol) {
  return NestedFrameImpl(HermitianEig(a), a.hermitian_part(), index, frame, tol);
}

BoundReport FanMinDet(const ComplexMatrix& b, const ComplexMatrix& u, double tol) {
  const auto lam = PsdSpectrum(b);
  if (u.rows() != lam.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "U must have n rows");
  }
  RequirePartialIsometry(u);
  const std::size_t k = u.cols();
  const double lhs = CompressedDet(u, b.hermitian_part());
  const double rhs = Prod(std::span<const double>(lam).last(k));
  return BoundReportBuilder("fan_min_det", tol)
      .Link("minimum", lhs, rhs)
      .Statement(lhs, {rhs})
      .Build();
}

}  // namespace logmaj
