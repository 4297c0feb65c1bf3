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

#include "logmaj/contraction_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logmaj/decompositions.hpp"
#include "logmaj/error.hpp"
#include "logmaj/psd_bounds.hpp"
#include "product_helpers.hpp"

namespace logmaj {

using internal::Prod;

namespace {

void RequireSquarePair(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.square() || a.empty() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "A and B must be square of the same size");
  }
}

ComplexMatrix Gram(const ComplexMatrix& a) { return AdjointTimes(a, a).hermitian_part(); }

std::vector<double> GramSpectrum(const ComplexMatrix& a) {
  return ClampNegligible(HermitianEigenvalues(Gram(a)));
}

// I - X* Y
ComplexMatrix IdentityMinusAdjointTimes(const ComplexMatrix& x, const ComplexMatrix& y) {
  return ComplexMatrix::Identity(x.cols()) - AdjointTimes(x, y);
}

// I + X* X
ComplexMatrix IdentityPlusGram(const ComplexMatrix& x) {
  return ComplexMatrix::Identity(x.cols()) + Gram(x);
}

double Sq(double x) { return x * x; }

double MaxAbsOf(const ComplexMatrix& x, const ComplexMatrix& y) {
  return std::max(x.max_abs(), y.max_abs());
}

}  // namespace

void RequireStrictContraction(const ComplexMatrix& a, double margin) {
  const double s1 = SingularValues(a).front();
  if (!(s1 <= 1.0 - margin)) {
    throw Error(ErrorCode::kNotStrictContraction,
                "sigma_1 = " + std::to_string(s1) + " exceeds 1 - " + std::to_string(margin));
  }
}

void RequireContraction(const ComplexMatrix& a) {
  const double s1 = SingularValues(a).front();
  if (!(s1 <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::kNotContraction, "sigma_1 = " + std::to_string(s1) + " exceeds 1");
  }
}

IdentityReport HuaIdentityResidual(const ComplexMatrix& a, const ComplexMatrix& b,
                                   double tol) {
  RequireSquarePair(a, b);
  RequireStrictContraction(a);
  RequireStrictContraction(b);
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n);
  const ComplexMatrix diff = a - b;

  const ComplexMatrix f = id - AdjointTimes(b, b);
  const ComplexMatrix i_minus_aa_adj = id - a * a.adjoint();
  const ComplexMatrix h = AdjointTimes(diff, SolveHermitian(i_minus_aa_adj, diff));
  const ComplexMatrix lhs = f + h;

  const ComplexMatrix i_minus_astar_b = IdentityMinusAdjointTimes(a, b);
  const ComplexMatrix i_minus_bstar_a = IdentityMinusAdjointTimes(b, a);
  const ComplexMatrix rhs =
      i_minus_bstar_a * SolveHermitian(id - AdjointTimes(a, a), i_minus_astar_b);

  return MakeIdentityReport("hua_identity_residual", MaxAbsDifference(lhs, rhs),
                            MaxAbsOf(lhs, rhs), tol);
}

IdentityReport SumIdentityResidual(const ComplexMatrix& a, const ComplexMatrix& b,
                                   double tol) {
  RequireSquarePair(a, b);
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n);
  const ComplexMatrix sum = a + b;
  const ComplexMatrix p = AdjointTimes(sum, SolveHermitian(id + b * b.adjoint(), sum));
  const ComplexMatrix m = IdentityMinusAdjointTimes(a, b);
  const ComplexMatrix q = m * SolveHermitian(IdentityPlusGram(b), m.adjoint());
  const ComplexMatrix lhs = IdentityPlusGram(a);
  const ComplexMatrix rhs = p + q;
  return MakeIdentityReport("sum_identity_residual", MaxAbsDifference(lhs, rhs),
                            MaxAbsOf(lhs, rhs), tol);
}

BoundReport HuaDetInequality(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  RequireSquarePair(a, b);
  RequireStrictContraction(a);
  RequireStrictContraction(b);
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n);
  const double da = Determinant(id - Gram(a)).real();
  const double db = Determinant(id - Gram(b)).real();
  const double diff = std::norm(Determinant(a - b));
  const double lhs = std::norm(Determinant(IdentityMinusAdjointTimes(a, b)));
  const double rhs = da * db + diff;
  return BoundReportBuilder("hua_det_inequality", tol)
      .Link("hua", lhs, rhs, {da * db, diff})
      .Link("hua_weak", lhs, da * db)
      .Statement(lhs, {rhs})
      .Build();
}

BoundReport HuaReversalDet(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  RequireSquarePair(a, b);
  const double pa = Determinant(IdentityPlusGram(a)).real();
  const double pb = Determinant(IdentityPlusGram(b)).real();
  const double sum = std::norm(Determinant(a + b));
  const double lhs = std::norm(Determinant(IdentityMinusAdjointTimes(a, b)));
  const double rhs = pa * pb - sum;
  return BoundReportBuilder("hua_reversal_det", tol)
      .Link("reversal", rhs, lhs, {pa * pb, sum})
      .Statement(lhs, {rhs})
      .Build();
}

BoundReport MarcusBounds(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                         double tol) {
  RequireSquarePair(a, b);
  const std::size_t n = a.rows();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "k = " + std::to_string(k) + " outside 1..n");
  }
  RequireContraction(a);
  RequireContraction(b);

  const auto aa = GramSpectrum(a);
  const auto bb = GramSpectrum(b);
  std::vector<double> defect(k);
  for (std::size_t t = 0; t < k; ++t) {
    defect[t] = std::max(0.0, 1.0 - aa[t]) * std::max(0.0, 1.0 - bb[t]);
  }
  const double rhs = Prod(defect);

  const ComplexMatrix m = IdentityMinusAdjointTimes(a, b);
  const auto weyl = WeylTail(m, k);
  const double eigen_sq = Sq(weyl.eigen);
  const double singular_sq = Sq(weyl.singular);

  return BoundReportBuilder("marcus_bounds", tol)
      .Link("marcus_eigen", eigen_sq, rhs)
      .Link("marcus_singular", singular_sq, rhs)
      .Link("weyl_tail", weyl.eigen, weyl.singular)
      .Statement(singular_sq, {rhs})
      .Build();
}

ContractionPairData ContractionPairData::From(const ComplexMatrix& a, const ComplexMatrix& b) {
  RequireSquarePair(a, b);
  RequireStrictContraction(a);
  RequireStrictContraction(b);
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n);
  const ComplexMatrix diff = a - b;

  ContractionPairData d;
  d.aa = GramSpectrum(a);
  d.bb = GramSpectrum(b);
  d.sigma_m = ClampNegligible(SingularValues(IdentityMinusAdjointTimes(a, b)));
  d.sigma_d = ClampNegligible(SingularValues(diff));
  d.f = ClampNegligible(HermitianEigenvalues(id - Gram(b)));
  const ComplexMatrix h =
      AdjointTimes(diff, SolveHermitian(id - a * a.adjoint(), diff)).hermitian_part();
  d.h = ClampNegligible(HermitianEigenvalues(h));
  return d;
}

BoundReport ContractionMainBound(const ContractionPairData& d, const IndexSequence& index,
                                 double tol) {
  const std::size_t n = d.n();
  const std::size_t k = index.size();
  if (index.n() != n) throw Error(ErrorCode::kIndexOutOfRange, "index dimension mismatch");

  std::vector<double> lhs_f(k), t1(k), t2(k), t3(k);
  for (std::size_t t = 1; t <= k; ++t) {
    const std::size_t it = index.at(t);
    const double defect_a = 1.0 - d.aa[t - 1];
    lhs_f[t - 1] = Sq(d.sigma_m[it - 1]);
    t1[t - 1] = defect_a * (1.0 - d.bb[n - it]);
    t2[t - 1] = defect_a * Sq(d.sigma_d[n - t]) / (1.0 - d.aa[n - t]);
    t3[t - 1] = defect_a * std::sqrt(d.f[it - 1] * d.h[n - t]);
  }
  const double lhs = Prod(lhs_f);
  const double term1 = Prod(t1);
  const double term2 = Prod(t2);
  const double term3 = CrossTermWeight(k) * Prod(t3);
  const double rhs = term1 + term2 + term3;
  return BoundReportBuilder("contraction_main_bound", tol)
      .Link("indexed", lhs, rhs, {term1, term2, term3})
      .Statement(lhs, {rhs})
      .Build();
}

BoundReport ContractionMainBound(const ComplexMatrix& a, const ComplexMatrix& b,
                                 const IndexSequence& index, double tol) {
  return ContractionMainBound(ContractionPairData::From(a, b), index, tol);
}

BoundReport HuaStrengthenedDet(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  RequireSquarePair(a, b);
  RequireStrictContraction(a);
  RequireStrictContraction(b);
  const std::size_t n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n);
  const double dadb = Determinant(id - Gram(a)).real() * Determinant(id - Gram(b)).real();
  const double diff_abs = std::abs(Determinant(a - b));
  const double lhs = std::norm(Determinant(IdentityMinusAdjointTimes(a, b)));
  const double cross = CrossTermWeight(n) * std::sqrt(std::max(dadb, 0.0)) * diff_abs;
  const double rhs = dadb + Sq(diff_abs) + cross;
  return BoundReportBuilder("hua_strengthened_det", tol)
      .Link("strengthened", lhs, rhs, {dadb, Sq(diff_abs), cross})
      .Statement(lhs, {rhs})
      .Build();
}

ReversalPairData ReversalPairData::From(const ComplexMatrix& a, const ComplexMatrix& b) {
  RequireSquarePair(a, b);
  return {GramSpectrum(a), GramSpectrum(b),
          ClampNegligible(SingularValues(IdentityMinusAdjointTimes(a, b))),
          ClampNegligible(SingularValues(a + b))};
}

BoundReport ReversalBound(const ReversalPairData& d, const IndexSequence& index,
                          double tol) {
  const std::size_t n = d.n();
  const std::size_t k = index.size();
  if (index.n() != n) throw Error(ErrorCode::kIndexOutOfRange, "index dimension mismatch");

  std::vector<double> lhs_f(k), growth(k), sum_f(k), cross_f(k);
  for (std::size_t t = 1; t <= k; ++t) {
    const std::size_t it = index.at(t);
    lhs_f[t - 1] = Sq(d.sigma_m[it - 1]);
    growth[t - 1] = (1.0 + d.aa[it - 1]) * (1.0 + d.bb[t - 1]);
    sum_f[t - 1] = Sq(d.sigma_s[n - t]);
    cross_f[t - 1] = d.sigma_m[it - 1] * d.sigma_s[n - t];
  }
  const double lhs = Prod(lhs_f);
  const double big = Prod(growth);
  const double sum_term = Prod(sum_f);
  const double cross = CrossTermWeight(k) * Prod(cross_f);
  const double rhs = big - sum_term - cross;
  return BoundReportBuilder("reversal_bound", tol)
      .Link("indexed_reversal", rhs, lhs, {big, sum_term, cross})
      .Statement(lhs, {rhs})
      .Build();
}

BoundReport ReversalBound(const ComplexMatrix& a, const ComplexMatrix& b,
                          const IndexSequence& index, double tol) {
  return ReversalBound(ReversalPairData::From(a, b), index, tol);
}

BoundReport ReversalDet(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  RequireSquarePair(a, b);
  const std::size_t n = a.rows();
  const double big =
      Determinant(IdentityPlusGram(a)).real() * Determinant(IdentityPlusGram(b)).real();
  const double sum_abs = std::abs(Determinant(a + b));
  const double m_abs = std::abs(Determinant(IdentityMinusAdjointTimes(a, b)));
  const double lhs = Sq(m_abs);
  const double cross = CrossTermWeight(n) * m_abs * sum_abs;
  const double rhs = big - Sq(sum_abs) - cross;
  const double weak = big - Sq(sum_abs);
  return BoundReportBuilder("reversal_det", tol)
      .Link("reversal", rhs, lhs, {big, Sq(sum_abs), cross})
      .Link("reversal_weak", weak, lhs, {big, Sq(sum_abs)})
      .Statement(lhs, {rhs})
      .Build();
}

}  // namespace logmaj
