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

#include "logmaj/psd_bounds.hpp"

#include <cmath>
#include <string>

#include "logmaj/decompositions.hpp"
#include "logmaj/error.hpp"
#include "product_helpers.hpp"

namespace logmaj {

using internal::Prod;

std::vector<double> PsdSpectrum(const ComplexMatrix& a) {
  auto eig = HermitianEigenvalues(a);
  const double top = std::max(eig.front(), 0.0);
  if (eig.back() < -1e-10 * top || (top == 0.0 && eig.back() < 0.0)) {
    throw Error(ErrorCode::kNotPSD,
                "minimum eigenvalue " + std::to_string(eig.back()));
  }
  return ClampNegligible(std::move(eig));
}

PsdPairSpectra PsdPairSpectra::From(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "A and B differ in shape");
  }
  return {PsdSpectrum(a), PsdSpectrum(b), PsdSpectrum(a + b)};
}

double CrossTermWeight(std::size_t k) { return std::ldexp(1.0, static_cast<int>(k)) - 2.0; }

BoundReport ScalarProductBound(std::span<const double> a, std::span<const double> b,
                               double tol) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::kLengthMismatch, "sequences must have equal nonzero length");
  }
  const std::size_t n = a.size();
  std::vector<double> sums(n), ab(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t] < 0.0 || b[t] < 0.0) {
      throw Error(ErrorCode::kNegativeInput, "entry " + std::to_string(t + 1) + " is negative");
    }
    sums[t] = a[t] + b[t];
    ab[t] = a[t] * b[t];
  }
  const double x = Prod(a);
  const double y = Prod(b);
  const double w = CrossTermWeight(n);
  const double cross = w * std::sqrt(Prod(ab));
  const double lhs = Prod(sums);
  const double rhs = x + y + cross;

  const double inv_n = 1.0 / static_cast<double>(n);
  const double power_lhs = std::pow(std::pow(x, inv_n) + std::pow(y, inv_n), static_cast<double>(n));
  const double power_rhs = x + y + w * std::sqrt(x * y);

  return BoundReportBuilder("scalar_product_bound", tol)
      .Link("product_form", lhs, rhs, {x, y, cross})
      .Link("power_form", power_lhs, power_rhs, {x, y})
      .Statement(lhs, {rhs})
      .Build();
}

namespace {

void RequireK(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
}

// values[first-1 .. n-1]
std::vector<double> Suffix(const std::vector<double>& v, std::size_t first) {
  return {v.begin() + static_cast<std::ptrdiff_t>(first - 1), v.end()};
}

std::vector<double> Prefix(const std::vector<double>& v, std::size_t k) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::vector<double> Selected(const std::vector<double>& v, const IndexSequence& index) {
  if (index.n() != v.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "index sequence dimension mismatch");
  }
  std::vector<double> out;
  for (std::size_t i : index.indices()) out.push_back(v[i - 1]);
  return out;
}

// lambda_{n-t+1} for t = 1..k, i.e. the k smallest values.
std::vector<double> Smallest(const std::vector<double>& v, std::size_t k) {
  return Suffix(v, v.size() - k + 1);
}

std::vector<double> Elementwise(const std::vector<double>& x, const std::vector<double>& y,
                                double (*op)(double, double)) {
  std::vector<double> out(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) out[t] = op(x[t], y[t]);
  return out;
}

double Add(double p, double q) { return p + q; }
double Mul(double p, double q) { return p * q; }

}  // namespace

BoundReport FiedlerChain(const PsdPairSpectra& s, std::size_t k, double tol) {
  RequireK(k, s.n());
  const auto sum = Suffix(s.sum, k);
  const auto a = Suffix(s.a, k);
  const auto b = Suffix(s.b, k);
  const double lhs = Prod(sum);
  const double mid = Prod(Elementwise(a, b, Add));
  const double pa = Prod(a);
  const double pb = Prod(b);
  const double low = pa + pb;
  return BoundReportBuilder("fiedler_chain", tol)
      .Link("sum_of_spectra", lhs, mid)
      .Link("split", mid, low, {pa, pb})
      .Statement(lhs, {mid, low})
      .Build();
}

BoundReport FiedlerChain(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                         double tol) {
  return FiedlerChain(PsdPairSpectra::From(a, b), k, tol);
}

BoundReport OppenheimTailPower(const PsdPairSpectra& s, std::size_t k, double tol) {
  RequireK(k, s.n());
  const double root = 1.0 / static_cast<double>(s.n() - k + 1);
  const double lhs = std::pow(Prod(Suffix(s.sum, k)), root);
  const double ra = std::pow(Prod(Suffix(s.a, k)), root);
  const double rb = std::pow(Prod(Suffix(s.b, k)), root);
  return BoundReportBuilder("oppenheim_tail_power", tol)
      .Link("tail_root", lhs, ra + rb, {ra, rb})
      .Statement(lhs, {ra + rb})
      .Build();
}

BoundReport OppenheimTailPower(const ComplexMatrix& a, const ComplexMatrix& b,
                               std::size_t k, double tol) {
  return OppenheimTailPower(PsdPairSpectra::From(a, b), k, tol);
}

BoundReport MinkowskiDet(const PsdPairSpectra& s, double tol) {
  auto report = OppenheimTailPower(s, 1, tol);
  report.check_name = "minkowski_det";
  return report;
}

BoundReport MinkowskiDet(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return MinkowskiDet(PsdPairSpectra::From(a, b), tol);
}

BoundReport HartfielDet(const PsdPairSpectra& s, double tol) {
  const double det_sum = Prod(s.sum);
  const double det_a = Prod(s.a);
  const double det_b = Prod(s.b);
  const double cross = CrossTermWeight(s.n()) * std::sqrt(det_a * det_b);
  const double rhs = det_a + det_b + cross;
  return BoundReportBuilder("hartfiel_det", tol)
      .Link("determinant", det_sum, rhs, {det_a, det_b, cross})
      .Statement(det_sum, {rhs})
      .Build();
}

BoundReport HartfielDet(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return HartfielDet(PsdPairSpectra::From(a, b), tol);
}

PsdProductSpectra PsdProductSpectra::From(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "A and B differ in shape");
  }
  PsdProductSpectra s;
  s.a = PsdSpectrum(a);
  s.b = PsdSpectrum(b);
  const ComplexMatrix root = HermitianSqrt(a);
  s.product = ClampNegligible(
      HermitianEigenvalues((root * b * root).hermitian_part()));
  return s;
}

BoundReport LidskiiProduct(const PsdProductSpectra& s, const IndexSequence& index,
                           double tol) {
  const std::size_t k = index.size();
  const auto sel_a = Selected(s.a, index);
  const double pa = Prod(sel_a);
  const double middle = Prod(Selected(s.product, index));
  const double upper = pa * Prod(Prefix(s.b, k));
  const double lower = pa * Prod(Smallest(s.b, k));
  return BoundReportBuilder("lidskii_product", tol)
      .Link("upper", upper, middle)
      .Link("lower", middle, lower)
      .Statement(upper, {middle, lower})
      .Build();
}

BoundReport LidskiiProduct(const ComplexMatrix& a, const ComplexMatrix& b,
                           const IndexSequence& index, double tol) {
  return LidskiiProduct(PsdProductSpectra::From(a, b), index, tol);
}

BoundReport MainBounds(const PsdPairSpectra& s, const IndexSequence& index, double tol) {
  const std::size_t k = index.size();
  const double inv_k = 1.0 / static_cast<double>(k);
  const double lhs = Prod(Selected(s.sum, index));
  const double x = Prod(Selected(s.a, index));
  const double y = Prod(Smallest(s.b, k));
  const double cross = CrossTermWeight(k) * std::sqrt(x * y);
  const double three_term = x + y + cross;

  const double power_lhs = std::pow(lhs, inv_k);
  const double xr = std::pow(x, inv_k);
  const double yr = std::pow(y, inv_k);
  const double power_rhs = xr + yr;
  const double power_rhs_raised = std::pow(power_rhs, static_cast<double>(k));

  return BoundReportBuilder("main_bounds", tol)
      .Link("power_form", power_lhs, power_rhs, {xr, yr})
      .Link("three_term_form", lhs, three_term, {x, y, cross})
      .Link("power_dominates", power_rhs_raised, three_term, {x, y, cross})
      .Statement(lhs, {three_term})
      .Build();
}

BoundReport MainBounds(const ComplexMatrix& a, const ComplexMatrix& b,
                       const IndexSequence& index, double tol) {
  return MainBounds(PsdPairSpectra::From(a, b), index, tol);
}

BoundReport HeadTailPower(const PsdPairSpectra& s, std::size_t k, double tol) {
  RequireK(k, s.n());
  const double inv_k = 1.0 / static_cast<double>(k);
  const double lhs = std::pow(Prod(Prefix(s.sum, k)), inv_k);
  const double ra = std::pow(Prod(Prefix(s.a, k)), inv_k);
  const double rb = std::pow(Prod(Smallest(s.b, k)), inv_k);
  return BoundReportBuilder("head_tail_power", tol)
      .Link("head_root", lhs, ra + rb, {ra, rb})
      .Statement(lhs, {ra + rb})
      .Build();
}

BoundReport HeadTailPower(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                          double tol) {
  return HeadTailPower(PsdPairSpectra::From(a, b), k, tol);
}

BoundReport PairwiseBound(const PsdPairSpectra& s, std::size_t i, std::size_t j,
                          double tol) {
  const std::size_t n = s.n();
  if (!(1 <= i && i < j && j <= n)) {
    throw Error(ErrorCode::kBadIndices, "need 1 <= i < j <= n, got i=" + std::to_string(i) +
                                            " j=" + std::to_string(j) +
                                            " n=" + std::to_string(n));
  }
  const double lhs = s.sum[i - 1] * s.sum[j - 1];
  const double pa = s.a[i - 1] * s.a[j - 1];
  const double pb = s.b[n - 2] * s.b[n - 1];
  const double cross = 2.0 * std::sqrt(pa * pb);
  const double rhs = pa + pb + cross;
  return BoundReportBuilder("pairwise_bound", tol)
      .Link("pair", lhs, rhs, {pa, pb, cross})
      .Statement(lhs, {rhs})
      .Build();
}

BoundReport PairwiseBound(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t i,
                          std::size_t j, double tol) {
  return PairwiseBound(PsdPairSpectra::From(a, b), i, j, tol);
}

BoundReport TailChain(const PsdPairSpectra& s, std::size_t k, double tol) {
  const std::size_t n = s.n();
  RequireK(k, n);
  const double w = CrossTermWeight(k);

  const auto tail_a = Suffix(s.a, n - k + 1);
  const auto tail_b = Suffix(s.b, n - k + 1);
  const double tail_lhs = Prod(Suffix(s.sum, n - k + 1));
  const double tail_mid = Prod(Elementwise(tail_a, tail_b, Add));
  const double ta = Prod(tail_a);
  const double tb = Prod(tail_b);
  const double tail_cross = w * std::sqrt(Prod(Elementwise(tail_a, tail_b, Mul)));
  const double tail_low = ta + tb + tail_cross;

  const auto head_a = Prefix(s.a, k);
  const auto small_b = Smallest(s.b, k);
  const double head_lhs = Prod(Prefix(s.sum, k));
  const double ha = Prod(head_a);
  const double hb = Prod(small_b);
  const double head_cross = w * std::sqrt(Prod(Elementwise(head_a, small_b, Mul)));
  const double head_rhs = ha + hb + head_cross;

  return BoundReportBuilder("tail_chain", tol)
      .Link("tail_sum", tail_lhs, tail_mid)
      .Link("tail_three_term", tail_mid, tail_low, {ta, tb, tail_cross})
      .Link("head_three_term", head_lhs, head_rhs, {ha, hb, head_cross})
      .Statement(tail_lhs, {tail_mid, tail_low})
      .Build();
}

BoundReport TailChain(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                      double tol) {
  return TailChain(PsdPairSpectra::From(a, b), k, tol);
}

}  // namespace logmaj
