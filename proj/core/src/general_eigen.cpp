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

#include <cmath>
#include <limits>
#include <string>

#include "logmaj/decompositions.hpp"
#include "logmaj/error.hpp"

namespace logmaj {

namespace {

void ReduceToHessenberg(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm_sq = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm_sq += std::norm(h(i, k));
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * norm;

    double v_norm_sq = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = h(i, k) - (i == k + 1 ? alpha : Complex(0.0));
      v_norm_sq += std::norm(v[i]);
    }
    if (v_norm_sq == 0.0) continue;
    const double inv = 1.0 / std::sqrt(v_norm_sq);
    for (std::size_t i = k + 1; i < n; ++i) v[i] *= inv;

    // H <- (I - 2 v v*) H
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      s *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * s;
    }
    // H <- H (I - 2 v v*)
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

struct Givens {
  double c;
  Complex s;
};

// G = [c s; -conj(s) c] maps (a, b) to (r, 0).
Givens MakeGivens(Complex a, Complex b) {
  const double abs_a = std::abs(a);
  const double r = std::hypot(abs_a, std::abs(b));
  if (r == 0.0) return {1.0, 0.0};
  if (abs_a == 0.0) return {0.0, 1.0};
  return {abs_a / r, (a / abs_a) * std::conj(b) / r};
}

Complex WilkinsonShift(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_diff = 0.5 * (a - d);
  const Complex disc = std::sqrt(half_diff * half_diff + b * c);
  const Complex mean = 0.5 * (a + d);
  const Complex mu1 = mean + disc;
  const Complex mu2 = mean - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

}  // namespace

std::vector<Complex> GeneralEigenvalues(const ComplexMatrix& a) {
  if (!a.square() || a.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "GeneralEigenvalues needs a square matrix");
  }
  const std::size_t n = a.rows();
  if (n > kMaxDimension) {
    throw Error(ErrorCode::kDimensionTooLarge, "dimension " + std::to_string(n));
  }
  ComplexMatrix h = a;
  ReduceToHessenberg(h);

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double h_norm = h.frobenius_norm();
  std::vector<Complex> eig(n);
  std::vector<Givens> rotations(n);
  const int max_iterations = 60 * static_cast<int>(n) + 60;
  int total_iterations = 0;
  int since_deflation = 0;

  std::size_t hi = n - 1;
  while (true) {
    // Find the start of the active unreduced block ending at hi.
    std::size_t lo = hi;
    while (lo > 0) {
      double local = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (local == 0.0) local = h_norm;
      if (std::abs(h(lo, lo - 1)) <= kEps * local) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      since_deflation = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    if (++total_iterations > max_iterations) {
      throw Error(ErrorCode::kNoConvergence, "QR iteration did not converge");
    }
    ++since_deflation;

    Complex mu;
    if (since_deflation % 11 == 0) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + Complex(0.75, 0.5) * std::abs(h(hi, hi - 1));
    } else {
      mu = WilkinsonShift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = MakeGivens(h(k, k), h(k + 1, k));
      rotations[k] = g;
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex x = h(k, j);
        const Complex y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens& g = rotations[k];
      const std::size_t row_end = std::min(k + 1, hi);
      for (std::size_t i = lo; i <= row_end; ++i) {
        const Complex x = h(i, k);
        const Complex y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
  }
  return eig;
}

}  // namespace logmaj
