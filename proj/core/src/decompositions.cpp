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

#include "logmaj/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "logmaj/error.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

namespace {

constexpr int kMaxJacobiSweeps = 100;

void RequireSquare(const ComplexMatrix& a, const char* what) {
  if (!a.square() || a.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " needs a nonempty square matrix");
  }
}

void RequireCap(std::size_t n) {
  if (n > kMaxDimension) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "dimension " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxDimension));
  }
}

// Unitary 2x2 block J (entries pp, pq, qp, qq) with J* [app apq; conj(apq) aqq] J
// diagonal.
struct JacobiRotation {
  Complex pp, pq, qp, qq;
};

JacobiRotation MakeRotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  const Complex phase_conj = std::conj(apq) / mag;
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  return {c, s, -s * phase_conj, c * phase_conj};
}

// M <- M J on columns p, q.
void RotateColumns(ComplexMatrix& m, std::size_t p, std::size_t q, const JacobiRotation& j) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = mp * j.pp + mq * j.qp;
    m(k, q) = mp * j.pq + mq * j.qq;
  }
}

// M <- J* M on rows p, q.
void RotateRows(ComplexMatrix& m, std::size_t p, std::size_t q, const JacobiRotation& j) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = std::conj(j.pp) * mp + std::conj(j.qp) * mq;
    m(q, k) = std::conj(j.pq) * mp + std::conj(j.qq) * mq;
  }
}

double OffDiagonalNorm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

ComplexMatrix SpectralDecomposition::Reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix scaled = frame;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= eigenvalues[j];
  return scaled * frame.adjoint();
}

SpectralDecomposition HermitianEig(const ComplexMatrix& input, double tol) {
  RequireSquare(input, "HermitianEig");
  const std::size_t n = input.rows();
  RequireCap(n);
  const double scale = input.max_abs();
  const double deviation = input.hermitian_deviation();
  if (deviation > tol * (1.0 + scale)) {
    throw Error(ErrorCode::kNotHermitian,
                "max|A - A*| = " + std::to_string(deviation));
  }

  ComplexMatrix a = input.hermitian_part();
  ComplexMatrix v = ComplexMatrix::Identity(n);
  const double threshold = 1e-14 * (1.0 + a.frobenius_norm());

  int sweep = 0;
  while (OffDiagonalNorm(a) > threshold) {
    if (++sweep > kMaxJacobiSweeps) {
      throw Error(ErrorCode::kNoConvergence, "Jacobi sweeps exhausted");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (apq == Complex(0.0)) continue;
        const auto rot = MakeRotation(a(p, p).real(), a(q, q).real(), apq);
        RotateColumns(a, p, q, rot);
        RotateRows(a, p, q, rot);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        RotateColumns(v, p, q, rot);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.frame = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.frame(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> HermitianEigenvalues(const ComplexMatrix& a, double tol) {
  return HermitianEig(a, tol).eigenvalues;
}

std::vector<double> SingularValues(const ComplexMatrix& input) {
  if (input.empty()) throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  RequireCap(std::max(input.rows(), input.cols()));
  // Work on the orientation with at most as many columns as rows.
  ComplexMatrix g = input.cols() <= input.rows() ? input : input.adjoint();
  const std::size_t n = g.cols();
  constexpr double kOrthTol = 1e-15;

  auto column_dot = [&](std::size_t p, std::size_t q) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < g.rows(); ++k) s += std::conj(g(k, p)) * g(k, q);
    return s;
  };

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = column_dot(p, p).real();
        const double beta = column_dot(q, q).real();
        const Complex gamma = column_dot(p, q);
        if (std::abs(gamma) <= kOrthTol * std::sqrt(alpha * beta) ||
            gamma == Complex(0.0)) {
          continue;
        }
        rotated = true;
        RotateColumns(g, p, q, MakeRotation(alpha, beta, gamma));
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < g.rows(); ++k) s += std::norm(g(k, j));
    sigma[j] = std::sqrt(s);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

Complex Determinant(const ComplexMatrix& input) {
  RequireSquare(input, "Determinant");
  ComplexMatrix lu = input;
  const std::size_t n = lu.rows();
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (lu(pivot, col) == Complex(0.0)) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(pivot, j), lu(col, j));
      det = -det;
    }
    const Complex d = lu(col, col);
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / d;
      if (f == Complex(0.0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

ComplexMatrix SolveHermitian(const ComplexMatrix& a, const ComplexMatrix& b) {
  RequireSquare(a, "SolveHermitian");
  if (b.rows() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side rows differ");
  }
  const auto eig = HermitianEigenvalues(a);
  if (!(eig.back() > 1e-10 * eig.front())) {
    throw Error(ErrorCode::kSingularSystem,
                "min eigenvalue " + std::to_string(eig.back()) +
                    " is not positive relative to " + std::to_string(eig.front()));
  }

  const std::size_t n = a.rows();
  const ComplexMatrix h = a.hermitian_part();
  // Cholesky factor, lower triangular.
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = h(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) throw Error(ErrorCode::kSingularSystem, "Cholesky pivot vanished");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = h(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }

  ComplexMatrix x = b;
  for (std::size_t c = 0; c < x.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = x(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, c);
      x(i, c) = s / l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex s = x(i, c);
      for (std::size_t k = i + 1; k < n; ++k) s -= std::conj(l(k, i)) * x(k, c);
      x(i, c) = s / l(i, i);
    }
  }
  return x;
}

ComplexMatrix HermitianSqrt(const ComplexMatrix& a) {
  const auto eig = HermitianEig(a);
  const std::size_t n = eig.dimension();
  ComplexMatrix scaled = eig.frame;
  for (std::size_t j = 0; j < n; ++j) {
    const double r = std::sqrt(std::max(eig.eigenvalues[j], 0.0));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= r;
  }
  return (scaled * eig.frame.adjoint()).hermitian_part();
}

std::vector<double> EigenvalueModuli(const ComplexMatrix& a) {
  const auto eig = GeneralEigenvalues(a);
  std::vector<double> mods(eig.size());
  std::transform(eig.begin(), eig.end(), mods.begin(),
                 [](const Complex& z) { return std::abs(z); });
  std::sort(mods.begin(), mods.end(), std::greater<>());
  return mods;
}

WeylTailProducts WeylTail(const ComplexMatrix& m, std::size_t k) {
  RequireSquare(m, "WeylTail");
  const auto sigma = SingularValues(m);
  const auto mods = EigenvalueModuli(m);
  return {TailProduct(sigma, k), TailProduct(mods, k)};
}

}  // namespace logmaj
