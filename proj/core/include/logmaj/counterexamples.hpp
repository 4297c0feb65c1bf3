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

#ifndef LOGMAJ_COUNTEREXAMPLES_HPP_
#define LOGMAJ_COUNTEREXAMPLES_HPP_

#include "logmaj/complex_matrix.hpp"
#include "logmaj/report.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

/// Tempting but false: prod lambda_{i_t}(A+B) >= prod [lambda_{i_t}(A) + lambda_{n-t+1}(B)].
BoundReport PairedSumBound(const ComplexMatrix& a, const ComplexMatrix& b,
                           const IndexSequence& index, double tol = kDefaultBoundTolerance);

/// Tempting but false: prod_{t<=k} lambda_t(A+B) >= prod_{t<=k} [lambda_t(A) + lambda_t(B)].
BoundReport HeadSumBound(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                         double tol = kDefaultBoundTolerance);

/// Always true: lambda_i(A+B) >= lambda_i(A) + lambda_n(B), one link per i.
BoundReport WeylSumFallback(const ComplexMatrix& a, const ComplexMatrix& b,
                            double tol = kDefaultBoundTolerance);

/// Fixed-instance reproductions of the two false strengthenings and the
/// fallback that does hold.
struct CounterexampleReport {
  /// A = B = diag(1, 0), I = {1, 2}: lhs 0, rhs 1, not satisfied.
  BoundReport paired_sum;
  /// A = diag(1, 0), B = diag(0, 1), k = 1: lambda_1(A+B) = 1 < 2.
  BoundReport head_sum;
  /// Same A, B as head_sum.
  BoundReport fallback;

  /// Both counterexamples violate and the fallback holds.
  bool confirmed() const noexcept {
    return !paired_sum.satisfied && !head_sum.satisfied && fallback.satisfied;
  }
};

CounterexampleReport ReproduceCounterexamples();

}  // namespace logmaj

#endif  // LOGMAJ_COUNTEREXAMPLES_HPP_
