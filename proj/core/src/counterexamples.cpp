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

#include "logmaj/counterexamples.hpp"

#include <string>

#include "logmaj/psd_bounds.hpp"
#include "product_helpers.hpp"

namespace logmaj {

using internal::Prod;

BoundReport PairedSumBound(const ComplexMatrix& a, const ComplexMatrix& b,
                           const IndexSequence& index, double tol) {
  const auto s = PsdPairSpectra::From(a, b);
  const std::size_t n = s.n();
  std::vector<double> sum_sel, paired;
  for (std::size_t t = 1; t <= index.size(); ++t) {
    sum_sel.push_back(s.sum[index.at(t) - 1]);
    paired.push_back(s.a[index.at(t) - 1] + s.b[n - t]);
  }
  const double lhs = Prod(sum_sel);
  const double rhs = Prod(paired);
  return BoundReportBuilder("paired_sum_bound", tol)
      .Link("paired_sum", lhs, rhs)
      .Statement(lhs, {rhs})
      .Build();
}

BoundReport HeadSumBound(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t k,
                         double tol) {
  const auto s = PsdPairSpectra::From(a, b);
  std::vector<double> head, sums;
  for (std::size_t t = 0; t < k; ++t) {
    head.push_back(s.sum[t]);
    sums.push_back(s.a[t] + s.b[t]);
  }
  const double lhs = Prod(head);
  const double rhs = Prod(sums);
  return BoundReportBuilder("head_sum_bound", tol)
      .Link("head_sum", lhs, rhs)
      .Statement(lhs, {rhs})
      .Build();
}

BoundReport WeylSumFallback(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  const auto s = PsdPairSpectra::From(a, b);
  const std::size_t n = s.n();
  BoundReportBuilder builder("weyl_sum_fallback", tol);
  for (std::size_t i = 0; i < n; ++i) {
    builder.Link("i=" + std::to_string(i + 1), s.sum[i], s.a[i] + s.b[n - 1]);
  }
  builder.Statement(s.sum[0], {s.a[0] + s.b[n - 1]});
  return std::move(builder).Build();
}

CounterexampleReport ReproduceCounterexamples() {
  const ComplexMatrix e11 = ComplexMatrix::Diagonal({1.0, 0.0});
  const ComplexMatrix e22 = ComplexMatrix::Diagonal({0.0, 1.0});
  return {PairedSumBound(e11, e11, IndexSequence(2, {1, 2})), HeadSumBound(e11, e22, 1),
          WeylSumFallback(e11, e22)};
}

}  // namespace logmaj
