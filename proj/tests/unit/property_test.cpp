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

// Invariants that must hold on every random instance.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "logmaj/contraction_bounds.hpp"
#include "logmaj/decompositions.hpp"
#include "logmaj/generators.hpp"
#include "logmaj/psd_bounds.hpp"
#include "logmaj/report.hpp"
#include "oracles.hpp"

namespace logmaj {
namespace {

constexpr int kDraws = 200;

GenConfig Gen(std::uint64_t seed, std::size_t n) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.n = n;
  cfg.spectrum_mode = static_cast<SpectrumMode>(seed % 3);
  return cfg;
}

void ExpectReportInvariants(const BoundReport& r) {
  ASSERT_FALSE(r.links.empty());
  double margin = INFINITY, scale = 1.0;
  for (const auto& l : r.links) {
    margin = std::min(margin, l.margin());
    scale = std::max(scale, l.scale);
    EXPECT_GE(l.scale, std::max({1.0, std::abs(l.greater), std::abs(l.lesser)}));
  }
  scale = std::max(scale, std::abs(r.lhs));
  for (double t : r.rhs_terms) scale = std::max(scale, std::abs(t));
  EXPECT_EQ(r.margin, margin);
  EXPECT_EQ(r.scale, scale);
  EXPECT_GE(r.scale, std::max(1.0, std::abs(r.lhs)));
  for (double t : r.rhs_terms) EXPECT_GE(r.scale, std::abs(t));
  EXPECT_EQ(r.satisfied, r.margin >= -r.tolerance * r.scale);
}

TEST(ReportPropertyTest, SatisfiedIffMarginWithinTolerance) {
  for (double tol : {0.0, 1e-9, 1e-3}) {
    const auto r = BoundReportBuilder("t", tol)
                       .Link("a", 10.0, 10.0 + 5e-9)
                       .Link("b", 3.0, 1.0)
                       .Statement(10.0, {10.0 + 5e-9})
                       .Build();
    ExpectReportInvariants(r);
    EXPECT_EQ(r.satisfied, tol > 0.0);
  }
  const auto nan = BoundReportBuilder("t", 1.0).Link("x", NAN, 1.0).Build();
  EXPECT_FALSE(nan.satisfied);
  EXPECT_TRUE(std::isnan(nan.margin));
}

TEST(ReportPropertyTest, IdentityReport) {
  EXPECT_TRUE(MakeIdentityReport("i", 1e-10, 0.5, 1e-10).satisfied);
  EXPECT_FALSE(MakeIdentityReport("i", 2e-10, 0.5, 1e-10).satisfied);
  EXPECT_FALSE(MakeIdentityReport("i", NAN, 0.5, 1e-10).satisfied);
}

TEST(ReportPropertyTest, RandomReportsRespectInvariants) {
  for (std::uint64_t s = 0; s < kDraws; ++s) {
    const std::size_t n = 1 + s % 6;
    const ComplexMatrix a = RandomPsd(Gen(s, n)), b = RandomPsd(Gen(s + 5000, n));
    const IndexSequence idx = IndexSequence::Range(n, 1 + s % n, n);
    ExpectReportInvariants(MainBounds(a, b, idx));
    ExpectReportInvariants(TailChain(a, b, idx.size()));
    ExpectReportInvariants(LidskiiProduct(a, b, idx));
    GenConfig c = Gen(s, n);
    const ComplexMatrix x = RandomStrictContraction(c);
    c.seed += 1;
    const ComplexMatrix y = RandomStrictContraction(c);
    ExpectReportInvariants(ContractionMainBound(x, y, idx));
    ExpectReportInvariants(ReversalDet(x, y));
  }
}

TEST(LinalgPropertyTest, SingularValuesOfPsdEqualEigenvalues) {
  for (std::uint64_t s = 0; s < kDraws; ++s) {
    const ComplexMatrix a = RandomPsd(Gen(s, 1 + s % 12));
    const auto sv = SingularValues(a);
    const auto ev = HermitianEigenvalues(a);
    for (std::size_t i = 0; i < sv.size(); ++i) EXPECT_NEAR(sv[i], ev[i], 1e-9 * std::max(1.0, ev[0]));
  }
}

TEST(LinalgPropertyTest, DeterminantOfSumMatchesEigenvalueProduct) {
  for (std::uint64_t s = 0; s < kDraws; ++s) {
    const std::size_t n = 1 + s % 10;
    const ComplexMatrix m = RandomPsd(Gen(s, n)) + RandomPsd(Gen(s + 1, n));
    double p = 1;
    for (double x : HermitianEigenvalues(m)) p *= x;
    EXPECT_LE(std::abs(Determinant(m) - p), 1e-9 * std::max(1.0, std::abs(p)));
  }
}

TEST(LinalgPropertyTest, DeterminantIsMultiplicativeOnBlockTriangular) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix p = GaussianMatrix(3, 3, Field::kComplex, rng);
    const ComplexMatrix q = GaussianMatrix(2, 2, Field::kComplex, rng);
    const ComplexMatrix c = GaussianMatrix(3, 2, Field::kComplex, rng);
    ComplexMatrix m(5, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = p(i, j);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, 3 + j) = c(i, j);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(3 + i, 3 + j) = q(i, j);
    const Complex want = Determinant(p) * Determinant(q);
    EXPECT_LE(std::abs(Determinant(m) - want), 1e-11 * std::max(1.0, std::abs(want)));
  }
}

TEST(LinalgPropertyTest, EigendecompositionInvariants) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.UniformIndex(24);
    const ComplexMatrix a = GaussianMatrix(n, n, Field::kComplex, rng).hermitian_part();
    const auto d = HermitianEig(a);
    EXPECT_TRUE(std::is_sorted(d.eigenvalues.rbegin(), d.eigenvalues.rend()));
    EXPECT_LE(OrthonormalityResidual(d.frame), 1e-12);
    EXPECT_LE(MaxAbsDifference(d.Reconstruct(), a), 1e-11 * (1 + a.max_abs()));
  }
}

TEST(WeylPropertyTest, HoldsForArbitrarySquares) {
  for (std::uint64_t s = 0; s < kDraws; ++s) {
    const std::size_t n = 1 + s % 8;
    const ComplexMatrix m = RandomSquare(Gen(s, n));
    for (std::size_t k = 1; k <= n; ++k) {
      const auto w = WeylTail(m, k);
      EXPECT_LE(w.singular, w.eigen + 1e-9 * std::max(1.0, w.eigen)) << "seed " << s << " k " << k;
    }
  }
}

TEST(TailChainPropertyTest, LiteralChainAndNonnegativeCrossTerm) {
  for (std::uint64_t s = 0; s < kDraws; ++s) {
    const std::size_t n = 1 + s % 7;
    const auto r = TailChain(RandomPsd(Gen(s, n)), RandomPsd(Gen(s + 9, n)), 1 + s % n);
    EXPECT_GE(r.link("tail_sum").margin(), -1e-9 * r.scale);
    EXPECT_GE(r.link("tail_three_term").margin(), -1e-9 * r.scale);
    // The last addend of the three-term side is the weighted cross term.
    EXPECT_EQ(r.rhs_terms.size(), 2u);
    EXPECT_GE(CrossTermWeight(1 + s % n), 0.0);
  }
}

TEST(ScalarProductPropertyTest, HoldsOnRandomSequences) {
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.UniformIndex(10);
    std::vector<double> a(n), b(n);
    for (std::size_t t = 0; t < n; ++t) {
      a[t] = rng.Uniform(0, 3);
      b[t] = rng.Uniform(0, 3);
    }
    const auto r = ScalarProductBound(a, b);
    EXPECT_TRUE(r.satisfied);
    ExpectReportInvariants(r);
  }
}

}  // namespace
}  // namespace logmaj
