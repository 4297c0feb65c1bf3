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

#include <gtest/gtest.h>

#include "logmaj/decompositions.hpp"
#include "logmaj/error.hpp"
#include "logmaj/frame_bounds.hpp"
#include "logmaj/generators.hpp"
#include "oracles.hpp"

namespace logmaj {
namespace {

ComplexMatrix Columns(std::size_t n, std::initializer_list<std::size_t> unit_rows) {
  ComplexMatrix u(n, unit_rows.size());
  std::size_t c = 0;
  for (std::size_t r : unit_rows) u(r - 1, c++) = 1.0;
  return u;
}

TEST(PartialIsometryReductionTest, HandExamples) {
  const std::vector<double> lambdas{3, 2, 1};
  // U* D U = diag(3, 1); V* D_2 V = [1]; lambda_2 = 2.
  auto r = PartialIsometryReduction(lambdas, Columns(3, {1, 3}), 2);
  EXPECT_DOUBLE_EQ(r.link("reduction").greater, 3.0);
  EXPECT_DOUBLE_EQ(r.link("reduction").lesser, 2.0);
  EXPECT_TRUE(r.satisfied);

  r = PartialIsometryReduction(lambdas, Columns(3, {1}), 1);
  EXPECT_DOUBLE_EQ(r.link("reduction").greater, 3.0);
  EXPECT_DOUBLE_EQ(r.link("reduction").lesser, 3.0);
  EXPECT_EQ(r.margin, 0.0);
}

TEST(PartialIsometryReductionTest, Errors) {
  const std::vector<double> lambdas{3, 2, 1};
  try {
    PartialIsometryReduction(lambdas, Columns(3, {3}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPatternViolated);
  }
  ComplexMatrix not_iso = Columns(3, {1, 2});
  not_iso(0, 1) = 0.5;
  try {
    PartialIsometryReduction(lambdas, not_iso, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPartialIsometry);
  }
  EXPECT_THROW(PartialIsometryReduction(std::vector<double>{1, 2, 3}, Columns(3, {1}), 1), Error);
}

TEST(PartialIsometryReductionTest, OracleDeterminants) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 6;
    const std::size_t k = 1 + seed % n;
    const std::size_t m = 1 + (seed / 3) % n;
    GenConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    Rng rng(seed);
    const auto lambdas = DrawSpectrum(cfg, rng);
    const ComplexMatrix u = RandomPatternedIsometry(n, k, m, seed + 7);
    const ComplexMatrix d = ComplexMatrix::Diagonal(lambdas);
    std::vector<double> flat = lambdas;
    for (std::size_t i = 0; i < m; ++i) flat[i] = lambdas[m - 1];
    const double lhs = std::abs(oracle::Det(u.adjoint() * d * u));
    double rhs = lambdas[m - 1];
    if (k > 1) {
      const ComplexMatrix v = u.columns(1, k - 1);
      rhs *= std::abs(oracle::Det(v.adjoint() * ComplexMatrix::Diagonal(flat) * v));
    }
    const auto r = PartialIsometryReduction(lambdas, u, m);
    EXPECT_TRUE(oracle::Near(r.link("reduction").greater, lhs, 1e-10));
    EXPECT_TRUE(oracle::Near(r.link("reduction").lesser, rhs, 1e-10));
    EXPECT_TRUE(r.satisfied);
  }
}

TEST(NestedFrameDetBoundTest, EigenvectorFrameGivesEquality) {
  GenConfig cfg;
  cfg.n = 5;
  cfg.seed = 21;
  const auto d = HermitianEig(RandomPsd(cfg));
  for (const auto& idx : AllIndexSequences(5)) {
    const auto r = NestedFrameDetBound(d, idx, CanonicalFrame(d, idx));
    EXPECT_NEAR(r.margin, 0.0, 1e-12 * r.scale);
    EXPECT_TRUE(r.satisfied);
  }
}

TEST(NestedFrameDetBoundTest, IdentityGivesOne) {
  const auto d = HermitianEig(ComplexMatrix::Identity(4));
  const IndexSequence idx(4, {2, 4});
  const auto r = NestedFrameDetBound(d, idx, NestedFrame(d, idx, 5));
  EXPECT_NEAR(r.lhs, 1.0, 1e-12);
  EXPECT_NEAR(r.rhs_terms.front(), 1.0, 1e-15);
}

TEST(NestedFrameDetBoundTest, Errors) {
  const ComplexMatrix a = ComplexMatrix::Diagonal({3, 2, 1});
  try {
    // e_3 is not in the span of the first eigenvector.
    NestedFrameDetBound(a, IndexSequence(3, {1}), Columns(3, {3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFrameNotNested);
  }
  ComplexMatrix f(3, 1);
  f(0, 0) = 2.0;
  try {
    NestedFrameDetBound(a, IndexSequence(3, {1}), f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotOrthonormal);
  }
}

TEST(FanMinDetTest, HandExamples) {
  const auto id = ComplexMatrix::Identity(3);
  auto r = FanMinDet(id, RandomPartialIsometry(3, 2, 1));
  EXPECT_NEAR(r.lhs, 1.0, 1e-13);
  EXPECT_NEAR(r.margin, 0.0, 1e-13);
  r = FanMinDet(ComplexMatrix::Diagonal({3, 1}), Columns(2, {2}));
  EXPECT_EQ(r.link("minimum").greater, 1.0);
  EXPECT_EQ(r.link("minimum").lesser, 1.0);
}

TEST(FanMinDetTest, OracleDeterminantAndSampling) {
  GenConfig cfg;
  cfg.n = 6;
  cfg.seed = 3;
  const ComplexMatrix b = RandomPsd(cfg);
  const auto lam = oracle::Eigenvalues(b);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t k = 1 + s % 6;
    const ComplexMatrix u = RandomPartialIsometry(6, k, s);
    const auto r = FanMinDet(b, u);
    double tail = 1;
    for (std::size_t t = 1; t <= k; ++t) tail *= lam[6 - t];
    EXPECT_TRUE(oracle::Near(r.link("minimum").greater, std::abs(oracle::Det(u.adjoint() * b * u)), 1e-10));
    EXPECT_TRUE(oracle::Near(r.link("minimum").lesser, tail, 1e-10));
    EXPECT_TRUE(r.satisfied);
  }
}

}  // namespace
}  // namespace logmaj
