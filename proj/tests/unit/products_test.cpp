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

#include <cmath>

#include "logmaj/error.hpp"
#include "logmaj/rng.hpp"
#include "logmaj/spectral_products.hpp"
#include "oracles.hpp"

namespace logmaj {
namespace {

TEST(IndexSequenceTest, Validation) {
  EXPECT_NO_THROW(IndexSequence(3, {1, 3}));
  for (auto bad : {std::vector<std::size_t>{}, {0, 1}, {2, 2}, {3, 1}, {1, 4}}) {
    try {
      IndexSequence(3, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
    }
  }
}

TEST(IndexSequenceTest, HeadTailRange) {
  EXPECT_EQ(IndexSequence::Head(5, 2), IndexSequence(5, {1, 2}));
  EXPECT_EQ(IndexSequence::Tail(5, 2), IndexSequence(5, {4, 5}));
  EXPECT_EQ(IndexSequence::Range(5, 2, 4), IndexSequence(5, {2, 3, 4}));
  EXPECT_EQ(IndexSequence(5, {2, 4}).at(2), 4u);
}

TEST(IndexSequenceTest, AllSequencesEnumeratesEverySubset) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto all = AllIndexSequences(n);
    EXPECT_EQ(all.size(), (std::size_t{1} << n) - 1);
    for (std::size_t i = 1; i < all.size(); ++i) {
      EXPECT_LE(all[i - 1].size(), all[i].size());
      EXPECT_NE(all[i - 1], all[i]);
    }
  }
}

TEST(IndexedProductTest, HandExamples) {
  const std::vector<double> v{5, 3, 2};
  EXPECT_DOUBLE_EQ(IndexedProduct(v, IndexSequence(3, {1, 3})), 10.0);
  EXPECT_DOUBLE_EQ(IndexedProduct(std::vector<double>{4, 1}, IndexSequence(2, {2})), 1.0);
  const std::vector<double> z{5, 0, 2};
  EXPECT_EQ(IndexedProduct(z, IndexSequence(3, {2, 3})), 0.0);
  EXPECT_TRUE(IndexedLogProduct(z, IndexSequence(3, {1, 2})).zero);
  EXPECT_FALSE(IndexedLogProduct(z, IndexSequence(3, {1, 3})).zero);
}

TEST(IndexedProductTest, DimensionMismatchRejected) {
  const std::vector<double> v{1, 2};
  EXPECT_THROW(IndexedProduct(v, IndexSequence(3, {1})), Error);
}

TEST(IndexedProductTest, LogDomainAgreesWithDirect) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.UniformIndex(10);
    std::vector<double> v(n);
    for (auto& x : v) x = std::exp(rng.Uniform(-5, 5));
    const IndexSequence idx = AllIndexSequences(std::min<std::size_t>(n, 6)).back();
    const IndexSequence lifted(n, {idx.indices().begin(), idx.indices().end()});
    const double direct = oracle::Select(v, {lifted.indices().begin(), lifted.indices().end()});
    const LogProduct lp = IndexedLogProduct(v, lifted);
    EXPECT_FALSE(lp.zero);
    EXPECT_NEAR(lp.value() / direct, 1.0, 1e-12);
    EXPECT_NEAR(IndexedProduct(v, lifted) / direct, 1.0, 1e-12);
  }
}

TEST(IndexedProductTest, LogDomainAvoidsUnderflow) {
  const std::vector<double> v(64, 1e-10);
  const LogProduct lp = LogProductOf(v);
  EXPECT_FALSE(lp.zero);
  EXPECT_NEAR(lp.log_magnitude, 64 * std::log(1e-10), 1e-9);
}

TEST(TailHeadProductTest, HandExamples) {
  const std::vector<double> v{3, 2, 1};
  EXPECT_DOUBLE_EQ(TailProduct(v, 2), 2.0);
  EXPECT_DOUBLE_EQ(HeadProduct(v, 2), 6.0);
  EXPECT_DOUBLE_EQ(TailProduct(v, 3), 6.0);
  EXPECT_DOUBLE_EQ(HeadProduct(v, 3), 6.0);
  const std::vector<double> ones(7, 1.0);
  for (std::size_t k = 1; k <= 7; ++k) {
    EXPECT_EQ(TailProduct(ones, k), 1.0);
    EXPECT_EQ(HeadProduct(ones, k), 1.0);
  }
  EXPECT_THROW(TailProduct(v, 0), Error);
  EXPECT_THROW(HeadProduct(v, 4), Error);
}

TEST(TailHeadProductTest, AgreeWithIndexedProduct) {
  const std::vector<double> v{9, 4, 2.5, 1, 0.5};
  for (std::size_t k = 1; k <= 5; ++k) {
    EXPECT_DOUBLE_EQ(TailProduct(v, k), IndexedProduct(v, IndexSequence::Tail(5, k)));
    EXPECT_DOUBLE_EQ(HeadProduct(v, k), IndexedProduct(v, IndexSequence::Head(5, k)));
  }
}

TEST(ClampNegligibleTest, ZeroesTinyValues) {
  const auto c = ClampNegligible({2.0, 1e-13, -1e-14});
  EXPECT_EQ(c, (std::vector<double>{2.0, 0.0, 0.0}));
  EXPECT_EQ(ClampNegligible({1.0, 1e-11}), (std::vector<double>{1.0, 1e-11}));
}

}  // namespace
}  // namespace logmaj
