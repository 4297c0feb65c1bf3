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

#ifndef LOGMAJ_GENERATORS_HPP_
#define LOGMAJ_GENERATORS_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "logmaj/complex_matrix.hpp"
#include "logmaj/decompositions.hpp"
#include "logmaj/rng.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

enum class Field { kReal, kComplex };

enum class SpectrumMode { kUniform, kClustered, kRankDeficient, kPrescribed };

std::string_view FieldName(Field field);
Field ParseField(std::string_view name);
std::string_view SpectrumModeName(SpectrumMode mode);

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n = 1;
  Field field = Field::kComplex;
  /// delta in (0, 1); strict contractions have sigma_1 <= 1 - delta.
  double contraction_margin = 0.05;
  SpectrumMode spectrum_mode = SpectrumMode::kUniform;
  /// Used with SpectrumMode::kPrescribed; descending and nonnegative.
  std::vector<double> prescribed;

  /// Throws kBadConfig or kBadSpectrum.
  void Validate() const;
};

/// Descending nonnegative spectrum for cfg.spectrum_mode.
///  uniform:        i.i.d. values in (0, 1]
///  clustered:      values drawn from two levels, with exact repeats
///  rank-deficient: uniform with at least one exact zero
std::vector<double> DrawSpectrum(const GenConfig& cfg, Rng& rng);

/// n x cols matrix of independent (complex) standard normals.
ComplexMatrix GaussianMatrix(std::size_t rows, std::size_t cols, Field field, Rng& rng);

/// Orthonormalizes the columns in place with two passes of classical
/// Gram-Schmidt. Returns false when a column collapses below 1e-8 of its
/// original norm.
bool OrthonormalizeColumns(ComplexMatrix& m);

/// U diag(spectrum) U* with U from an orthonormalized Gaussian matrix.
/// Identical (seed, cfg) gives identical bits.
ComplexMatrix RandomPsd(const GenConfig& cfg);

/// Gaussian matrix rescaled so that sigma_1 = (1 - delta) u, u uniform in (0, 1].
ComplexMatrix RandomStrictContraction(const GenConfig& cfg);

/// Gaussian matrix scaled by a log-uniform factor in [e^-1.5, e^1.5] / sqrt(n);
/// for checks that take arbitrary square matrices.
ComplexMatrix RandomSquare(const GenConfig& cfg);

/// n x k partial isometry.
ComplexMatrix RandomPartialIsometry(std::size_t n, std::size_t k, std::uint64_t seed,
                                    Field field = Field::kComplex);

/// n x k partial isometry whose first column vanishes below row m.
/// Throws kInfeasiblePattern unless 1 <= m <= n, and kBadConfig unless 1 <= k <= n.
ComplexMatrix RandomPatternedIsometry(std::size_t n, std::size_t k, std::size_t m,
                                      std::uint64_t seed, Field field = Field::kComplex);

/// Orthonormal x_1..x_k with x_t in span(u_1, ..., u_{i_t}) of the given
/// eigenbasis. Throws kDegenerateDraw after 8 failed draws.
ComplexMatrix NestedFrame(const SpectralDecomposition& decomposition,
                          const IndexSequence& index, std::uint64_t seed,
                          Field field = Field::kComplex);

/// The eigenvector columns u_{i_1}, ..., u_{i_k} themselves.
ComplexMatrix CanonicalFrame(const SpectralDecomposition& decomposition,
                             const IndexSequence& index);

/// Size uniform in 1..n, then a uniformly random subset of that size.
IndexSequence SampleIndexSequence(std::size_t n, Rng& rng);

}  // namespace logmaj

#endif  // LOGMAJ_GENERATORS_HPP_
