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

#include "logmaj/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "logmaj/error.hpp"

namespace logmaj {

std::string_view FieldName(Field field) {
  return field == Field::kReal ? "real" : "complex";
}

Field ParseField(std::string_view name) {
  if (name == "real") return Field::kReal;
  if (name == "complex") return Field::kComplex;
  throw Error(ErrorCode::kBadConfig, "unknown field '" + std::string(name) + "'");
}

std::string_view SpectrumModeName(SpectrumMode mode) {
  switch (mode) {
    case SpectrumMode::kUniform: return "uniform";
    case SpectrumMode::kClustered: return "clustered";
    case SpectrumMode::kRankDeficient: return "rank-deficient";
    case SpectrumMode::kPrescribed: return "prescribed";
  }
  return "unknown";
}

void GenConfig::Validate() const {
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorCode::kBadConfig, "n = " + std::to_string(n) + " outside 1..64");
  }
  if (!(contraction_margin > 0.0 && contraction_margin < 1.0)) {
    throw Error(ErrorCode::kBadConfig, "contraction margin must lie in (0, 1)");
  }
  if (spectrum_mode == SpectrumMode::kPrescribed) {
    if (prescribed.size() != n) {
      throw Error(ErrorCode::kBadSpectrum, "prescribed spectrum needs n values");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(prescribed[i] >= 0.0) || (i > 0 && prescribed[i] > prescribed[i - 1])) {
        throw Error(ErrorCode::kBadSpectrum, "prescribed spectrum must be descending and >= 0");
      }
    }
  }
}

std::vector<double> DrawSpectrum(const GenConfig& cfg, Rng& rng) {
  const std::size_t n = cfg.n;
  std::vector<double> spectrum(n);
  switch (cfg.spectrum_mode) {
    case SpectrumMode::kPrescribed:
      return cfg.prescribed;
    case SpectrumMode::kUniform:
      for (auto& v : spectrum) v = 1.0 - rng.Uniform01();
      break;
    case SpectrumMode::kClustered: {
      const double levels[2] = {1.0 - rng.Uniform01(), 1.0 - rng.Uniform01()};
      for (auto& v : spectrum) v = levels[rng.UniformIndex(2)];
      break;
    }
    case SpectrumMode::kRankDeficient: {
      for (auto& v : spectrum) v = 1.0 - rng.Uniform01();
      std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
      const std::size_t zeros = 1 + rng.UniformIndex(std::max<std::size_t>(1, n / 2));
      for (std::size_t i = n - zeros; i < n; ++i) spectrum[i] = 0.0;
      break;
    }
  }
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return spectrum;
}

ComplexMatrix GaussianMatrix(std::size_t rows, std::size_t cols, Field field, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = rng.ComplexNormal(field == Field::kComplex);
  return m;
}

bool OrthonormalizeColumns(ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double original = 0.0;
    for (std::size_t r = 0; r < rows; ++r) original += std::norm(m(r, j));
    original = std::sqrt(original);
    if (original == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < rows; ++r) dot += std::conj(m(r, i)) * m(r, j);
        for (std::size_t r = 0; r < rows; ++r) m(r, j) -= dot * m(r, i);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) norm += std::norm(m(r, j));
    norm = std::sqrt(norm);
    if (norm < 1e-8 * original) return false;
    for (std::size_t r = 0; r < rows; ++r) m(r, j) /= norm;
  }
  return true;
}

namespace {

ComplexMatrix RandomUnitary(std::size_t n, Field field, Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix u = GaussianMatrix(n, n, field, rng);
    if (OrthonormalizeColumns(u)) return u;
  }
  throw Error(ErrorCode::kDegenerateDraw, "could not orthonormalize a Gaussian draw");
}

}  // namespace

ComplexMatrix RandomPsd(const GenConfig& cfg) {
  cfg.Validate();
  Rng rng(cfg.seed);
  const auto spectrum = DrawSpectrum(cfg, rng);
  const ComplexMatrix u = RandomUnitary(cfg.n, cfg.field, rng);
  ComplexMatrix scaled = u;
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = 0; j < cfg.n; ++j) scaled(i, j) *= spectrum[j];
  return (scaled * u.adjoint()).hermitian_part();
}

ComplexMatrix RandomStrictContraction(const GenConfig& cfg) {
  cfg.Validate();
  Rng rng(cfg.seed);
  ComplexMatrix g = GaussianMatrix(cfg.n, cfg.n, cfg.field, rng);
  const double target = (1.0 - cfg.contraction_margin) * (1.0 - rng.Uniform01());
  const double sigma = SingularValues(g).front();
  if (sigma == 0.0) return g;
  // Guard the last ulp so the output never exceeds the target.
  g *= target / sigma * (1.0 - 1e-15);
  return g;
}

ComplexMatrix RandomSquare(const GenConfig& cfg) {
  cfg.Validate();
  Rng rng(cfg.seed);
  ComplexMatrix g = GaussianMatrix(cfg.n, cfg.n, cfg.field, rng);
  g *= std::exp(rng.Uniform(-1.5, 1.5)) / std::sqrt(static_cast<double>(cfg.n));
  return g;
}

ComplexMatrix RandomPartialIsometry(std::size_t n, std::size_t k, std::uint64_t seed,
                                    Field field) {
  if (k < 1 || k > n || n > kMaxDimension) {
    throw Error(ErrorCode::kBadConfig, "need 1 <= k <= n <= 64");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix u = GaussianMatrix(n, k, field, rng);
    if (OrthonormalizeColumns(u)) return u;
  }
  throw Error(ErrorCode::kDegenerateDraw, "could not orthonormalize a Gaussian draw");
}

ComplexMatrix RandomPatternedIsometry(std::size_t n, std::size_t k, std::size_t m,
                                      std::uint64_t seed, Field field) {
  if (m < 1 || m > n) {
    throw Error(ErrorCode::kInfeasiblePattern,
                "m = " + std::to_string(m) + " outside 1..n");
  }
  if (k < 1 || k > n || n > kMaxDimension) {
    throw Error(ErrorCode::kBadConfig, "need 1 <= k <= n <= 64");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix u = GaussianMatrix(n, k, field, rng);
    for (std::size_t r = m; r < n; ++r) u(r, 0) = 0.0;
    // Column 1 is only normalized, so its zero pattern survives exactly.
    if (OrthonormalizeColumns(u)) return u;
  }
  throw Error(ErrorCode::kDegenerateDraw, "could not orthonormalize a patterned draw");
}

ComplexMatrix NestedFrame(const SpectralDecomposition& decomposition,
                          const IndexSequence& index, std::uint64_t seed, Field field) {
  const std::size_t n = decomposition.dimension();
  if (index.n() != n) throw Error(ErrorCode::kIndexOutOfRange, "index dimension mismatch");
  const std::size_t k = index.size();
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix coeff(n, k);
    for (std::size_t t = 1; t <= k; ++t)
      for (std::size_t r = 0; r < index.at(t); ++r)
        coeff(r, t - 1) = rng.ComplexNormal(field == Field::kComplex);
    // Gram-Schmidt keeps column t inside the leading i_t coordinates because
    // every earlier column lives in a smaller leading block.
    if (OrthonormalizeColumns(coeff)) return decomposition.frame * coeff;
  }
  throw Error(ErrorCode::kDegenerateDraw, "nested frame draw kept collapsing");
}

ComplexMatrix CanonicalFrame(const SpectralDecomposition& decomposition,
                             const IndexSequence& index) {
  const std::size_t n = decomposition.dimension();
  if (index.n() != n) throw Error(ErrorCode::kIndexOutOfRange, "index dimension mismatch");
  ComplexMatrix out(n, index.size());
  for (std::size_t t = 1; t <= index.size(); ++t)
    for (std::size_t r = 0; r < n; ++r) out(r, t - 1) = decomposition.frame(r, index.at(t) - 1);
  return out;
}

IndexSequence SampleIndexSequence(std::size_t n, Rng& rng) {
  const std::size_t k = 1 + rng.UniformIndex(n);
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.UniformIndex(n - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::size_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(chosen.begin(), chosen.end());
  return IndexSequence(n, std::move(chosen));
}

}  // namespace logmaj
