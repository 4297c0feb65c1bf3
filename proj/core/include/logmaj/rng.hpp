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

#ifndef LOGMAJ_RNG_HPP_
#define LOGMAJ_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "logmaj/complex_matrix.hpp"

namespace logmaj {

/// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x) noexcept;

/// Child seed for stream `tag` of `parent`. Streams derived from distinct
/// (parent, tag) pairs are independent, which lets trial t of a campaign
/// draw from (master_seed, t) without touching any shared state.
std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t tag) noexcept;

/// FNV-1a, used to turn check names into stream tags.
std::uint64_t HashName(std::string_view name) noexcept;

/// Seeded generator with platform-independent output: Mersenne Twister bits,
/// 53-bit uniforms and Box-Muller normals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix64(seed)) {}

  std::uint64_t NextU64() { return engine_(); }
  /// Uniform on [0, 1).
  double Uniform01();
  /// Uniform on [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  /// Uniform on {0, ..., n-1}; n must be positive.
  std::size_t UniformIndex(std::size_t n);
  double Normal();
  /// Independent standard normal real and imaginary parts; the imaginary part
  /// is zero when `complex_field` is false.
  Complex ComplexNormal(bool complex_field);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace logmaj

#endif  // LOGMAJ_RNG_HPP_
