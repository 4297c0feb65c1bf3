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

#include <benchmark/benchmark.h>

#include "logmaj/campaign.hpp"
#include "logmaj/decompositions.hpp"
#include "logmaj/generators.hpp"

namespace logmaj {
namespace {

ComplexMatrix Hermitian(std::size_t n) {
  Rng rng(n);
  return GaussianMatrix(n, n, Field::kComplex, rng).hermitian_part();
}

void BM_HermitianEig(benchmark::State& state) {
  const ComplexMatrix a = Hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(HermitianEig(a));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(4, 64);

void BM_SingularValues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(n);
  const ComplexMatrix a = GaussianMatrix(n, n, Field::kComplex, rng);
  for (auto _ : state) benchmark::DoNotOptimize(SingularValues(a));
}
BENCHMARK(BM_SingularValues)->RangeMultiplier(2)->Range(4, 64);

void BM_GeneralEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(n);
  const ComplexMatrix a = GaussianMatrix(n, n, Field::kComplex, rng);
  for (auto _ : state) benchmark::DoNotOptimize(GeneralEigenvalues(a));
}
BENCHMARK(BM_GeneralEigenvalues)->RangeMultiplier(2)->Range(4, 64);

void BM_Determinant(benchmark::State& state) {
  const ComplexMatrix a = Hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Determinant(a));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 64);

void BM_Trial(benchmark::State& state, const char* check) {
  CampaignConfig cfg = CampaignConfig::Default();
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(RunTrial(cfg, check, n, trial++));
}
BENCHMARK_CAPTURE(BM_Trial, main_bounds, "main_bounds")->DenseRange(2, 8, 3);
BENCHMARK_CAPTURE(BM_Trial, nested_frame_det_bound, "nested_frame_det_bound")->DenseRange(2, 8, 3);
BENCHMARK_CAPTURE(BM_Trial, contraction_main_bound, "contraction_main_bound")->DenseRange(2, 8, 3);
BENCHMARK_CAPTURE(BM_Trial, marcus_bounds, "marcus_bounds")->DenseRange(2, 8, 3);

}  // namespace
}  // namespace logmaj

BENCHMARK_MAIN();
