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

#ifndef LOGMAJ_CAMPAIGN_HPP_
#define LOGMAJ_CAMPAIGN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logmaj/generators.hpp"
#include "logmaj/rng.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

enum class IndexMode {
  kAuto,        // exhaustive for n <= 6, sampled above
  kExhaustive,  // all 2^n - 1 sequences
  kSampled,     // index_samples sequences per trial
};

std::string_view IndexModeName(IndexMode mode);
IndexMode ParseIndexMode(std::string_view name);

inline constexpr std::size_t kExhaustiveIndexLimit = 6;

struct CampaignConfig {
  std::vector<std::string> checks;
  std::vector<std::size_t> dims;
  IndexMode index_mode = IndexMode::kAuto;
  std::size_t index_samples = 32;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 1;
  double tolerance = 1e-9;
  double contraction_margin = 0.05;
  Field field = Field::kComplex;
  std::size_t workers = 1;
  std::string output;

  /// All registered checks, n = 1..8, 1000 trials, tol 1e-9, delta 0.05.
  static CampaignConfig Default();

  /// Throws kUnknownCheck or kBadConfig.
  void Validate() const;

  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

/// Enough to replay one failing evaluation: the instance is regenerated
/// from (master_seed, check, n, trial).
struct Reproduction {
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::vector<std::size_t> index;
  std::string link;
  double value = 0.0;  // margin, or residual for identity checks

  friend bool operator==(const Reproduction&, const Reproduction&) = default;
};

struct TrialFailure {
  std::size_t n = 0;
  std::size_t trial = 0;
  std::string error;

  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

struct CheckRecord {
  std::string name;
  std::size_t trials = 0;
  std::size_t evaluations = 0;
  std::vector<Reproduction> violations;
  std::optional<double> min_margin;
  std::optional<double> min_relative_margin;
  std::optional<double> max_identity_residual;
  std::vector<TrialFailure> failures;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CheckRecord> checks;
  double wall_time_seconds = 0.0;

  std::size_t total_violations() const;
  std::size_t total_failures() const;
  const CheckRecord& check(std::string_view name) const;

  friend bool operator==(const CampaignReport&, const CampaignReport&) = default;
};

/// Trial seed for (master_seed, check, n, trial).
std::uint64_t TrialSeed(std::uint64_t master_seed, std::string_view check, std::size_t n,
                        std::size_t trial);

/// Index sequences evaluated by one trial of an index-sequence check.
std::vector<IndexSequence> TrialIndexSequences(std::size_t n, IndexMode mode,
                                               std::size_t samples, Rng& rng);

/// Result of one (check, n, trial) unit.
struct TrialOutcome {
  std::size_t evaluations = 0;
  std::optional<double> min_margin;
  std::optional<double> min_relative_margin;
  std::optional<double> max_identity_residual;
  std::vector<Reproduction> violations;
  std::optional<std::string> failure;
};

TrialOutcome RunTrial(const CampaignConfig& cfg, std::string_view check, std::size_t n,
                      std::size_t trial);

/// Runs every (check, n, trial) unit on cfg.workers threads and merges in
/// trial order; the result does not depend on the worker count.
CampaignReport RunCampaign(const CampaignConfig& cfg);

}  // namespace logmaj

#endif  // LOGMAJ_CAMPAIGN_HPP_
