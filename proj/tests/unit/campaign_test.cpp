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
#include <algorithm>
#include <functional>
#include <set>

#include "logmaj/campaign.hpp"
#include "logmaj/campaign_io.hpp"
#include "logmaj/error.hpp"
#include "logmaj/registry.hpp"

namespace logmaj {
namespace {

CampaignConfig Small(std::vector<std::string> checks, std::vector<std::size_t> dims,
                     std::size_t trials) {
  CampaignConfig cfg = CampaignConfig::Default();
  cfg.checks = std::move(checks);
  cfg.dims = std::move(dims);
  cfg.trials = trials;
  return cfg;
}

CampaignReport WithoutTime(CampaignReport r) {
  r.wall_time_seconds = 0.0;
  return r;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

TEST(CampaignConfigTest, DefaultMatchesDocumentedCampaign) {
  const auto cfg = CampaignConfig::Default();
  EXPECT_EQ(cfg.checks.size(), RegisteredChecks().size());
  EXPECT_EQ(cfg.dims, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(cfg.trials, 1000u);
  EXPECT_EQ(cfg.tolerance, 1e-9);
  EXPECT_EQ(cfg.contraction_margin, 0.05);
  EXPECT_EQ(cfg.index_mode, IndexMode::kAuto);
  EXPECT_EQ(cfg.field, Field::kComplex);
  EXPECT_NO_THROW(cfg.Validate());
}

TEST(CampaignConfigTest, Validation) {
  auto cfg = Small({"minkowski_det"}, {2}, 0);
  EXPECT_EQ(CodeOf([&] { cfg.Validate(); }), ErrorCode::kBadConfig);
  EXPECT_EQ(CodeOf([&] { RunCampaign(cfg); }), ErrorCode::kBadConfig);
  cfg = Small({"bogus"}, {2}, 1);
  EXPECT_EQ(CodeOf([&] { cfg.Validate(); }), ErrorCode::kUnknownCheck);
  cfg = Small({"minkowski_det"}, {0}, 1);
  EXPECT_EQ(CodeOf([&] { cfg.Validate(); }), ErrorCode::kBadConfig);
  cfg = Small({"minkowski_det"}, {65}, 1);
  EXPECT_EQ(CodeOf([&] { cfg.Validate(); }), ErrorCode::kBadConfig);
  cfg = Small({"minkowski_det"}, {2}, 1);
  cfg.contraction_margin = 0;
  EXPECT_EQ(CodeOf([&] { cfg.Validate(); }), ErrorCode::kBadConfig);
}

TEST(CampaignConfigTest, JsonParsing) {
  const auto cfg = ParseCampaignConfig(R"({"checks": ["tail_chain"], "dims": [3], "trials": 5})");
  EXPECT_EQ(cfg.checks, std::vector<std::string>{"tail_chain"});
  EXPECT_EQ(cfg.trials, 5u);
  EXPECT_EQ(cfg.master_seed, CampaignConfig::Default().master_seed);
  EXPECT_EQ(ParseCampaignConfig("{}"), CampaignConfig::Default());
  EXPECT_EQ(CodeOf([] { ParseCampaignConfig(R"({"trials": 0})"); }), ErrorCode::kBadConfig);
  EXPECT_EQ(CodeOf([] { ParseCampaignConfig(R"({"trials": -1})"); }), ErrorCode::kBadConfig);
  EXPECT_EQ(CodeOf([] { ParseCampaignConfig(R"({"trails": 3})"); }), ErrorCode::kBadConfig);
  EXPECT_EQ(CodeOf([] { ParseCampaignConfig(R"({"field": "quaternion"})"); }), ErrorCode::kBadConfig);
  EXPECT_EQ(CodeOf([] { ParseCampaignConfig(R"({"checks": ["nope"]})"); }), ErrorCode::kUnknownCheck);
  EXPECT_EQ(CodeOf([] { ParseCampaignConfig("{"); }), ErrorCode::kParseError);

  auto custom = Small({"hua_det_inequality", "marcus_bounds"}, {2, 9}, 17);
  custom.index_mode = IndexMode::kSampled;
  custom.index_samples = 5;
  custom.master_seed = 0xFFFFFFFFFFFFFFFFull;
  custom.tolerance = 3.25e-11;
  custom.field = Field::kReal;
  custom.workers = 3;
  custom.output = "out.json";
  EXPECT_EQ(ParseCampaignConfig(CampaignConfigToJson(custom)), custom);
}

TEST(TrialSeedTest, DistinctAcrossCoordinates) {
  std::set<std::uint64_t> seeds;
  for (const auto& c : RegisteredChecks())
    for (std::size_t n = 1; n <= 8; ++n)
      for (std::size_t t = 0; t < 20; ++t) seeds.insert(TrialSeed(1, c.name, n, t));
  EXPECT_EQ(seeds.size(), RegisteredChecks().size() * 8 * 20);
  EXPECT_NE(TrialSeed(1, "main_bounds", 3, 0), TrialSeed(2, "main_bounds", 3, 0));
}

TEST(TrialIndexSequencesTest, ExhaustiveThenSampled) {
  Rng rng(1);
  EXPECT_EQ(TrialIndexSequences(6, IndexMode::kAuto, 32, rng).size(), 63u);
  EXPECT_EQ(TrialIndexSequences(7, IndexMode::kAuto, 32, rng).size(), 32u);
  EXPECT_EQ(TrialIndexSequences(7, IndexMode::kExhaustive, 32, rng).size(), 127u);
  EXPECT_EQ(TrialIndexSequences(3, IndexMode::kSampled, 4, rng).size(), 4u);
}

TEST(RunCampaignTest, MinkowskiHasNoViolations) {
  auto cfg = Small({"minkowski_det"}, {2}, 100);
  const auto report = RunCampaign(cfg);
  const auto& rec = report.check("minkowski_det");
  EXPECT_EQ(rec.trials, 100u);
  EXPECT_EQ(rec.evaluations, 100u);
  EXPECT_TRUE(rec.violations.empty());
  EXPECT_TRUE(rec.failures.empty());
  ASSERT_TRUE(rec.min_margin.has_value());
  EXPECT_GE(*rec.min_margin, 0.0);
}

TEST(RunCampaignTest, EveryCheckRunsCleanOnSmallBattery) {
  auto cfg = CampaignConfig::Default();
  cfg.trials = 6;
  cfg.dims = {1, 3, 7};
  const auto report = RunCampaign(cfg);
  for (const auto& rec : report.checks) {
    EXPECT_TRUE(rec.violations.empty()) << rec.name;
    EXPECT_TRUE(rec.failures.empty()) << rec.name << ": "
                                      << (rec.failures.empty() ? "" : rec.failures[0].error);
    EXPECT_EQ(rec.trials, 18u);
  }
  EXPECT_FALSE(report.check("pairwise_bound").evaluations == 0);
  EXPECT_TRUE(report.check("hua_identity_residual").max_identity_residual.has_value());
  EXPECT_FALSE(report.check("hua_identity_residual").min_margin.has_value());
}

TEST(RunCampaignTest, MinMarginIsMinimumOverTrials) {
  const auto cfg = Small({"main_bounds", "hua_identity_residual"}, {3}, 25);
  const auto report = RunCampaign(cfg);
  double min_margin = INFINITY, max_res = 0;
  std::size_t evals = 0;
  for (std::size_t t = 0; t < 25; ++t) {
    const auto o = RunTrial(cfg, "main_bounds", 3, t);
    evals += o.evaluations;
    min_margin = std::min(min_margin, *o.min_margin);
    max_res = std::max(max_res, *RunTrial(cfg, "hua_identity_residual", 3, t).max_identity_residual);
  }
  EXPECT_EQ(report.check("main_bounds").min_margin, min_margin);
  EXPECT_EQ(report.check("main_bounds").evaluations, evals);
  EXPECT_EQ(report.check("hua_identity_residual").max_identity_residual, max_res);
}

TEST(RunCampaignTest, ViolationsCarryReplayableSeedPath) {
  // Zero tolerance turns rounding-level negative margins into violations.
  auto cfg = Small({"tail_chain", "lidskii_product"}, {6, 7, 8}, 40);
  cfg.tolerance = 0.0;
  const auto report = RunCampaign(cfg);
  ASSERT_GT(report.total_violations(), 0u);
  for (const auto& rec : report.checks) {
    for (const auto& v : rec.violations) {
      EXPECT_EQ(v.trial_seed, TrialSeed(cfg.master_seed, rec.name, v.n, v.trial));
      EXPECT_LT(v.value, 0.0);
      const auto replay = RunTrial(cfg, rec.name, v.n, v.trial);
      EXPECT_NE(std::find(replay.violations.begin(), replay.violations.end(), v),
                replay.violations.end());
    }
  }
  const auto parsed = ParseCampaignReport(CampaignReportToJson(report));
  EXPECT_EQ(parsed, report);
}

TEST(RunCampaignTest, DeterministicAcrossRunsAndWorkers) {
  auto cfg = Small({"main_bounds", "nested_frame_det_bound", "marcus_bounds", "reversal_det"},
                   {1, 4, 7}, 15);
  const auto first = RunCampaign(cfg);
  const auto second = RunCampaign(cfg);
  cfg.workers = 4;
  auto parallel = RunCampaign(cfg);
  EXPECT_EQ(CampaignReportToJson(first, false), CampaignReportToJson(second, false));
  EXPECT_EQ(CampaignReportToJson(first, false), CampaignReportToJson(parallel, false));
  EXPECT_NE(CampaignReportToJson(first, false).find("\"checks\""), std::string::npos);
  EXPECT_EQ(WithoutTime(first), WithoutTime(second));
  parallel.config.workers = 1;
  EXPECT_EQ(WithoutTime(first), WithoutTime(parallel));
}

TEST(CampaignReportJsonTest, RoundTripWithEveryField) {
  CampaignReport r;
  r.config = Small({"fan_min_det"}, {2, 3}, 4);
  r.wall_time_seconds = 1.25;
  CheckRecord rec;
  rec.name = "fan_min_det";
  rec.trials = 8;
  rec.evaluations = 20;
  rec.violations.push_back({3, 2, 0xDEADBEEFCAFEull, {1, 3}, "minimum", -1.0000000000000002e-7});
  rec.min_margin = -1.0000000000000002e-7;
  rec.min_relative_margin = -3.3e-8;
  rec.failures.push_back({2, 1, "DegenerateDraw: could not orthonormalize"});
  r.checks.push_back(rec);
  CheckRecord empty;
  empty.name = "hua_identity_residual";
  empty.max_identity_residual = 1.5e-15;
  r.checks.push_back(empty);

  const std::string text = CampaignReportToJson(r);
  EXPECT_EQ(ParseCampaignReport(text), r);
  EXPECT_NE(text.find("\"count\": 1"), std::string::npos);
  EXPECT_EQ(CampaignReportToJson(r, false).find("wall_time"), std::string::npos);
  EXPECT_EQ(r.total_violations(), 1u);
  EXPECT_EQ(r.total_failures(), 1u);
}

TEST(CampaignReportJsonTest, RejectsInconsistentCount) {
  CampaignReport r;
  r.config = Small({"fan_min_det"}, {2}, 1);
  CheckRecord rec;
  rec.name = "fan_min_det";
  r.checks.push_back(rec);
  std::string text = CampaignReportToJson(r);
  const auto pos = text.find("\"count\": 0");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 10, "\"count\": 2");
  EXPECT_EQ(CodeOf([&] { ParseCampaignReport(text); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace logmaj
