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

#include "logmaj/campaign_io.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "logmaj/error.hpp"

namespace logmaj {
namespace {

using nlohmann::json;

constexpr int kIndent = 2;

json Number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json Optional(const std::optional<double>& v) { return v ? Number(*v) : json(nullptr); }

double ReadNumber(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

std::optional<double> ReadOptional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

json ConfigJson(const CampaignConfig& cfg) {
  return json{{"checks", cfg.checks},
              {"dims", cfg.dims},
              {"index_mode", std::string(IndexModeName(cfg.index_mode))},
              {"index_samples", cfg.index_samples},
              {"trials", cfg.trials},
              {"master_seed", cfg.master_seed},
              {"tolerance", cfg.tolerance},
              {"contraction_margin", cfg.contraction_margin},
              {"field", std::string(FieldName(cfg.field))},
              {"workers", cfg.workers},
              {"output", cfg.output}};
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadConfig, std::string(key) + ": " + e.what());
  }
}

CampaignConfig ConfigFromJson(const json& j) {
  static const std::set<std::string> kKeys = {
      "checks", "dims", "index_mode", "index_samples", "trials", "master_seed",
      "tolerance", "contraction_margin", "field", "workers", "output"};
  if (!j.is_object()) throw Error(ErrorCode::kBadConfig, "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.contains(key)) throw Error(ErrorCode::kBadConfig, "unknown key '" + key + "'");
  }
  CampaignConfig cfg = CampaignConfig::Default();
  if (j.contains("checks")) cfg.checks = Get<std::vector<std::string>>(j, "checks");
  if (j.contains("dims")) cfg.dims = Get<std::vector<std::size_t>>(j, "dims");
  if (j.contains("index_mode")) cfg.index_mode = ParseIndexMode(Get<std::string>(j, "index_mode"));
  if (j.contains("index_samples")) cfg.index_samples = Get<std::size_t>(j, "index_samples");
  if (j.contains("trials")) {
    // A negative count would wrap through size_t.
    if (j["trials"].is_number_integer() && j["trials"].get<long long>() < 0) {
      throw Error(ErrorCode::kBadConfig, "trials must be >= 1");
    }
    cfg.trials = Get<std::size_t>(j, "trials");
  }
  if (j.contains("master_seed")) cfg.master_seed = Get<std::uint64_t>(j, "master_seed");
  if (j.contains("tolerance")) cfg.tolerance = Get<double>(j, "tolerance");
  if (j.contains("contraction_margin")) {
    cfg.contraction_margin = Get<double>(j, "contraction_margin");
  }
  if (j.contains("field")) cfg.field = ParseField(Get<std::string>(j, "field"));
  if (j.contains("workers")) cfg.workers = Get<std::size_t>(j, "workers");
  if (j.contains("output")) cfg.output = Get<std::string>(j, "output");
  return cfg;
}

json ReportJson(const CampaignReport& report, bool include_run_details) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json reproductions = json::array();
    for (const auto& v : c.violations) {
      reproductions.push_back({{"n", v.n},
                               {"trial", v.trial},
                               {"trial_seed", v.trial_seed},
                               {"index", v.index},
                               {"link", v.link},
                               {"value", Number(v.value)}});
    }
    json failures = json::array();
    for (const auto& f : c.failures) {
      failures.push_back({{"n", f.n}, {"trial", f.trial}, {"error", f.error}});
    }
    checks.push_back({{"name", c.name},
                      {"trials", c.trials},
                      {"evaluations", c.evaluations},
                      {"violations", {{"count", c.violations.size()},
                                      {"reproductions", std::move(reproductions)}}},
                      {"min_margin", Optional(c.min_margin)},
                      {"min_relative_margin", Optional(c.min_relative_margin)},
                      {"max_identity_residual", Optional(c.max_identity_residual)},
                      {"failures", std::move(failures)}});
  }
  json config = ConfigJson(report.config);
  if (!include_run_details) config.erase("workers");
  json out{{"config", std::move(config)},
           {"checks", std::move(checks)},
           {"total_violations", report.total_violations()},
           {"total_failures", report.total_failures()}};
  if (include_run_details) out["wall_time_seconds"] = report.wall_time_seconds;
  return out;
}

CampaignReport ReportFromJson(const json& j) {
  CampaignReport report;
  try {
    report.config = ConfigFromJson(j.at("config"));
    for (const auto& c : j.at("checks")) {
      CheckRecord r;
      r.name = c.at("name").get<std::string>();
      r.trials = c.at("trials").get<std::size_t>();
      r.evaluations = c.at("evaluations").get<std::size_t>();
      const auto& v = c.at("violations");
      for (const auto& x : v.at("reproductions")) {
        r.violations.push_back({x.at("n").get<std::size_t>(), x.at("trial").get<std::size_t>(),
                                x.at("trial_seed").get<std::uint64_t>(),
                                x.at("index").get<std::vector<std::size_t>>(),
                                x.at("link").get<std::string>(), ReadNumber(x.at("value"))});
      }
      if (v.at("count").get<std::size_t>() != r.violations.size()) {
        throw Error(ErrorCode::kParseError, "violation count does not match reproductions");
      }
      r.min_margin = ReadOptional(c.at("min_margin"));
      r.min_relative_margin = ReadOptional(c.at("min_relative_margin"));
      r.max_identity_residual = ReadOptional(c.at("max_identity_residual"));
      for (const auto& f : c.at("failures")) {
        r.failures.push_back({f.at("n").get<std::size_t>(), f.at("trial").get<std::size_t>(),
                              f.at("error").get<std::string>()});
      }
      report.checks.push_back(std::move(r));
    }
    if (j.contains("wall_time_seconds")) {
      report.wall_time_seconds = j["wall_time_seconds"].get<double>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return report;
}

json BoundJson(const BoundReport& r) {
  json links = json::array();
  for (const auto& l : r.links) {
    links.push_back({{"label", l.label},
                     {"greater", Number(l.greater)},
                     {"lesser", Number(l.lesser)},
                     {"margin", Number(l.margin())},
                     {"scale", Number(l.scale)}});
  }
  json rhs = json::array();
  for (double t : r.rhs_terms) rhs.push_back(Number(t));
  return {{"check", r.check_name},
          {"lhs", Number(r.lhs)},
          {"rhs_terms", std::move(rhs)},
          {"links", std::move(links)},
          {"margin", Number(r.margin)},
          {"scale", Number(r.scale)},
          {"tolerance", r.tolerance},
          {"satisfied", r.satisfied}};
}

json IdentityJson(const IdentityReport& r) {
  return {{"check", r.check_name},
          {"residual", Number(r.residual)},
          {"scale", Number(r.scale)},
          {"tolerance", r.tolerance},
          {"satisfied", r.satisfied}};
}

}  // namespace

CampaignConfig ParseCampaignConfig(std::string_view text) {
  CampaignConfig cfg = ConfigFromJson(Parse(text));
  cfg.Validate();
  return cfg;
}

std::string CampaignConfigToJson(const CampaignConfig& cfg) {
  return ConfigJson(cfg).dump(kIndent);
}

std::string CampaignReportToJson(const CampaignReport& report, bool include_run_details) {
  return ReportJson(report, include_run_details).dump(kIndent);
}

CampaignReport ParseCampaignReport(std::string_view text) { return ReportFromJson(Parse(text)); }

std::string BoundReportToJson(const BoundReport& report) { return BoundJson(report).dump(kIndent); }

std::string IdentityReportToJson(const IdentityReport& report) {
  return IdentityJson(report).dump(kIndent);
}

std::string VerifyResultToJson(const VerifyResult& result) {
  json bounds = json::array();
  for (const auto& b : result.bounds) bounds.push_back(BoundJson(b));
  json out{{"check", result.check_name},
           {"satisfied", result.satisfied},
           {"bounds", std::move(bounds)},
           {"identity", result.identity ? IdentityJson(*result.identity) : json(nullptr)}};
  return out.dump(kIndent);
}

}  // namespace logmaj
