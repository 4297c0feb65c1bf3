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

#ifndef LOGMAJ_CAMPAIGN_IO_HPP_
#define LOGMAJ_CAMPAIGN_IO_HPP_

#include <string>
#include <string_view>

#include "logmaj/campaign.hpp"
#include "logmaj/registry.hpp"
#include "logmaj/report.hpp"

namespace logmaj {

/// Missing keys take their CampaignConfig::Default() values. Unknown keys and
/// malformed values raise kBadConfig; invalid JSON raises kParseError.
CampaignConfig ParseCampaignConfig(std::string_view text);
std::string CampaignConfigToJson(const CampaignConfig& cfg);

/// With `include_run_details` false the wall time and the worker count are
/// left out, which leaves the part that is deterministic in the config.
std::string CampaignReportToJson(const CampaignReport& report, bool include_run_details = true);
CampaignReport ParseCampaignReport(std::string_view text);

std::string BoundReportToJson(const BoundReport& report);
std::string IdentityReportToJson(const IdentityReport& report);
std::string VerifyResultToJson(const VerifyResult& result);

}  // namespace logmaj

#endif  // LOGMAJ_CAMPAIGN_IO_HPP_
