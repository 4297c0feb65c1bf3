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

#include "logmaj/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logmaj {

const BoundLink& BoundReport::link(std::string_view label) const {
  for (const auto& l : links)
    if (l.label == label) return l;
  throw std::out_of_range("no link named " + std::string(label) + " in " + check_name);
}

BoundReportBuilder::BoundReportBuilder(std::string check_name, double tolerance) {
  report_.check_name = std::move(check_name);
  report_.tolerance = tolerance;
}

BoundReportBuilder& BoundReportBuilder::Link(std::string label, double greater,
                                             double lesser,
                                             std::initializer_list<double> terms) {
  double scale = std::max({1.0, std::abs(greater), std::abs(lesser)});
  for (double t : terms) scale = std::max(scale, std::abs(t));
  report_.links.push_back({std::move(label), greater, lesser, scale});
  return *this;
}

BoundReportBuilder& BoundReportBuilder::Statement(double lhs, std::vector<double> rhs_terms) {
  report_.lhs = lhs;
  report_.rhs_terms = std::move(rhs_terms);
  return *this;
}

BoundReport BoundReportBuilder::Build() {
  double margin = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  bool finite = true;
  for (const auto& l : report_.links) {
    if (std::isnan(l.margin()) || std::isnan(l.scale)) finite = false;
    margin = std::min(margin, l.margin());
    scale = std::max(scale, l.scale);
  }
  scale = std::max(scale, std::abs(report_.lhs));
  for (double t : report_.rhs_terms) scale = std::max(scale, std::abs(t));
  if (!finite) margin = std::numeric_limits<double>::quiet_NaN();
  report_.margin = margin;
  report_.scale = scale;
  report_.satisfied = finite && margin >= -report_.tolerance * scale;
  return std::move(report_);
}

IdentityReport MakeIdentityReport(std::string check_name, double residual, double scale,
                                  double tolerance) {
  return {std::move(check_name), residual, scale, tolerance,
          residual <= tolerance * (1.0 + scale)};
}

}  // namespace logmaj
