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

#ifndef LOGMAJ_REPORT_HPP_
#define LOGMAJ_REPORT_HPP_

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace logmaj {

inline constexpr double kDefaultBoundTolerance = 1e-9;
inline constexpr double kDefaultIdentityTolerance = 1e-10;

/// One inequality `greater >= lesser` of a check. `scale` is
/// max(1, |greater|, |lesser|, |additive terms|); the additive terms matter when
/// one side is a difference of large products.
struct BoundLink {
  std::string label;
  double greater = 0.0;
  double lesser = 0.0;
  double scale = 1.0;

  double margin() const noexcept { return greater - lesser; }
};

/// Outcome of an inequality check. Chains are stored outermost first:
/// lhs >= rhs_terms[0] >= rhs_terms[1] ... for ">=" statements. For "<="
/// statements lhs is the small side and the link is recorded flipped.
///
/// margin is the minimum link margin, scale the largest link scale, and
/// satisfied <=> margin >= -tolerance * scale.
struct BoundReport {
  std::string check_name;
  double lhs = 0.0;
  std::vector<double> rhs_terms;
  std::vector<BoundLink> links;
  double margin = 0.0;
  double scale = 1.0;
  double tolerance = kDefaultBoundTolerance;
  bool satisfied = true;

  /// Throws std::out_of_range for an unknown label.
  const BoundLink& link(std::string_view label) const;
  double relative_margin() const noexcept { return margin / scale; }
};

class BoundReportBuilder {
 public:
  BoundReportBuilder(std::string check_name, double tolerance);

  BoundReportBuilder& Link(std::string label, double greater, double lesser,
                           std::initializer_list<double> terms = {});
  BoundReportBuilder& Statement(double lhs, std::vector<double> rhs_terms);

  BoundReport Build();

 private:
  BoundReport report_;
};

/// Outcome of a matrix identity check: residual = max entrywise deviation,
/// satisfied <=> residual <= tolerance * (1 + scale).
struct IdentityReport {
  std::string check_name;
  double residual = 0.0;
  double scale = 0.0;
  double tolerance = kDefaultIdentityTolerance;
  bool satisfied = true;
};

IdentityReport MakeIdentityReport(std::string check_name, double residual, double scale,
                                  double tolerance);

}  // namespace logmaj

#endif  // LOGMAJ_REPORT_HPP_
