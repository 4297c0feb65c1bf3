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

#ifndef LOGMAJ_REGISTRY_HPP_
#define LOGMAJ_REGISTRY_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logmaj/complex_matrix.hpp"
#include "logmaj/report.hpp"
#include "logmaj/spectral_products.hpp"

namespace logmaj {

enum class CheckKind { kBound, kIdentity, kReproduction };

/// What the optional index argument of a check means.
enum class CheckParameter {
  kNone,
  kIndexSequence,  // I = {i_1 < ... < i_k}
  kOrder,          // a single k (or m for the partial isometry reduction)
  kPair,           // i < j
};

struct CheckInfo {
  std::string_view name;
  std::string_view anchor;
  std::string_view preconditions;
  CheckKind kind;
  CheckParameter parameter;
};

/// Every check, in a fixed order.
std::span<const CheckInfo> RegisteredChecks();

/// Throws kUnknownCheck.
const CheckInfo& FindCheck(std::string_view name);

/// Plain-text table: name, anchor, preconditions; one row per check.
std::string ListChecksTable();

struct VerifyResult {
  std::string check_name;
  std::vector<BoundReport> bounds;
  std::optional<IdentityReport> identity;
  bool satisfied = true;
};

/// Single evaluation of `name` on user-supplied matrices.
///
/// Argument roles by check:
///   scalar_product_bound          a, b: 1 x n rows of nonnegative reals
///   partial_isometry_reduction    a: diag(lambdas), b: U, index: {m} (default 1)
///   nested_frame_det_bound        a: A, b: frame, index: I (default {1..k})
///   fan_min_det                   a: B, b: U
///   reproduce_counterexamples     a, b ignored
///   everything else               a: A, b: B
/// Order checks default to k = n, pair checks to (1, 2), index checks to
/// {1..n}. Precondition failures propagate as logmaj::Error.
VerifyResult VerifyMatrices(std::string_view name, const ComplexMatrix& a,
                            const ComplexMatrix& b,
                            const std::optional<std::vector<std::size_t>>& index,
                            double tol);

}  // namespace logmaj

#endif  // LOGMAJ_REGISTRY_HPP_
