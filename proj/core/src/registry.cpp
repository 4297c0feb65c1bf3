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

#include "logmaj/registry.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "logmaj/contraction_bounds.hpp"
#include "logmaj/counterexamples.hpp"
#include "logmaj/error.hpp"
#include "logmaj/frame_bounds.hpp"
#include "logmaj/psd_bounds.hpp"

namespace logmaj {

namespace {

using enum CheckKind;
using enum CheckParameter;

constexpr std::array kChecks = {
    CheckInfo{"scalar_product_bound", "AM-GM product inequality and its power form",
              "a, b nonnegative, equal length", kBound, kNone},
    CheckInfo{"fiedler_chain", "Fiedler tail-product chain", "A, B PSD; 1 <= k <= n", kBound,
              kOrder},
    CheckInfo{"oppenheim_tail_power", "Oppenheim tail-product root inequality",
              "A, B PSD; 1 <= k <= n", kBound, kOrder},
    CheckInfo{"minkowski_det", "Minkowski determinant inequality", "A, B PSD", kBound, kNone},
    CheckInfo{"hartfiel_det", "Hartfiel determinant inequality", "A, B PSD", kBound, kNone},
    CheckInfo{"lidskii_product", "Lidskii two-sided product bounds for AB",
              "A, B PSD; index sequence I", kBound, kIndexSequence},
    CheckInfo{"partial_isometry_reduction", "partial-isometry determinant reduction",
              "diag(lambdas) descending >= 0; U*U = I; u_i1 = 0 for i > m", kBound, kOrder},
    CheckInfo{"nested_frame_det_bound", "nested-frame determinant bound",
              "A PSD; orthonormal frame with x_t in span(u_1..u_{i_t})", kBound,
              kIndexSequence},
    CheckInfo{"fan_min_det", "Fan minimum of compressed determinants",
              "B PSD; U*U = I", kBound, kNone},
    CheckInfo{"main_bounds", "indexed eigenvalue-product bounds for A + B (power and three-term)",
              "A, B PSD; index sequence I", kBound, kIndexSequence},
    CheckInfo{"head_tail_power", "k largest eigenvalues of A + B, power form",
              "A, B PSD; 1 <= k <= n", kBound, kOrder},
    CheckInfo{"pairwise_bound", "product of two eigenvalues of A + B",
              "A, B PSD; 1 <= i < j <= n", kBound, kPair},
    CheckInfo{"tail_chain", "strengthened Fiedler tail chain and head three-term bound",
              "A, B PSD; 1 <= k <= n", kBound, kOrder},
    CheckInfo{"reproduce_counterexamples", "false strengthenings and the Weyl fallback",
              "none (fixed instances)", kReproduction, kNone},
    CheckInfo{"hua_identity_residual", "Hua matrix identity F + H",
              "A, B strict contractions", kIdentity, kNone},
    CheckInfo{"sum_identity_residual", "matrix identity I + A*A = P + Q",
              "A, B square", kIdentity, kNone},
    CheckInfo{"hua_det_inequality", "Hua determinant inequality",
              "A, B strict contractions", kBound, kNone},
    CheckInfo{"hua_reversal_det", "reversal of the Hua determinant inequality",
              "A, B square", kBound, kNone},
    CheckInfo{"marcus_bounds", "Marcus eigenvalue bound and its singular-value strengthening",
              "A, B contractions; 1 <= k <= n", kBound, kOrder},
    CheckInfo{"contraction_main_bound", "indexed singular-value bound for I - A*B",
              "A, B strict contractions; index sequence I", kBound, kIndexSequence},
    CheckInfo{"hua_strengthened_det", "strengthened Hua determinant inequality",
              "A, B strict contractions", kBound, kNone},
    CheckInfo{"reversal_bound", "indexed reversal bound for I - A*B",
              "A, B square; index sequence I", kBound, kIndexSequence},
    CheckInfo{"reversal_det", "determinant reversal with cross term",
              "A, B square", kBound, kNone},
};

std::vector<double> RowValues(const ComplexMatrix& m) {
  if (m.rows() != 1) throw Error(ErrorCode::kLengthMismatch, "expected a 1 x n row");
  std::vector<double> out;
  for (const auto& z : m.entries()) out.push_back(z.real());
  return out;
}

std::size_t SingleIndex(const std::optional<std::vector<std::size_t>>& index,
                        std::size_t fallback) {
  if (!index) return fallback;
  if (index->size() != 1) {
    throw Error(ErrorCode::kBadIndices, "this check takes a single index");
  }
  return index->front();
}

IndexSequence SequenceOr(const std::optional<std::vector<std::size_t>>& index,
                         std::size_t n, std::size_t default_k) {
  if (index) return IndexSequence(n, *index);
  return IndexSequence::Head(n, default_k);
}

}  // namespace

std::span<const CheckInfo> RegisteredChecks() { return kChecks; }

const CheckInfo& FindCheck(std::string_view name) {
  for (const auto& c : kChecks)
    if (c.name == name) return c;
  throw Error(ErrorCode::kUnknownCheck, "'" + std::string(name) + "'");
}

std::string ListChecksTable() {
  std::size_t name_width = 4;
  std::size_t anchor_width = 6;
  for (const auto& c : kChecks) {
    name_width = std::max(name_width, c.name.size());
    anchor_width = std::max(anchor_width, c.anchor.size());
  }
  std::ostringstream out;
  auto row = [&](std::string_view a, std::string_view b, std::string_view c) {
    out << a << std::string(name_width + 2 - a.size(), ' ') << b
        << std::string(anchor_width + 2 - b.size(), ' ') << c << '\n';
  };
  row("name", "anchor", "preconditions");
  for (const auto& c : kChecks) row(c.name, c.anchor, c.preconditions);
  return out.str();
}

VerifyResult VerifyMatrices(std::string_view name, const ComplexMatrix& a,
                            const ComplexMatrix& b,
                            const std::optional<std::vector<std::size_t>>& index,
                            double tol) {
  const CheckInfo& info = FindCheck(name);
  VerifyResult result;
  result.check_name = std::string(info.name);
  const std::size_t n = a.rows();

  auto bound = [&](BoundReport r) {
    result.satisfied = r.satisfied;
    result.bounds.push_back(std::move(r));
  };

  if (name == "scalar_product_bound") {
    bound(ScalarProductBound(RowValues(a), RowValues(b), tol));
  } else if (name == "fiedler_chain") {
    bound(FiedlerChain(a, b, SingleIndex(index, n), tol));
  } else if (name == "oppenheim_tail_power") {
    bound(OppenheimTailPower(a, b, SingleIndex(index, n), tol));
  } else if (name == "minkowski_det") {
    bound(MinkowskiDet(a, b, tol));
  } else if (name == "hartfiel_det") {
    bound(HartfielDet(a, b, tol));
  } else if (name == "lidskii_product") {
    bound(LidskiiProduct(a, b, SequenceOr(index, n, n), tol));
  } else if (name == "partial_isometry_reduction") {
    std::vector<double> lambdas;
    for (std::size_t i = 0; i < a.rows(); ++i) lambdas.push_back(a(i, i).real());
    bound(PartialIsometryReduction(lambdas, b, SingleIndex(index, 1), tol));
  } else if (name == "nested_frame_det_bound") {
    bound(NestedFrameDetBound(a, SequenceOr(index, n, b.cols()), b, tol));
  } else if (name == "fan_min_det") {
    bound(FanMinDet(a, b, tol));
  } else if (name == "main_bounds") {
    bound(MainBounds(a, b, SequenceOr(index, n, n), tol));
  } else if (name == "head_tail_power") {
    bound(HeadTailPower(a, b, SingleIndex(index, n), tol));
  } else if (name == "pairwise_bound") {
    std::size_t i = 1, j = 2;
    if (index) {
      if (index->size() != 2) throw Error(ErrorCode::kBadIndices, "pairwise_bound takes i,j");
      i = (*index)[0];
      j = (*index)[1];
    }
    bound(PairwiseBound(a, b, i, j, tol));
  } else if (name == "tail_chain") {
    bound(TailChain(a, b, SingleIndex(index, n), tol));
  } else if (name == "reproduce_counterexamples") {
    auto r = ReproduceCounterexamples();
    result.satisfied = r.confirmed();
    result.bounds = {std::move(r.paired_sum), std::move(r.head_sum), std::move(r.fallback)};
  } else if (name == "hua_identity_residual") {
    result.identity = HuaIdentityResidual(a, b);
    result.satisfied = result.identity->satisfied;
  } else if (name == "sum_identity_residual") {
    result.identity = SumIdentityResidual(a, b);
    result.satisfied = result.identity->satisfied;
  } else if (name == "hua_det_inequality") {
    bound(HuaDetInequality(a, b, tol));
  } else if (name == "hua_reversal_det") {
    bound(HuaReversalDet(a, b, tol));
  } else if (name == "marcus_bounds") {
    bound(MarcusBounds(a, b, SingleIndex(index, n), tol));
  } else if (name == "contraction_main_bound") {
    bound(ContractionMainBound(a, b, SequenceOr(index, n, n), tol));
  } else if (name == "hua_strengthened_det") {
    bound(HuaStrengthenedDet(a, b, tol));
  } else if (name == "reversal_bound") {
    bound(ReversalBound(a, b, SequenceOr(index, n, n), tol));
  } else if (name == "reversal_det") {
    bound(ReversalDet(a, b, tol));
  }
  return result;
}

}  // namespace logmaj
