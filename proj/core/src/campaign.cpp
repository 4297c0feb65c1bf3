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

#include "logmaj/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <thread>

#include "logmaj/contraction_bounds.hpp"
#include "logmaj/counterexamples.hpp"
#include "logmaj/error.hpp"
#include "logmaj/frame_bounds.hpp"
#include "logmaj/psd_bounds.hpp"
#include "logmaj/registry.hpp"

namespace logmaj {

std::string_view IndexModeName(IndexMode mode) {
  switch (mode) {
    case IndexMode::kAuto: return "auto";
    case IndexMode::kExhaustive: return "exhaustive";
    case IndexMode::kSampled: return "sampled";
  }
  return "auto";
}

IndexMode ParseIndexMode(std::string_view name) {
  if (name == "auto") return IndexMode::kAuto;
  if (name == "exhaustive") return IndexMode::kExhaustive;
  if (name == "sampled") return IndexMode::kSampled;
  throw Error(ErrorCode::kBadConfig, "unknown index mode '" + std::string(name) + "'");
}

CampaignConfig CampaignConfig::Default() {
  CampaignConfig cfg;
  for (const auto& c : RegisteredChecks()) cfg.checks.emplace_back(c.name);
  for (std::size_t n = 1; n <= 8; ++n) cfg.dims.push_back(n);
  return cfg;
}

void CampaignConfig::Validate() const {
  if (checks.empty()) throw Error(ErrorCode::kBadConfig, "no checks selected");
  for (const auto& c : checks) FindCheck(c);
  if (dims.empty()) throw Error(ErrorCode::kBadConfig, "no dimensions selected");
  for (std::size_t n : dims) {
    if (n < 1 || n > kMaxDimension) {
      throw Error(ErrorCode::kBadConfig, "dimension " + std::to_string(n) + " outside 1..64");
    }
    if (index_mode == IndexMode::kExhaustive && n > 12) {
      throw Error(ErrorCode::kBadConfig, "exhaustive index mode is limited to n <= 12");
    }
  }
  if (trials < 1) throw Error(ErrorCode::kBadConfig, "trials must be >= 1");
  if (index_samples < 1) throw Error(ErrorCode::kBadConfig, "index_samples must be >= 1");
  if (!(tolerance >= 0.0)) throw Error(ErrorCode::kBadConfig, "tolerance must be >= 0");
  if (!(contraction_margin > 0.0 && contraction_margin < 1.0)) {
    throw Error(ErrorCode::kBadConfig, "delta must lie in (0, 1)");
  }
  if (workers < 1) throw Error(ErrorCode::kBadConfig, "workers must be >= 1");
}

std::size_t CampaignReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.violations.size();
  return total;
}

std::size_t CampaignReport::total_failures() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failures.size();
  return total;
}

const CheckRecord& CampaignReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error(ErrorCode::kUnknownCheck, "'" + std::string(name) + "' not in report");
}

std::uint64_t TrialSeed(std::uint64_t master_seed, std::string_view check, std::size_t n,
                        std::size_t trial) {
  return DeriveSeed(DeriveSeed(DeriveSeed(master_seed, HashName(check)), n), trial);
}

std::vector<IndexSequence> TrialIndexSequences(std::size_t n, IndexMode mode,
                                               std::size_t samples, Rng& rng) {
  const bool exhaustive = mode == IndexMode::kExhaustive ||
                          (mode == IndexMode::kAuto && n <= kExhaustiveIndexLimit);
  if (exhaustive) return AllIndexSequences(n);
  std::vector<IndexSequence> out;
  out.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) out.push_back(SampleIndexSequence(n, rng));
  return out;
}

namespace {

// Stream tags below the trial seed.
enum StreamTag : std::uint64_t {
  kStreamA = 1,
  kStreamB = 2,
  kStreamIndex = 3,
  kStreamFrames = 4,
  kStreamAux = 5,
};

class TrialContext {
 public:
  TrialContext(const CampaignConfig& cfg, std::size_t n, std::size_t trial,
               std::uint64_t trial_seed)
      : cfg_(cfg), n_(n), trial_(trial), trial_seed_(trial_seed),
        index_rng_(DeriveSeed(trial_seed, kStreamIndex)) {}

  std::size_t n() const { return n_; }
  std::size_t trial() const { return trial_; }
  double tol() const { return cfg_.tolerance; }
  Field field() const { return cfg_.field; }
  std::uint64_t Seed(std::uint64_t tag) const { return DeriveSeed(trial_seed_, tag); }

  GenConfig Gen(std::uint64_t tag, SpectrumMode mode = SpectrumMode::kUniform) const {
    GenConfig g;
    g.seed = Seed(tag);
    g.n = n_;
    g.field = cfg_.field;
    g.contraction_margin = cfg_.contraction_margin;
    g.spectrum_mode = mode;
    return g;
  }

  // Cycles A and B through the three random spectrum shapes independently.
  ComplexMatrix PsdA() const { return RandomPsd(Gen(kStreamA, Mode(trial_ % 3))); }
  ComplexMatrix PsdB() const { return RandomPsd(Gen(kStreamB, Mode((trial_ / 3) % 3))); }
  ComplexMatrix ContractionA() const { return RandomStrictContraction(Gen(kStreamA)); }
  ComplexMatrix ContractionB() const { return RandomStrictContraction(Gen(kStreamB)); }
  ComplexMatrix SquareA() const { return RandomSquare(Gen(kStreamA)); }
  ComplexMatrix SquareB() const { return RandomSquare(Gen(kStreamB)); }

  std::vector<IndexSequence> IndexSequences() {
    return TrialIndexSequences(n_, cfg_.index_mode, cfg_.index_samples, index_rng_);
  }

  void Record(const BoundReport& r, std::vector<std::size_t> index = {}) {
    ++outcome_.evaluations;
    const double rel = r.relative_margin();
    if (!outcome_.min_margin || !(r.margin >= *outcome_.min_margin)) outcome_.min_margin = r.margin;
    if (!outcome_.min_relative_margin || !(rel >= *outcome_.min_relative_margin)) {
      outcome_.min_relative_margin = rel;
    }
    if (!r.satisfied) {
      std::string worst = r.links.empty() ? "" : r.links.front().label;
      double worst_margin = r.links.empty() ? r.margin : r.links.front().margin();
      for (const auto& l : r.links) {
        if (l.margin() < worst_margin || std::isnan(l.margin())) {
          worst = l.label;
          worst_margin = l.margin();
        }
      }
      outcome_.violations.push_back({n_, trial_, trial_seed_, std::move(index), worst, r.margin});
    }
  }

  void Record(const IdentityReport& r) {
    ++outcome_.evaluations;
    if (!outcome_.max_identity_residual || !(r.residual <= *outcome_.max_identity_residual)) {
      outcome_.max_identity_residual = r.residual;
    }
    if (!r.satisfied) {
      outcome_.violations.push_back({n_, trial_, trial_seed_, {}, "residual", r.residual});
    }
  }

  TrialOutcome Finish() && { return std::move(outcome_); }

 private:
  static SpectrumMode Mode(std::size_t i) {
    constexpr SpectrumMode kModes[] = {SpectrumMode::kUniform, SpectrumMode::kClustered,
                                       SpectrumMode::kRankDeficient};
    return kModes[i];
  }

  const CampaignConfig& cfg_;
  std::size_t n_;
  std::size_t trial_;
  std::uint64_t trial_seed_;
  Rng index_rng_;
  TrialOutcome outcome_;
};

std::vector<std::size_t> Indices(const IndexSequence& s) {
  return {s.indices().begin(), s.indices().end()};
}

using Evaluator = void (*)(TrialContext&);

void EvalScalarProduct(TrialContext& ctx) {
  Rng rng(ctx.Seed(kStreamAux));
  std::vector<double> a(ctx.n()), b(ctx.n());
  auto draw = [&] { return rng.Uniform01() < 0.1 ? 0.0 : rng.Uniform(0.0, 2.0); };
  for (std::size_t t = 0; t < ctx.n(); ++t) {
    a[t] = draw();
    b[t] = draw();
  }
  ctx.Record(ScalarProductBound(a, b, ctx.tol()));
}

template <BoundReport (*Fn)(const PsdPairSpectra&, std::size_t, double)>
void EvalPsdOrder(TrialContext& ctx) {
  const auto s = PsdPairSpectra::From(ctx.PsdA(), ctx.PsdB());
  for (std::size_t k = 1; k <= ctx.n(); ++k) ctx.Record(Fn(s, k, ctx.tol()), {k});
}

template <BoundReport (*Fn)(const PsdPairSpectra&, double)>
void EvalPsdPlain(TrialContext& ctx) {
  ctx.Record(Fn(PsdPairSpectra::From(ctx.PsdA(), ctx.PsdB()), ctx.tol()));
}

void EvalLidskii(TrialContext& ctx) {
  const auto s = PsdProductSpectra::From(ctx.PsdA(), ctx.PsdB());
  for (const auto& index : ctx.IndexSequences())
    ctx.Record(LidskiiProduct(s, index, ctx.tol()), Indices(index));
}

void EvalMainBounds(TrialContext& ctx) {
  const auto s = PsdPairSpectra::From(ctx.PsdA(), ctx.PsdB());
  for (const auto& index : ctx.IndexSequences())
    ctx.Record(MainBounds(s, index, ctx.tol()), Indices(index));
}

void EvalPairwise(TrialContext& ctx) {
  const auto s = PsdPairSpectra::From(ctx.PsdA(), ctx.PsdB());
  for (std::size_t i = 1; i <= ctx.n(); ++i)
    for (std::size_t j = i + 1; j <= ctx.n(); ++j)
      ctx.Record(PairwiseBound(s, i, j, ctx.tol()), {i, j});
}

void EvalPartialIsometry(TrialContext& ctx) {
  Rng rng(ctx.Seed(kStreamAux));
  GenConfig g = ctx.Gen(kStreamA, static_cast<SpectrumMode>(ctx.trial() % 3));
  Rng spectrum_rng(g.seed);
  const auto lambdas = DrawSpectrum(g, spectrum_rng);
  const std::size_t k = 1 + rng.UniformIndex(ctx.n());
  const std::size_t m = 1 + rng.UniformIndex(ctx.n());
  const auto u = RandomPatternedIsometry(ctx.n(), k, m, ctx.Seed(kStreamFrames), ctx.field());
  ctx.Record(PartialIsometryReduction(lambdas, u, m, ctx.tol()), {m});
}

void EvalNestedFrame(TrialContext& ctx) {
  const auto decomposition = HermitianEig(ctx.PsdA());
  const auto sequences = ctx.IndexSequences();
  for (std::size_t s = 0; s < sequences.size(); ++s) {
    const auto frame =
        NestedFrame(decomposition, sequences[s], DeriveSeed(ctx.Seed(kStreamFrames), s),
                    ctx.field());
    ctx.Record(NestedFrameDetBound(decomposition, sequences[s], frame, ctx.tol()),
               Indices(sequences[s]));
  }
}

void EvalFan(TrialContext& ctx) {
  const auto b = ctx.PsdB();
  for (std::size_t k = 1; k <= ctx.n(); ++k) {
    const auto u = RandomPartialIsometry(ctx.n(), k, DeriveSeed(ctx.Seed(kStreamFrames), k),
                                         ctx.field());
    ctx.Record(FanMinDet(b, u, ctx.tol()), {k});
  }
}

void EvalCounterexamples(TrialContext& ctx) {
  const auto r = ReproduceCounterexamples();
  BoundReport summary = r.fallback;
  summary.check_name = "reproduce_counterexamples";
  if (!r.confirmed()) {
    summary.satisfied = false;
    summary.links.insert(summary.links.begin(), BoundLink{"counterexample_not_reproduced", 0.0, 1.0, 1.0});
  }
  ctx.Record(summary);
}

void EvalHuaIdentity(TrialContext& ctx) {
  ctx.Record(HuaIdentityResidual(ctx.ContractionA(), ctx.ContractionB()));
}

void EvalSumIdentity(TrialContext& ctx) {
  ctx.Record(SumIdentityResidual(ctx.SquareA(), ctx.SquareB()));
}

void EvalHuaDet(TrialContext& ctx) {
  ctx.Record(HuaDetInequality(ctx.ContractionA(), ctx.ContractionB(), ctx.tol()));
}

void EvalHuaReversal(TrialContext& ctx) {
  ctx.Record(HuaReversalDet(ctx.SquareA(), ctx.SquareB(), ctx.tol()));
}

void EvalMarcus(TrialContext& ctx) {
  ComplexMatrix a = ctx.ContractionA();
  // Every fourth trial puts A on the boundary sigma_1 = 1.
  if (ctx.trial() % 4 == 3) {
    const double s1 = SingularValues(a).front();
    if (s1 > 0.0) a *= 1.0 / s1;
  }
  const ComplexMatrix b = ctx.ContractionB();
  for (std::size_t k = 1; k <= ctx.n(); ++k) ctx.Record(MarcusBounds(a, b, k, ctx.tol()), {k});
}

void EvalContractionMain(TrialContext& ctx) {
  const auto d = ContractionPairData::From(ctx.ContractionA(), ctx.ContractionB());
  for (const auto& index : ctx.IndexSequences())
    ctx.Record(ContractionMainBound(d, index, ctx.tol()), Indices(index));
}

void EvalHuaStrengthened(TrialContext& ctx) {
  ctx.Record(HuaStrengthenedDet(ctx.ContractionA(), ctx.ContractionB(), ctx.tol()));
}

void EvalReversalBound(TrialContext& ctx) {
  const auto d = ReversalPairData::From(ctx.SquareA(), ctx.SquareB());
  for (const auto& index : ctx.IndexSequences())
    ctx.Record(ReversalBound(d, index, ctx.tol()), Indices(index));
}

void EvalReversalDet(TrialContext& ctx) {
  ctx.Record(ReversalDet(ctx.SquareA(), ctx.SquareB(), ctx.tol()));
}

struct EvaluatorEntry {
  std::string_view name;
  Evaluator eval;
};

constexpr EvaluatorEntry kEvaluators[] = {
    {"scalar_product_bound", EvalScalarProduct},
    {"fiedler_chain", EvalPsdOrder<FiedlerChain>},
    {"oppenheim_tail_power", EvalPsdOrder<OppenheimTailPower>},
    {"minkowski_det", EvalPsdPlain<MinkowskiDet>},
    {"hartfiel_det", EvalPsdPlain<HartfielDet>},
    {"lidskii_product", EvalLidskii},
    {"partial_isometry_reduction", EvalPartialIsometry},
    {"nested_frame_det_bound", EvalNestedFrame},
    {"fan_min_det", EvalFan},
    {"main_bounds", EvalMainBounds},
    {"head_tail_power", EvalPsdOrder<HeadTailPower>},
    {"pairwise_bound", EvalPairwise},
    {"tail_chain", EvalPsdOrder<TailChain>},
    {"reproduce_counterexamples", EvalCounterexamples},
    {"hua_identity_residual", EvalHuaIdentity},
    {"sum_identity_residual", EvalSumIdentity},
    {"hua_det_inequality", EvalHuaDet},
    {"hua_reversal_det", EvalHuaReversal},
    {"marcus_bounds", EvalMarcus},
    {"contraction_main_bound", EvalContractionMain},
    {"hua_strengthened_det", EvalHuaStrengthened},
    {"reversal_bound", EvalReversalBound},
    {"reversal_det", EvalReversalDet},
};

Evaluator FindEvaluator(std::string_view name) {
  for (const auto& e : kEvaluators)
    if (e.name == name) return e.eval;
  throw Error(ErrorCode::kUnknownCheck, "'" + std::string(name) + "'");
}

void Merge(CheckRecord& record, TrialOutcome&& outcome, std::size_t n, std::size_t trial) {
  ++record.trials;
  record.evaluations += outcome.evaluations;
  auto take_min = [](std::optional<double>& acc, const std::optional<double>& v) {
    if (v && (!acc || !(*v >= *acc))) acc = v;
  };
  take_min(record.min_margin, outcome.min_margin);
  take_min(record.min_relative_margin, outcome.min_relative_margin);
  if (outcome.max_identity_residual &&
      (!record.max_identity_residual ||
       !(*outcome.max_identity_residual <= *record.max_identity_residual))) {
    record.max_identity_residual = outcome.max_identity_residual;
  }
  for (auto& v : outcome.violations) record.violations.push_back(std::move(v));
  if (outcome.failure) record.failures.push_back({n, trial, std::move(*outcome.failure)});
}

}  // namespace

TrialOutcome RunTrial(const CampaignConfig& cfg, std::string_view check, std::size_t n,
                      std::size_t trial) {
  const Evaluator eval = FindEvaluator(check);
  TrialContext ctx(cfg, n, trial, TrialSeed(cfg.master_seed, check, n, trial));
  try {
    eval(ctx);
  } catch (const Error& e) {
    TrialOutcome out = std::move(ctx).Finish();
    out.failure = e.what();
    return out;
  }
  return std::move(ctx).Finish();
}

CampaignReport RunCampaign(const CampaignConfig& cfg) {
  cfg.Validate();
  const auto start = std::chrono::steady_clock::now();

  struct Unit {
    std::size_t check;
    std::size_t n;
    std::size_t trial;
  };
  std::vector<Unit> units;
  units.reserve(cfg.checks.size() * cfg.dims.size() * cfg.trials);
  for (std::size_t c = 0; c < cfg.checks.size(); ++c)
    for (std::size_t n : cfg.dims)
      for (std::size_t t = 0; t < cfg.trials; ++t) units.push_back({c, n, t});

  std::vector<TrialOutcome> outcomes(units.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < units.size(); i = next.fetch_add(1)) {
      const Unit& u = units[i];
      outcomes[i] = RunTrial(cfg, cfg.checks[u.check], u.n, u.trial);
    }
  };
  const std::size_t workers = std::min(cfg.workers, std::max<std::size_t>(units.size(), 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  CampaignReport report;
  report.config = cfg;
  for (const auto& name : cfg.checks) {
    CheckRecord record;
    record.name = name;
    report.checks.push_back(std::move(record));
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    Merge(report.checks[units[i].check], std::move(outcomes[i]), units[i].n, units[i].trial);
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace logmaj
