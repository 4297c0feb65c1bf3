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

#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "logmaj/campaign.hpp"
#include "logmaj/campaign_io.hpp"
#include "logmaj/error.hpp"
#include "logmaj/matrix_io.hpp"
#include "logmaj/registry.hpp"

namespace logmaj::cli {
namespace {

std::vector<std::size_t> ParseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1) {
      throw Error(ErrorCode::kParseError, "bad index list '" + text + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw Error(ErrorCode::kParseError, "empty index list");
  return out;
}

void PrintBound(const BoundReport& r, std::ostream& out) {
  out << r.check_name << ": " << (r.satisfied ? "satisfied" : "VIOLATED") << "  margin "
      << r.margin << "  scale " << r.scale << "  tol " << r.tolerance << '\n';
  for (const auto& l : r.links) {
    out << "  " << std::left << std::setw(20) << l.label << std::right << l.greater
        << " >= " << l.lesser << "  (margin " << l.margin() << ")\n";
  }
}

void PrintRecord(const CheckRecord& c, std::ostream& out) {
  out << c.name << ": trials " << c.trials << ", evaluations " << c.evaluations
      << ", violations " << c.violations.size();
  if (c.min_margin) out << ", min margin " << *c.min_margin;
  if (c.min_relative_margin) out << ", min relative margin " << *c.min_relative_margin;
  if (c.max_identity_residual) out << ", max residual " << *c.max_identity_residual;
  if (!c.failures.empty()) out << ", failed trials " << c.failures.size();
  out << '\n';
  for (const auto& v : c.violations) {
    out << "  violation n=" << v.n << " trial=" << v.trial << " seed=" << v.trial_seed
        << " link=" << v.link << " value=" << v.value;
    if (!v.index.empty()) {
      out << " I=";
      for (std::size_t t = 0; t < v.index.size(); ++t) out << (t ? "," : "") << v.index[t];
    }
    out << '\n';
  }
  for (const auto& f : c.failures) {
    out << "  failure n=" << f.n << " trial=" << f.trial << ": " << f.error << '\n';
  }
}

int ExitFor(const CampaignReport& report) {
  if (report.total_violations() > 0) return kExitViolation;
  if (report.total_failures() > 0) return kExitError;
  return kExitSatisfied;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification harness for log-majorization and Hua-Marcus inequalities",
               "logmaj"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List registered checks");

  struct {
    std::string name;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double tol = kDefaultBoundTolerance;
    double delta = 0.05;
    bool complex = false;
    bool real = false;
    std::size_t workers = 1;
  } check_args;
  auto* check = app.add_subcommand("check", "Run one check over seeded random trials");
  check->add_option("--name", check_args.name, "Check name")->required();
  check->add_option("--n", check_args.n, "Dimension")->required();
  check->add_option("--trials", check_args.trials, "Number of trials")->required();
  check->add_option("--seed", check_args.seed, "Master seed")->required();
  check->add_option("--tol", check_args.tol, "Relative tolerance")->check(CLI::NonNegativeNumber);
  check->add_option("--delta", check_args.delta, "Contraction margin");
  auto* complex_flag = check->add_flag("--complex", check_args.complex, "Complex field (default)");
  check->add_flag("--real", check_args.real, "Real field")->excludes(complex_flag);
  check->add_option("--workers", check_args.workers, "Worker threads");

  struct {
    std::string name;
    std::string a;
    std::string b;
    std::string index;
    double tol = kDefaultBoundTolerance;
    bool json = false;
  } verify_args;
  auto* verify = app.add_subcommand("verify", "Evaluate one check on matrices from files");
  verify->add_option("--name", verify_args.name, "Check name")->required();
  verify->add_option("--a", verify_args.a, "Matrix JSON file for A");
  verify->add_option("--b", verify_args.b, "Matrix JSON file for B");
  verify->add_option("--index", verify_args.index, "Index list, e.g. 1,3,4");
  verify->add_option("--tol", verify_args.tol, "Relative tolerance")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", verify_args.json, "Print the report as JSON");

  struct {
    std::string config;
    std::string out;
    std::optional<std::size_t> workers;
  } campaign_args;
  auto* campaign = app.add_subcommand("campaign", "Run a campaign from a config file");
  campaign->add_option("--config", campaign_args.config, "CampaignConfig JSON")->required();
  campaign->add_option("--out", campaign_args.out, "Report destination");
  campaign->add_option("--workers", campaign_args.workers, "Override worker count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitSatisfied;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (list->parsed()) {
      out << ListChecksTable();
      return kExitSatisfied;
    }

    if (check->parsed()) {
      CampaignConfig cfg = CampaignConfig::Default();
      cfg.checks = {check_args.name};
      cfg.dims = {check_args.n};
      cfg.trials = check_args.trials;
      cfg.master_seed = check_args.seed;
      cfg.tolerance = check_args.tol;
      cfg.contraction_margin = check_args.delta;
      cfg.field = check_args.real ? Field::kReal : Field::kComplex;
      cfg.workers = check_args.workers;
      const CampaignReport report = RunCampaign(cfg);
      for (const auto& c : report.checks) PrintRecord(c, out);
      return ExitFor(report);
    }

    if (verify->parsed()) {
      const CheckInfo& info = FindCheck(verify_args.name);
      ComplexMatrix a, b;
      if (info.kind != CheckKind::kReproduction) {
        if (verify_args.a.empty() || verify_args.b.empty()) {
          err << "usage error: --a and --b are required for " << info.name << '\n';
          return kExitError;
        }
        a = LoadMatrixFile(verify_args.a);
        b = LoadMatrixFile(verify_args.b);
      }
      std::optional<std::vector<std::size_t>> index;
      if (!verify_args.index.empty()) index = ParseIndexList(verify_args.index);
      const VerifyResult result = VerifyMatrices(info.name, a, b, index, verify_args.tol);
      if (verify_args.json) {
        out << VerifyResultToJson(result) << '\n';
      } else {
        for (const auto& r : result.bounds) PrintBound(r, out);
        if (result.identity) {
          const auto& r = *result.identity;
          out << r.check_name << ": " << (r.satisfied ? "satisfied" : "VIOLATED")
              << "  residual " << r.residual << "  scale " << r.scale << "  tol "
              << r.tolerance << '\n';
        }
      }
      return result.satisfied ? kExitSatisfied : kExitViolation;
    }

    CampaignConfig cfg = ParseCampaignConfig(ReadTextFile(campaign_args.config));
    if (campaign_args.workers) cfg.workers = *campaign_args.workers;
    if (!campaign_args.out.empty()) cfg.output = campaign_args.out;
    if (cfg.output.empty()) {
      err << "usage error: no output path (--out or config \"output\")\n";
      return kExitError;
    }
    const CampaignReport report = RunCampaign(cfg);
    WriteTextFile(cfg.output, CampaignReportToJson(report) + "\n");
    for (const auto& c : report.checks) PrintRecord(c, out);
    out << "total violations " << report.total_violations() << ", wall time "
        << report.wall_time_seconds << " s\n";
    return ExitFor(report);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kUnknownCheck:
      case ErrorCode::kBadConfig:
        err << e.what() << '\n';
        break;
      default:
        err << "PreconditionFailed(" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
    }
    return kExitError;
  }
}

}  // namespace logmaj::cli
