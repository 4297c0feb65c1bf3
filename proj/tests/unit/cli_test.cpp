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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "logmaj/campaign_io.hpp"
#include "logmaj/generators.hpp"
#include "logmaj/matrix_io.hpp"
#include "logmaj/registry.hpp"

#ifndef LOGMAJ_TOOL_PATH
#error "LOGMAJ_TOOL_PATH must name the logmaj executable"
#endif

namespace logmaj {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("logmaj_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Save(const std::string& name, const ComplexMatrix& m) {
    const fs::path p = dir_ / name;
    SaveMatrixFile(p, m);
    return p.string();
  }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ListPrintsEveryCheck) {
  EXPECT_EQ(Run({"list"}), 0);
  EXPECT_NE(out_.str().find("main_bounds"), std::string::npos);
  EXPECT_NE(out_.str().find("reproduce_counterexamples"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Run({}), 2);
  EXPECT_EQ(Run({"frobnicate"}), 2);
  EXPECT_EQ(Run({"check", "--name", "main_bounds"}), 2);
  EXPECT_EQ(Run({"check", "--name", "main_bounds", "--n", "2", "--trials", "1", "--seed", "1",
                 "--real", "--complex"}),
            2);
  EXPECT_EQ(Run({"check", "--name", "nope", "--n", "2", "--trials", "1", "--seed", "1"}), 2);
  EXPECT_EQ(Run({"check", "--name", "main_bounds", "--n", "2", "--trials", "0", "--seed", "1"}), 2);
}

TEST_F(CliTest, CheckRunsSeededTrials) {
  EXPECT_EQ(Run({"check", "--name", "minkowski_det", "--n", "2", "--trials", "100", "--seed", "1"}), 0);
  EXPECT_NE(out_.str().find("violations 0"), std::string::npos);
  EXPECT_EQ(Run({"check", "--name", "main_bounds", "--n", "3", "--trials", "10", "--seed", "4",
                 "--real", "--tol", "1e-8"}),
            0);
  EXPECT_EQ(Run({"check", "--name", "hua_det_inequality", "--n", "3", "--trials", "10", "--seed", "4",
                 "--delta", "0.5"}),
            0);
}

TEST_F(CliTest, CheckWithViolationsExitsOne) {
  EXPECT_EQ(Run({"check", "--name", "tail_chain", "--n", "8", "--trials", "100", "--seed", "1",
                 "--tol", "0"}),
            1);
  EXPECT_NE(out_.str().find("violation n=8"), std::string::npos);
}

TEST_F(CliTest, VerifyMinkowskiOnDiagonalFiles) {
  const auto a = Save("a.json", ComplexMatrix::Diagonal({1, 4}));
  const auto b = Save("b.json", ComplexMatrix::Diagonal({4, 1}));
  EXPECT_EQ(Run({"verify", "--name", "minkowski_det", "--a", a, "--b", b, "--json"}), 0);
  EXPECT_NE(out_.str().find("\"lhs\": 5.0"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("\"satisfied\": true"), std::string::npos);
  EXPECT_EQ(Run({"verify", "--name", "main_bounds", "--a", a, "--b", b, "--index", "1,2"}), 0);
  EXPECT_NE(out_.str().find("satisfied"), std::string::npos);
}

TEST_F(CliTest, VerifyPreconditionFailureNamesPredicate) {
  const auto a = Save("a.json", ComplexMatrix::Diagonal({1, -4}));
  const auto b = Save("b.json", ComplexMatrix::Identity(2));
  EXPECT_EQ(Run({"verify", "--name", "fiedler_chain", "--a", a, "--b", b}), 2);
  EXPECT_NE(err_.str().find("PreconditionFailed(NotPSD)"), std::string::npos) << err_.str();
}

TEST_F(CliTest, VerifyParseErrorsExitTwo) {
  const fs::path bad = dir_ / "bad.json";
  WriteTextFile(bad, R"({"n": 2, "m": 2, "entries": [[1, 2], [3]]})");
  const auto b = Save("b.json", ComplexMatrix::Identity(2));
  EXPECT_EQ(Run({"verify", "--name", "minkowski_det", "--a", bad.string(), "--b", b}), 2);
  EXPECT_NE(err_.str().find("ParseError"), std::string::npos);
  EXPECT_EQ(Run({"verify", "--name", "minkowski_det", "--a", (dir_ / "missing.json").string(), "--b", b}), 2);
  EXPECT_EQ(Run({"verify", "--name", "main_bounds", "--a", b, "--b", b, "--index", "1,x"}), 2);
  EXPECT_EQ(Run({"verify", "--name", "main_bounds", "--a", b, "--b", b, "--index", "2,1"}), 2);
  EXPECT_EQ(Run({"verify", "--name", "minkowski_det", "--a", b}), 2);
}

TEST_F(CliTest, VerifyIdentityAndCounterexamples) {
  const auto z = Save("z.json", ComplexMatrix::Zero(3, 3));
  EXPECT_EQ(Run({"verify", "--name", "hua_identity_residual", "--a", z, "--b", z, "--json"}), 0);
  EXPECT_NE(out_.str().find("\"residual\": 0.0"), std::string::npos) << out_.str();
  EXPECT_EQ(Run({"verify", "--name", "reproduce_counterexamples"}), 0);
  EXPECT_NE(out_.str().find("VIOLATED"), std::string::npos);
}

TEST_F(CliTest, VerifyViolationExitsOne) {
  // At zero tolerance some random instance lands a rounding-level negative
  // margin; search deterministically for one and replay it through files.
  GenConfig cfg;
  cfg.n = 8;
  for (cfg.seed = 0; cfg.seed < 500; ++cfg.seed) {
    const ComplexMatrix a = RandomPsd(cfg);
    cfg.seed += 10000;
    const ComplexMatrix b = RandomPsd(cfg);
    cfg.seed -= 10000;
    for (std::size_t k = 1; k <= 8; ++k) {
      if (VerifyMatrices("tail_chain", a, b, std::vector<std::size_t>{k}, 0.0).satisfied) continue;
      const auto pa = Save("a.json", a);
      const auto pb = Save("b.json", b);
      const std::string index = std::to_string(k);
      EXPECT_EQ(Run({"verify", "--name", "tail_chain", "--a", pa, "--b", pb, "--index", index, "--tol", "0"}), 1);
      EXPECT_EQ(Run({"verify", "--name", "tail_chain", "--a", pa, "--b", pb, "--index", index}), 0);
      return;
    }
  }
  GTEST_SKIP() << "no rounding-level violation found";
}

TEST_F(CliTest, NegativeToleranceRejected) {
  EXPECT_EQ(Run({"verify", "--name", "reproduce_counterexamples", "--tol", "-1"}), 2);
  EXPECT_EQ(Run({"check", "--name", "minkowski_det", "--n", "2", "--trials", "1", "--seed", "1",
                 "--tol", "-1"}),
            2);
}

TEST_F(CliTest, CampaignWritesRoundTrippableReport) {
  const fs::path cfg = dir_ / "cfg.json";
  const fs::path out = dir_ / "report.json";
  WriteTextFile(cfg, R"({"checks": ["minkowski_det", "tail_chain"], "dims": [2, 3], "trials": 20})");
  EXPECT_EQ(Run({"campaign", "--config", cfg.string(), "--out", out.string()}), 0);
  const auto report = ParseCampaignReport(ReadTextFile(out));
  EXPECT_EQ(report.total_violations(), 0u);
  EXPECT_EQ(report.check("tail_chain").trials, 40u);

  WriteTextFile(cfg, R"({"checks": ["tail_chain"], "dims": [8], "trials": 100, "tolerance": 0})");
  EXPECT_EQ(Run({"campaign", "--config", cfg.string(), "--out", out.string()}), 1);

  WriteTextFile(cfg, R"({"trials": 0})");
  EXPECT_EQ(Run({"campaign", "--config", cfg.string(), "--out", out.string()}), 2);
  EXPECT_EQ(Run({"campaign", "--config", (dir_ / "none.json").string(), "--out", out.string()}), 2);
  WriteTextFile(cfg, R"({"dims": [2], "trials": 1})");
  EXPECT_EQ(Run({"campaign", "--config", cfg.string()}), 2);
}

int Spawn(const std::string& args) {
  const std::string cmd = std::string(LOGMAJ_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, ExecutableExitCodes) {
  EXPECT_EQ(Spawn("list"), 0);
  EXPECT_EQ(Spawn("check --name minkowski_det --n 2 --trials 100 --seed 1"), 0);
  EXPECT_EQ(Spawn("check --name tail_chain --n 8 --trials 100 --seed 1 --tol 0"), 1);
  EXPECT_EQ(Spawn("check --name minkowski_det"), 2);
  const auto a = Save("a.json", ComplexMatrix::Diagonal({1, -4}));
  EXPECT_EQ(Spawn("verify --name fiedler_chain --a " + a + " --b " + a), 2);
}

}  // namespace
}  // namespace logmaj
