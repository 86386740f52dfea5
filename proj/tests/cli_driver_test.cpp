// Copyright 2026 The cxlab Authors
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

#include "cxlab/cli_driver.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

using namespace cxlab;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cxlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv(kOutputDirEnv);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int invoke(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.push_back("--output-dir");
    args.push_back(dir_.string());
    return cli_main(args, out_, err_);
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  int usage_code(const std::vector<std::string>& args) {
    try {
      parse_args(args);
    } catch (const UsageError& e) {
      message_ = e.what();
      return e.code();
    }
    return 0;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
  std::string message_;
};

}  // namespace

TEST_F(CliTest, ParsesScrambleFlags) {
  const RunConfig c = parse_args({"scramble", "--qubits", "10", "--trials", "1000"});
  EXPECT_EQ(c.subcommand, "scramble");
  EXPECT_EQ(c.flags.at("qubits"), "10");
  EXPECT_EQ(c.flags.at("trials"), "1000");
  EXPECT_EQ(c.seed, 12345u);
  EXPECT_EQ(c.output_dir, fs::path("."));
  EXPECT_FALSE(c.help_text.has_value());
}

TEST_F(CliTest, AcceptsEqualsSyntaxAndSeed) {
  const RunConfig c = parse_args({"scramble", "--qubits=12", "--seed", "7"});
  EXPECT_EQ(c.flags.at("qubits"), "12");
  EXPECT_EQ(c.seed, 7u);
}

TEST_F(CliTest, WdwAcceptsHigherDimension) {
  const RunConfig c = parse_args({"wdw", "--dim", "7"});
  EXPECT_EQ(c.flags.at("dim"), "7");
}

TEST_F(CliTest, ErrorCodes) {
  EXPECT_EQ(usage_code({"badcmd"}), exit_code::kUsage);
  EXPECT_NE(message_.find("badcmd"), std::string::npos);
  EXPECT_EQ(usage_code({}), exit_code::kUsage);
  EXPECT_EQ(usage_code({"scramble", "--bogus", "1"}), exit_code::kUsage);
  EXPECT_NE(message_.find("--bogus"), std::string::npos);
  EXPECT_EQ(usage_code({"scramble", "--qubits", "ten"}), exit_code::kMalformedValue);
  EXPECT_NE(message_.find("--qubits"), std::string::npos);
  EXPECT_EQ(usage_code({"scramble", "--qubits", "7"}), exit_code::kMalformedValue);
  EXPECT_EQ(usage_code({"counting", "--epsilon", "0"}), exit_code::kMalformedValue);
  EXPECT_EQ(usage_code({"scramble", "--qubits"}), exit_code::kMalformedValue);
  EXPECT_EQ(usage_code({"tfd", "--beta", "1"}), exit_code::kMissingFlag);
  EXPECT_NE(message_.find("--spectrum"), std::string::npos);
  EXPECT_EQ(usage_code({"wormhole", "--mu", "1", "--mass", "2"}), exit_code::kUsage);
  EXPECT_EQ(usage_code({"scramble", "extra"}), exit_code::kUsage);
  EXPECT_EQ(cli_main({"badcmd"}, out_, err_), exit_code::kUsage);
}

TEST_F(CliTest, ConfigFileMergesAndCommandLineWins) {
  const fs::path cfg = dir_ / "run.cfg";
  std::ofstream(cfg) << "# comment\nqubits = 12\ntrials=500\nseed=99\n";
  const RunConfig c = parse_args({"scramble", "--config", cfg.string(), "--trials", "700"});
  EXPECT_EQ(c.flags.at("qubits"), "12");
  EXPECT_EQ(c.flags.at("trials"), "700");
  EXPECT_EQ(c.seed, 99u);

  std::ofstream(cfg) << "nonsense=1\n";
  EXPECT_EQ(usage_code({"scramble", "--config", cfg.string()}), exit_code::kUsage);
  EXPECT_NE(message_.find("--nonsense"), std::string::npos);
  std::ofstream(cfg) << "qubits=abc\n";
  EXPECT_EQ(usage_code({"scramble", "--config", cfg.string()}), exit_code::kMalformedValue);
  EXPECT_EQ(usage_code({"scramble", "--config", (dir_ / "missing.cfg").string()}),
            exit_code::kMalformedValue);
}

TEST_F(CliTest, OutputDirectoryPrecedence) {
  setenv(kOutputDirEnv, "/tmp/from_env", 1);
  EXPECT_EQ(parse_args({"wdw"}).output_dir, fs::path("/tmp/from_env"));
  EXPECT_EQ(parse_args({"wdw", "--output-dir", "/tmp/from_flag"}).output_dir, fs::path("/tmp/from_flag"));
  unsetenv(kOutputDirEnv);
}

TEST_F(CliTest, HelpDocumentsFormulas) {
  const RunConfig c = parse_args({"scramble", "--help"});
  ASSERT_TRUE(c.help_text.has_value());
  EXPECT_NE(c.help_text->find("tau* = ln K"), std::string::npos);
  EXPECT_EQ(run(c, out_, err_), exit_code::kOk);
  for (const char* cmd : {"bfs", "curvature", "counting", "tfd", "wormhole", "wdw", "paper-suite"}) {
    const RunConfig h = parse_args({cmd, "--help"});
    ASSERT_TRUE(h.help_text.has_value()) << cmd;
    EXPECT_NE(h.help_text->find("CSV:"), std::string::npos) << cmd;
  }
  EXPECT_TRUE(parse_args({"--help"}).help_text.has_value());
}

TEST_F(CliTest, WdwDefaultSummary) {
  ASSERT_EQ(invoke({"wdw"}), exit_code::kOk) << err_.str();
  const std::string summary = slurp("wdw_summary.txt");
  EXPECT_NE(summary.find("total_rate/2M: 1.0000000\n"), std::string::npos) << summary;
  EXPECT_NE(summary.find("seed: 12345\n"), std::string::npos);
  EXPECT_NE(summary.find("wall_time_seconds: "), std::string::npos);
  const std::string csv = slurp("wdw.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,mu,M,bulk_rate,boundary_rate,total_rate,lloyd_saturation");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
}

TEST_F(CliTest, ScrambleCsvIsDeterministic) {
  ASSERT_EQ(invoke({"scramble", "--qubits", "10", "--trials", "200"}), exit_code::kOk) << err_.str();
  const std::string first = slurp("scramble.csv");
  EXPECT_EQ(first.substr(0, first.find('\n')), "tau,mc_mean,mc_stderr,logistic,precursor");
  EXPECT_EQ(first.find('\r'), std::string::npos);
  ASSERT_EQ(invoke({"scramble", "--qubits", "10", "--trials", "200"}), exit_code::kOk);
  EXPECT_EQ(slurp("scramble.csv"), first);
  ASSERT_EQ(invoke({"scramble", "--qubits", "10", "--trials", "200", "--seed", "1"}), exit_code::kOk);
  EXPECT_NE(slurp("scramble.csv"), first);
}

TEST_F(CliTest, NumbersUseSeventeenDigits) {
  ASSERT_EQ(invoke({"counting", "--max-qubits", "2", "--epsilon", "0.1"}), exit_code::kOk) << err_.str();
  const std::string csv = slurp("counting.csv");
  const std::string row = csv.substr(csv.find('\n') + 1);
  // epsilon 0.1 printed with 17 significant digits.
  EXPECT_EQ(row.rfind("2,0.10000000000000001,", 0), 0u) << row;
  EXPECT_NE(slurp("counting_summary.txt").find("params_2local_k4: 54\n"), std::string::npos);
}

TEST_F(CliTest, BfsReportsTargetComplexity) {
  // SWAP in the computational basis.
  const std::string swap = "1,0,0,0,0,0,0,0, 0,0,0,0,1,0,0,0, 0,0,1,0,0,0,0,0, 0,0,0,0,0,0,1,0";
  ASSERT_EQ(invoke({"bfs", "--gateset", "cnot", "--target", swap}), exit_code::kOk) << err_.str();
  const std::string summary = slurp("bfs_summary.txt");
  EXPECT_NE(summary.find("target_complexity: 3\n"), std::string::npos) << summary;
  EXPECT_NE(summary.find("ball_size: 6\n"), std::string::npos) << summary;
  EXPECT_EQ(invoke({"bfs", "--target", "1,0"}), exit_code::kMalformedValue);
  EXPECT_EQ(invoke({"bfs", "--target", "2,0,0,0,0,0,0,0, 0,0,1,0,0,0,0,0, 0,0,0,0,1,0,0,0, 0,0,0,0,0,0,1,0"}),
            exit_code::kMalformedValue);
}

TEST_F(CliTest, TfdRunsFromInlineAndFileSpectrum) {
  ASSERT_EQ(invoke({"tfd", "--spectrum", "0,1,2.5", "--beta", "0", "--tl", "1", "--sign", "minus"}),
            exit_code::kOk)
      << err_.str();
  std::string summary = slurp("tfd_summary.txt");
  EXPECT_NE(summary.find("entanglement_entropy: 1.0986122886681"), std::string::npos) << summary;
  const fs::path spec = dir_ / "spec.txt";
  std::ofstream(spec) << "0\n1\n2.5\n";
  ASSERT_EQ(invoke({"tfd", "--spectrum", spec.string(), "--tl", "1", "--tr", "1", "--sign", "minus"}),
            exit_code::kOk);
  summary = slurp("tfd_summary.txt");
  EXPECT_NE(summary.find("final_fidelity: 1\n"), std::string::npos) << summary;
  EXPECT_EQ(invoke({"tfd", "--spectrum", "0,x"}), exit_code::kMalformedValue);
}

TEST_F(CliTest, CurvatureAndWormholeRun) {
  ASSERT_EQ(invoke({"curvature", "--qubits", "4,6", "--trials", "5"}), exit_code::kOk) << err_.str();
  EXPECT_NE(slurp("curvature_summary.txt").find("trace_ratio_loglog_slope: "), std::string::npos);
  ASSERT_EQ(invoke({"wormhole", "--mu", "10", "--egrid-points", "10"}), exit_code::kOk) << err_.str();
  const std::string summary = slurp("wormhole_summary.txt");
  EXPECT_NE(summary.find("r_m_high_temperature_estimate: "), std::string::npos);
  EXPECT_NE(summary.find("cv_ratio: "), std::string::npos);
  const std::string csv = slurp("wormhole.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
}
