#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wcc/cli.hpp"
#include "wcc/version.hpp"
#include <json.hpp>

namespace wcc::cli {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "wcclab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("wcclab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    const auto path = dir_ / name;
    std::ofstream(path) << body;
    return path.string();
  }

  std::filesystem::path dir_;
};

const char* kCross9 =
    R"({"alphabet_size":5,"num_informants":2,"points":[[0,0],[0,1],[0,2],[0,3],[0,4],[1,0],[2,0],[3,0],[4,0]]})";

TEST_F(CliTest, AnalyzeCross) {
  const std::string input = write("cross9.json", kCross9);
  const RunResult r = invoke({"analyze", "--input", input, "--space", "5x2"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bits_worst"], 6);
  EXPECT_EQ(j["max_rate"], true);
  EXPECT_EQ(j["measures"]["sparsity"]["value"], "9/25");
  EXPECT_EQ(j["model"], "block-serial");
}

TEST_F(CliTest, AnalyzeBitAdaptiveIsLabelled) {
  const std::string input = write("cross9.json", kCross9);
  const RunResult r = invoke({"analyze", "--input", input, "--model", "bit-adaptive"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["model"], "bit-adaptive");
  EXPECT_EQ(j["bits_worst"], 4);
}

TEST_F(CliTest, AnalyzeSingletonGrid) {
  const std::string input = write("single.txt", "3x2\n...\n.x.\n...\n");
  const RunResult r = invoke({"analyze", "--input", input});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bits_worst"], 0);
  EXPECT_EQ(j["informants_worst"], 0);
  EXPECT_EQ(j["degenerate"], true);
}

TEST_F(CliTest, AnalyzeStrategies) {
  const std::string input = write("diag.json",
                                  R"({"alphabet_size":2,"num_informants":2,"points":[[0,0],[1,1]]})");
  const RunResult r = invoke({"analyze", "--input", input, "--strategies"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("\"root\""), std::string::npos);
}

TEST_F(CliTest, AnalyzeErrors) {
  EXPECT_EQ(invoke({"analyze", "--input", (dir_ / "missing.json").string()}).code, kUsageError);
  const std::string bad = write("bad.json", R"({"alphabet_size":2,"num_informants":2,"points":[]})");
  EXPECT_EQ(invoke({"analyze", "--input", bad}).code, kUsageError);
  const std::string input = write("cross9.json", kCross9);
  EXPECT_EQ(invoke({"analyze", "--input", input, "--space", "4x2"}).code, kUsageError);
}

TEST_F(CliTest, ThresholdsFormula) {
  const RunResult r = invoke({"thresholds", "--space", "5x2", "--mode", "formula", "--format", "text"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "9,20,3,5\n");
  // Closed forms are not bound by the cell cap.
  const RunResult big = invoke({"thresholds", "--space", "10x10", "--format", "csv"});
  ASSERT_EQ(big.code, kSuccess) << big.err;
  EXPECT_EQ(big.out.substr(0, 12), "M1,M2,M3,M4\n");
}

TEST_F(CliTest, ThresholdsOracle) {
  const RunResult r = invoke({"thresholds", "--space", "3x2", "--mode", "oracle", "--format", "text"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "5,6,3,3\n");
  EXPECT_EQ(invoke({"thresholds", "--space", "9x9", "--mode", "oracle"}).code, kUsageError);
}

TEST_F(CliTest, EnumerateCsv) {
  const RunResult r = invoke({"enumerate", "--space", "3x2", "--cardinality", "3", "--predicate",
                              "all-informants", "--format", "csv"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out,
            "cardinality,exists_incompressible,all_incompressible,label,count,total\n"
            "3,true,false,mixed,36,84\n");
}

TEST_F(CliTest, RegionsCsv) {
  const RunResult r = invoke({"regions", "--space", "3x2", "--kind", "bits"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[4], "4,false,false,all_compressible,,126");
  EXPECT_EQ(rows[5], "5,true,false,mixed,,126");
  EXPECT_EQ(rows[7], "7,true,true,all_incompressible,,36");
}

TEST_F(CliTest, WitnessGrid) {
  const RunResult r = invoke({"witness", "--space", "2x2", "--cardinality", "3", "--predicate",
                              "max-rate-bits", "--function", "bitor"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "2x2\nxx\nx.\n");
  const RunResult none = invoke({"witness", "--space", "2x2", "--cardinality", "2", "--predicate",
                                 "max-rate-bits"});
  ASSERT_EQ(none.code, kSuccess);
  EXPECT_EQ(none.out, "none\n");
}

TEST_F(CliTest, VerifySuites) {
  EXPECT_EQ(invoke({"verify", "--suite", "proposition"}).code, kSuccess);
  const RunResult lemmas = invoke({"verify", "--suite", "lemmas", "--space", "3x2"});
  ASSERT_EQ(lemmas.code, kSuccess) << lemmas.out;
  const auto j = nlohmann::json::parse(lemmas.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(invoke({"verify", "--suite", "invariants", "--space", "2x2"}).code, kSuccess);
  const RunResult counts =
      invoke({"verify", "--suite", "counts", "--space", "3x2", "--predicate", "all-informants"});
  EXPECT_EQ(counts.code, kSuccess) << counts.out;
}

TEST_F(CliTest, VerifyFailureIsExitOne) {
  const RunResult r = invoke({"verify", "--suite", "proposition", "--q-range", "2..3", "--n-range", "2..2"});
  EXPECT_EQ(r.code, kVerificationFailed);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ok"], false);
  // (4,2) is a known max-rate divergence from the closed forms.
  EXPECT_EQ(invoke({"verify", "--suite", "lemmas", "--space", "4x2"}).code, kVerificationFailed);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"thresholds", "--space", "3x2", "--bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"thresholds", "--space", "3by2"}).code, kUsageError);
  EXPECT_EQ(invoke({"thresholds", "--space", "3x2", "--function", "xor"}).code, kUsageError);
  EXPECT_EQ(invoke({"enumerate", "--space", "3x2"}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
}

TEST_F(CliTest, GuardsNeedAcknowledgement) {
  EXPECT_EQ(invoke({"enumerate", "--space", "3x2", "--cardinality", "3", "--enum-guard",
                    "200000000"})
                .code,
            kUsageError);
  EXPECT_EQ(invoke({"enumerate", "--space", "3x2", "--cardinality", "3", "--enum-guard",
                    "200000000", "--allow-large"})
                .code,
            kSuccess);
  EXPECT_EQ(invoke({"thresholds", "--space", "6x2", "--mode", "oracle", "--cell-cap", "40"}).code,
            kUsageError);
}

TEST_F(CliTest, GuardRefusalIsExitThree) {
  const RunResult r =
      invoke({"enumerate", "--space", "5x2", "--cardinality", "9", "--enum-guard", "100"});
  EXPECT_EQ(r.code, kGuardRefused);
  EXPECT_NE(r.err.find("EnumerationTooLarge"), std::string::npos);
  const std::string input = write("full.json",
                                  R"({"alphabet_size":3,"num_informants":2,"points":[[0,0],[0,1],[0,2],[1,0],[1,1],[1,2],[2,0],[2,1],[2,2]]})");
  EXPECT_EQ(invoke({"analyze", "--input", input, "--model", "bit-adaptive", "--state-cap", "2"}).code,
            kGuardRefused);
}

TEST_F(CliTest, JobsDoNotChangeOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"enumerate", "--space", "4x2", "--cardinality", "5", "--list"},
        std::vector<std::string>{"regions", "--space", "3x2", "--counts", "--format", "json"},
        std::vector<std::string>{"thresholds", "--space", "4x2", "--mode", "oracle"}}) {
    auto one = args;
    one.insert(one.end(), {"--jobs", "1"});
    auto three = args;
    three.insert(three.end(), {"--jobs", "3"});
    const RunResult a = invoke(one);
    const RunResult b = invoke(three);
    ASSERT_EQ(a.code, kSuccess) << a.err;
    EXPECT_EQ(a.out, b.out) << args[0];
  }
}

TEST_F(CliTest, OutputFile) {
  const std::string path = (dir_ / "t.csv").string();
  const RunResult r = invoke({"thresholds", "--space", "2x2", "--format", "csv", "-o", path});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(body.str(), "M1,M2,M3,M4\n3,2,3,2\n");
}

TEST_F(CliTest, Version) {
  const RunResult r = invoke({"--version"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find(kVersion), std::string::npos);
}

}  // namespace
}  // namespace wcc::cli
