#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgue_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qgue::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliMoment, Examples) {
  auto r = run({"moment", "--power-sum", "2", "--n-vars", "2", "--method", "fast"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2+q+q^2\n");
  r = run({"moment", "--schur", "1,1", "--n-vars", "2", "--method", "oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1\n");
  r = run({"moment", "--power-sum", "4", "--n-vars", "2", "--at-q", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "18\n");
}

TEST(CliMoment, HermiteSquaredAndFormats) {
  auto r = run({"moment", "--hermite-sq", "1,1"});
  EXPECT_EQ(r.out, "1+q+q^2\n");
  r = run({"moment", "--hermite-sq", "1,1", "--format", "latex"});
  EXPECT_EQ(r.out, "[3]_q\n");
  r = run({"moment", "--schur", "2", "--n-vars", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["value"], "1+q+q^2");
  EXPECT_EQ(j["method"], "fast");
  EXPECT_EQ(j["query"]["schur"], "2");
}

TEST(CliMoment, ClosedMethodWarns) {
  auto r = run({"moment", "--power-sum", "2", "--n-vars", "2", "--method", "closed"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q+q^2\n");
  EXPECT_NE(r.err.find("unverified"), std::string::npos);
  r = run({"moment", "--power-sum", "2", "--n-vars", "2"});
  EXPECT_TRUE(r.err.empty());
}

TEST(CliMoment, FastAndOracleAgree) {
  for (const char* kappa : {"0", "2", "1,1", "3,1", "2,2", "2,1,1", "4"})
    for (const char* n : {"1", "2", "3"}) {
      const auto fast = run({"moment", "--schur", kappa, "--n-vars", n, "--method", "fast"});
      const auto oracle = run({"moment", "--schur", kappa, "--n-vars", n, "--method", "oracle"});
      EXPECT_EQ(fast.code, 0);
      EXPECT_EQ(fast.out, oracle.out) << kappa << " N=" << n;
    }
}

TEST(CliMoment, UsageErrors) {
  EXPECT_EQ(run({"moment"}).code, 2);
  EXPECT_EQ(run({"moment", "--schur", "1", "--power-sum", "2"}).code, 2);
  EXPECT_EQ(run({"moment", "--schur", "1,2"}).code, 2);
  EXPECT_EQ(run({"moment", "--schur", "2", "--method", "slow"}).code, 2);
  EXPECT_EQ(run({"moment", "--schur", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"moment", "--hermite-sq", "1"}).code, 2);
  EXPECT_EQ(run({"moment", "--schur", "2", "--at-q", "one"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliMoment, GuardrailAndBadPointErrors) {
  auto r = run({"moment", "--schur", "2", "--n-vars", "6", "--method", "oracle"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("5"), std::string::npos);
  r = run({"moment", "--hermite-sq", "1,1", "--method", "oracle", "--at-q", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  for (const char* bad : {"1/0", "abc"}) {
    r = run({"moment", "--power-sum", "2", "--n-vars", "1", "--at-q", bad});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_NE(r.err.find("error"), std::string::npos);
  }
}

TEST(CliMoment, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("moment"), std::string::npos);
}

TEST(CliVerify, Examples) {
  EXPECT_EQ(run({"verify", "--suite", "theorem3", "--max-weight", "4", "--max-vars", "3"}).code, 0);
  const auto t4 = run({"verify", "--suite", "theorem4", "--max-weight", "4", "--max-vars", "2"});
  EXPECT_EQ(t4.code, 1);
  EXPECT_NE(t4.out.find("ratio=-1"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "duality", "--max-n", "30"}).code, 0);
}

TEST(CliVerify, GuardrailExit) {
  auto r = run({"verify", "--suite", "theorem3", "--max-vars", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("max-vars"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
}

TEST(CliVerify, ReportFileRoundTrips) {
  const auto path = std::filesystem::temp_directory_path() / "qgue_cli_report_test.json";
  const auto r = run({"verify", "--suite", "theorem4", "--max-weight", "4", "--max-vars", "2", "--report",
                      path.string(), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), r.out);
  const auto j = nlohmann::ordered_json::parse(file.str());
  EXPECT_EQ(j.dump(2) + "\n", file.str());
  std::filesystem::remove(path);
}

TEST(CliVerify, ExitZeroIffNoDiscrepancy) {
  const auto r = run({"verify", "--suite", "qhz", "--format", "json"});
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(r.code, j["summary"]["discrepant"] == 0 ? 0 : 1);
  const auto s = run({"verify", "--suite", "sigma", "--format", "json"});
  const auto k = nlohmann::ordered_json::parse(s.out);
  EXPECT_EQ(s.code, k["summary"]["discrepant"] == 0 ? 0 : 1);
}

TEST(CliTable, HarerZagier) {
  auto r = run({"table", "--harer-zagier", "--max-m", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][0]["epsilon"], nlohmann::ordered_json::parse("[1]"));
  EXPECT_EQ(j["rows"][1]["epsilon"], nlohmann::ordered_json::parse("[2,1]"));
  EXPECT_EQ(j["rows"][1]["pairings"], nlohmann::ordered_json::parse("[2,1]"));
  EXPECT_EQ(j["rows"][2]["epsilon"], nlohmann::ordered_json::parse("[5,10]"));
  EXPECT_TRUE(j["rows"][2]["match"]);
  EXPECT_EQ(j.dump(2) + "\n", r.out);

  r = run({"table", "--harer-zagier", "--max-m", "2"});
  EXPECT_NE(r.out.find("2 1"), std::string::npos);
  EXPECT_EQ(run({"table", "--harer-zagier", "--max-m", "2", "--format", "latex"}).code, 0);
  EXPECT_EQ(run({"table", "--harer-zagier", "--max-m", "7"}).code, 2);
  EXPECT_EQ(run({"table", "--max-m", "2"}).code, 2);
}
