#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qverify/cli.hpp"

using qverify::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qverify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> jsonLines(const std::string& text) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
  }
  return lines;
}

}  // namespace

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(invoke({"verify", "eq2.13", "--L", "0..40"}).code, qverify::cli::kExitOk);
  EXPECT_EQ(invoke({"verify", "eq2.21", "--nu", "2", "--s", "0..1", "--L", "0..20"}).code, qverify::cli::kExitOk);
  const auto bogus = invoke({"verify", "bogus-id"});
  EXPECT_EQ(bogus.code, qverify::cli::kExitConfig);
  EXPECT_NE(bogus.err.find("UnknownIdentity"), std::string::npos);
}

TEST(Cli, FailingReadingExitsOne) {
  EXPECT_EQ(invoke({"verify", "eq3.14-as-printed", "--cap", "10"}).code, qverify::cli::kExitFailure);
  EXPECT_EQ(invoke({"verify", "eq3.14-pattern", "--cap", "10"}).code, qverify::cli::kExitOk);
}

TEST(Cli, MissingParameterIsConfigError) {
  const auto r = invoke({"verify", "eq2.16"});
  EXPECT_EQ(r.code, qverify::cli::kExitConfig);
  EXPECT_NE(r.err.find("MissingParam"), std::string::npos);
}

TEST(Cli, NegativeRangesUseEqualsForm) {
  EXPECT_EQ(invoke({"verify", "eq2.1", "--L", "0..4", "--a=-3..3"}).code, qverify::cli::kExitOk);
}

TEST(Cli, ExpandBuilders) {
  EXPECT_EQ(invoke({"expand", "qbinom", "2", "2"}).out, "1 + q + 2*q^2 + q^3 + q^4\n");
  EXPECT_EQ(invoke({"expand", "kernel", "C", "1", "1"}).out, "q\n");
  EXPECT_EQ(invoke({"expand", "g", "--N", "1", "--M", "1", "--alphaK", "5", "--betaK", "4", "--K", "3"}).out, "1 + q\n");
  EXPECT_EQ(invoke({"expand", "pochhammer", "-1", "1", "1", "2"}).out, "1 + q + q^2 + q^3\n");
  EXPECT_EQ(invoke({"expand", "nonsense"}).code, qverify::cli::kExitConfig);
}

TEST(Cli, JsonStreamEndsWithSummary) {
  const auto r = invoke({"verify", "eq2.16", "--L", "0..5", "--format", "json", "--no-timing"});
  ASSERT_EQ(r.code, 0);
  const auto lines = jsonLines(r.out);
  ASSERT_EQ(lines.size(), 7u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(lines[i]["identityId"], "eq2.16");
    EXPECT_EQ(lines[i]["params"]["L"], static_cast<int>(i));
    EXPECT_EQ(lines[i]["elapsedMillis"], 0);
  }
  EXPECT_EQ(lines.back(), (nlohmann::json{{"total", 6}, {"passed", 6}, {"failed", 0}, {"skipped", 0}}));
}

TEST(Cli, OutputIsStableAcrossRunsAndParallelism) {
  const std::vector<std::string> base = {"verify", "eq2.21", "--nu", "1..3", "--s", "0..2", "--L", "0..8",
                                         "--format", "json", "--no-timing"};
  auto withJobs = [&](const char* jobs) {
    auto args = base;
    args.push_back("-j");
    args.push_back(jobs);
    return invoke(args).out;
  };
  const std::string serial = withJobs("1");
  EXPECT_EQ(serial, withJobs("1"));
  EXPECT_EQ(serial, withJobs("4"));
  const auto lines = jsonLines(serial);
  EXPECT_GT(lines.back()["skipped"].get<int>(), 0);
}

TEST(Cli, WritesToOutputFile) {
  const std::string path = ::testing::TempDir() + "qverify_cli_out.jsonl";
  const auto r = invoke({"verify", "eq2.13", "--L", "0..2", "--format", "json", "-o", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(jsonLines(buffer.str()).size(), 4u);
  std::remove(path.c_str());
}

TEST(Cli, ConjectureSweepSmall) {
  const auto r = invoke({"sweep-conjecture", "--K", "3", "--size", "8", "--format", "json", "--no-timing"});
  EXPECT_EQ(r.code, 0);
  const auto summary = jsonLines(r.out).back();
  EXPECT_EQ(summary["failed"], 0);
  EXPECT_GT(summary["skipped"].get<int>(), 0);
  EXPECT_EQ(invoke({"sweep-conjecture", "--theorem1", "--nu", "1..2", "--L", "0..6"}).code, 0);
}

TEST(Cli, ParseRange) {
  using qverify::cli::parseRange;
  EXPECT_EQ(parseRange("3..7").lo, 3);
  EXPECT_EQ(parseRange("3..7").hi, 7);
  EXPECT_EQ(parseRange("-6..6").lo, -6);
  EXPECT_EQ(parseRange("5").hi, 5);
  EXPECT_THROW(parseRange("7..3"), std::invalid_argument);
  EXPECT_THROW(parseRange("a..b"), std::invalid_argument);
  EXPECT_THROW(parseRange(""), std::invalid_argument);
}
