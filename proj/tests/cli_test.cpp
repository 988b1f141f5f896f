#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tpcalc/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tpcalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

}  // namespace

TEST(Cli, ExpandPrintsCanonicalPolynomial) {
  Result r = run({"expand", "--type", "A0,A0,A0", "--kappa", "1", "--side", "target"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s_0^3 - 3*s_0*s_1 + 2*s_2 + 2*s_01\n");
  r = run({"expand", "--type", "A0,A0", "--kappa", "1", "--side", "source"});
  EXPECT_EQ(r.out, "fs_0 - c1\n");
}

TEST(Cli, CountAndEval) {
  EXPECT_EQ(run({"count", "--model", "dual-surface:3", "--type", "A1,A1,A1"}).out, "45\n");
  EXPECT_EQ(run({"count", "--model", "web3:4", "--type", "A1,A1,A1"}).out, "675\n");
  EXPECT_EQ(run({"count", "--model", "pencil:3", "--type", "A1"}).out, "12\n");
  Result r = run({"eval", "--model", "veronese-p3", "--expr", "c2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6*h^2"), std::string::npos);
}

TEST(Cli, VerifyTable1) {
  Result r = run({"verify", "--suite", "table1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines_starting(r.out, "PASS"), 6);
  EXPECT_EQ(count_lines_starting(r.out, "FAIL"), 0);
}

TEST(Cli, ErrorsExitTwo) {
  Result r = run({"count", "--model", "nope", "--type", "A0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown model"), std::string::npos);
  EXPECT_EQ(run({"expand", "--type", "B7", "--kappa", "1"}).code, 2);
  EXPECT_EQ(run({"expand", "--type", "A0,A0", "--kappa", "x"}).code, 2);
  EXPECT_EQ(run({"eval", "--model", "veronese-p3", "--expr", "c2 +* c1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"oracle", "--curve", "t^2, t^4"}).code, 2);
}

TEST(Cli, JsonMatchesText) {
  const std::vector<std::string> cmd{"expand", "--type", "A1,A1", "--kappa", "-1"};
  Result text = run(cmd);
  std::vector<std::string> with_json{"--json"};
  with_json.insert(with_json.end(), cmd.begin(), cmd.end());
  Result js = run(with_json);
  ASSERT_EQ(js.code, 0);
  auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["command"], "expand");
  EXPECT_EQ(doc["result"]["polynomial"].get<std::string>() + "\n", text.out);
  EXPECT_TRUE(doc["checks"].is_array());
  EXPECT_FALSE(doc.contains("timing_ms"));

  auto timed = nlohmann::json::parse(run({"--json", "--timing", "count", "--model", "veronese-p3", "--type",
                                          "A0,A0,A0"})
                                         .out);
  EXPECT_EQ(timed["result"]["count"], "1");
  EXPECT_TRUE(timed.contains("timing_ms"));

  auto ver = nlohmann::json::parse(run({"--json", "verify", "--suite", "table1"}).out);
  ASSERT_EQ(ver["checks"].size(), 6u);
  for (const auto& c : ver["checks"]) EXPECT_EQ(c["expected"], c["got"]);
}

TEST(Cli, InterpOutputsDatabaseRecord) {
  Result r = run({"interp", "--type", "A0,A0,A0", "--kappa", "1", "--constraint", "veronese-p3=1", "--constraint",
                  "scroll-q-p3=0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "types=[A0,A0,A0] kappa=1 R= 2*c1^2 + 2*c2\n");
  auto doc = nlohmann::json::parse(
      run({"--json", "interp", "--type", "A0,A0,A0", "--kappa", "1", "--constraint", "veronese-p3=1"}).out);
  EXPECT_EQ(doc["result"]["status"], "underdetermined");
  EXPECT_EQ(doc["result"]["rank"], 1);
  r = run({"interp", "--type", "A0,A0", "--kappa", "1", "--constraint", "ratcurve:3=1", "--constraint",
           "ratcurve:4=2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("inconsistent"), std::string::npos);
}

TEST(Cli, OracleAndPorteous) {
  Result r = run({"oracle", "--curve", "t^2, t^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("resultant double-point degree: 2"), std::string::npos);
  EXPECT_EQ(run({"porteous", "--kappa", "-1", "--k", "2"}).out, "c1^2 - c2\n");
}

TEST(Cli, ExtractRecoversResidual) {
  Result r = run({"extract", "--type", "A0,A0", "--kappa", "1", "--side", "source", "--known", "fs_0 - c1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("R= -c1"), std::string::npos);
}

TEST(Cli, DatabaseFileIsMerged) {
  const std::string path = ::testing::TempDir() + "tpcalc_cli_db.txt";
  {
    std::ofstream f(path);
    f << "# extra\ntypes=[A2] kappa=1 R= c1*c2 + c3\n";
  }
  EXPECT_EQ(run({"expand", "--type", "A2", "--kappa", "1"}).code, 2);
  Result r = run({"--db", path, "expand", "--type", "A2", "--kappa", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s_11 + s_001\n");
  std::remove(path.c_str());
  EXPECT_EQ(run({"--db", "/nonexistent/db.txt", "expand", "--type", "A0", "--kappa", "1"}).code, 2);
}

TEST(Cli, BinaryExitStatus) {
  std::string cmd = std::string(TPCALC_BINARY) + " count --model dual-surface:3 --type A1,A1,A1";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::array<char, 64> buf{};
  std::string out;
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  EXPECT_EQ(pclose(p), 0);
  EXPECT_EQ(out, "45\n");
  EXPECT_NE(std::system((std::string(TPCALC_BINARY) + " count --model nope --type A0 2>/dev/null").c_str()), 0);
}
