#include "cli_app.hpp"

#include <gtest/gtest.h>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  args.insert(args.begin(), "twoorbit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = twoorbit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, RootsListsPositiveRoots)
{
  auto g2 = run({"roots", "G2"});
  EXPECT_EQ(g2.code, 0);
  EXPECT_TRUE(has(g2.out, "positive roots: 6\n"));
  auto a1 = run({"roots", "A1"});
  EXPECT_TRUE(has(a1.out, "positive roots: 1\n(1)\n"));
}

TEST(Cli, RootsRejectsUnsupportedTypes)
{
  auto e8 = run({"roots", "E8"});
  EXPECT_EQ(e8.code, 2);
  EXPECT_TRUE(has(e8.err, "unsupported type"));
  EXPECT_EQ(run({"roots", "Q2"}).code, 2);
}

TEST(Cli, FlagReportsInvariants)
{
  auto f = run({"flag", "F4", "--mark", "1"});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(has(f.out, "dimension: 15\n"));
  EXPECT_TRUE(has(f.out, "index: 8\n"));
  auto two = run({"flag", "F4", "--mark", "1,3"});
  EXPECT_TRUE(has(two.out, "dimension: 22\n"));
  EXPECT_TRUE(has(two.out, "anticanonical: 3w1+5w3\n"));
  EXPECT_FALSE(has(two.out, "index:"));
  auto b3 = run({"flag", "B3", "--mark", "1,2,3"});
  EXPECT_TRUE(has(b3.out, "dimension: 9\n"));
  EXPECT_TRUE(has(b3.out, "anticanonical: 2w1+2w2+2w3\n"));
  auto prod = run({"flag", "A1xG2", "--mark", "2.1"});
  EXPECT_TRUE(has(prod.out, "dimension: 5\n"));
  EXPECT_TRUE(has(prod.out, "index: 5\n"));
}

TEST(Cli, FlagRejectsOutOfRangeNodes)
{
  auto r = run({"flag", "B3", "--mark", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "1..3"));
  EXPECT_EQ(run({"flag", "B3"}).code, 2);
}

TEST(Cli, DimComputesWeylDimension)
{
  EXPECT_EQ(run({"dim", "G2", "1,0"}).out, "7\n");
  EXPECT_EQ(run({"dim", "B3", "0,0,1"}).out, "8\n");
  EXPECT_EQ(run({"dim", "G2", "1"}).code, 2);
  EXPECT_EQ(run({"dim", "G2", "1/2,0"}).code, 2);
}

TEST(Cli, TableFormats)
{
  auto csv = run({"table", "--max-n", "3", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 10);
  EXPECT_TRUE(has(csv.out, "F4horo,F4,"));
  auto md = run({"table", "--max-n", "3"});
  EXPECT_EQ(md.out.rfind("| triple |", 0), 0u);
  auto bad = run({"table", "--format", "xml"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(has(bad.err, "md, csv, json"));
  EXPECT_EQ(run({"table", "--max-n", "2"}).code, 2);
}

TEST(Cli, TableIsDeterministicAndJsonRoundTrips)
{
  auto a = run({"table", "--max-n", "7", "--format", "json"});
  auto b = run({"table", "--max-n", "7", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  auto doc = nlohmann::json::parse(a.out);
  auto reps = twoorbit::catalog_reports(7);
  ASSERT_EQ(doc.size(), reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) EXPECT_EQ(twoorbit::report_from_json(doc[i]), reps[i]);
}

TEST(Cli, CheckPrintsFullReport)
{
  auto r = run({"check", "G2horo"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "triple: G2horo\n"));
  EXPECT_TRUE(has(r.out, "verdict: Stable\n"));
  EXPECT_TRUE(has(r.out, "ambient_dimension: 21\n"));
  EXPECT_TRUE(has(r.out, "fixture stab: PASS\n"));
  auto pf = run({"check", "PasF4"});
  EXPECT_TRUE(has(pf.out, "ambient_dimension: n/a\n"));
  EXPECT_TRUE(has(pf.out, "rank_EY: -\n"));
  EXPECT_FALSE(has(pf.out, "fixture bl_h_num"));
  auto bad = run({"check", "Bn:n=1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(has(bad.err, "error:"));
}

TEST(Cli, VerifyPassesAndReportsCorruption)
{
  auto ok = run({"verify"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "bl_h_num: PASS, cf_num: PASS, cf: PASS, stab: PASS\n");
  auto bad = run({"verify", "--set-expected", "stab,F4horo,mu_theta,1/4"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out, "MISMATCH stab: row F4horo, column mu_theta: expected 1/4, got 6/23\n"));
  EXPECT_TRUE(has(bad.out, "stab: FAIL"));
  EXPECT_EQ(run({"verify", "--max-n", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--set-expected", "stab,F4horo"}).code, 2);
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
