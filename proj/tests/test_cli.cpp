#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = butterfly::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST(Cli, SeriesChains) {
  const auto r = run({"--no-banner", "series", "chains", "--order", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,3,12,51,222,978\n");
  EXPECT_EQ(r.err, "");
  EXPECT_EQ(run({"series", "chains", "--order", "3", "--format", "json"}).out, "[\"1\",\"3\",\"12\"]\n");
}

TEST(Cli, BannerOnStderrOnly) {
  const auto with = run({"series", "C", "--order", "4"});
  const auto without = run({"--no-banner", "series", "C", "--order", "4"});
  EXPECT_EQ(with.out, without.out);
  EXPECT_NE(with.err.find("butterfly"), std::string::npos);
}

TEST(Cli, VerifyDrtFreeDyck) {
  const auto r = run({"--no-banner", "verify", "bijection", "drt-free-dyck", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("checked: 924\n"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);
}

TEST(Cli, VerifyAll) {
  const auto r = run({"--no-banner", "verify", "all", "--n", "5", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["results"].size(), butterfly::bijection_names().size() + 2 + butterfly::identity_names().size());
}

TEST(Cli, InvolutionSpellings) {
  const auto a = run({"--no-banner", "verify", "involution", "dyck", "--n", "4"});
  const auto b = run({"--no-banner", "verify", "involution-dyck", "--n", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("fixed_points: 0"), std::string::npos);
  EXPECT_NE(a.out.find("identity_value: 0"), std::string::npos);
}

TEST(Cli, SignedSumAboveCap) {
  const auto r = run({"--no-banner", "verify", "identity", "eq12", "--n", "30"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("identity_value: 1"), std::string::npos);
  EXPECT_NE(r.out.find("exhaustive: skipped above"), std::string::npos);
}

TEST(Cli, TableChungFeller) {
  const auto r = run({"--no-banner", "table", "chung-feller", "--n", "4", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m,count,catalan,match\n0,14,14,yes\n1,14,14,yes\n2,14,14,yes\n3,14,14,yes\n4,14,14,yes\n");
}

TEST(Cli, ChainsAverageCsv) {
  const auto r = run({"--no-banner", "chains", "average", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n,H_n,R_n,average_num,average_den,average_decimal\n"
            "1,3,4,4,3,1.33333333333\n"
            "2,12,19,19,12,1.58333333333\n");
}

TEST(Cli, Riordan) {
  const auto r = run({"--no-banner", "riordan", "--g", "B", "--f", "L", "--rows", "5", "--apply", "naturals"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n2,1\n6,5,1\n20,22,8,1\n70,93,47,11,1\napply naturals: 1,4,19,92,446\n");
  const auto j = run({"--no-banner", "riordan", "--g", "B", "--f", "L", "--rows", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["rows"], nlohmann::json::parse(R"([["1"],["2","1"]])"));
}

TEST(Cli, EnumerateStreams) {
  EXPECT_EQ(run({"--no-banner", "enumerate", "free-schroder", "--n", "1"}).out, "UD\nDU\nH\n");
  EXPECT_EQ(lines(run({"--no-banner", "enumerate", "trees", "--n", "4"}).out), 14u);
  const auto j = nlohmann::json::parse(run({"--no-banner", "enumerate", "trees", "--n", "2", "--format", "json"}).out);
  EXPECT_EQ(j, nlohmann::json::parse("[[[[]]],[[],[]]]"));
  EXPECT_EQ(run({"--no-banner", "enumerate", "dyck", "--n", "1", "--format", "csv"}).out, "index,object\n0,UD\n");
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"--no-banner", "verify", "identity", "cf-refined", "--n", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"series", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "bijection", "nope", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"table", "returns"}).code, 2);
  EXPECT_EQ(run({"enumerate", "trees", "--n", "99"}).code, 2);
  EXPECT_EQ(run({"verify", "involution", "dyck", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CsvQuoting) {
  EXPECT_EQ(butterfly::cli::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(butterfly::cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(butterfly::cli::csv_field("plain"), "plain");
}
