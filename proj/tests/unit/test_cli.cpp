#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hesse/cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hesse::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> v;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  }
  return v;
}

}  // namespace

TEST(Cli, DeriveHesseParameterSequence) {
  auto r = run({"derive", "--hesse-c", "0", "-k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "∞\n");
  r = run({"derive", "--hesse-c", "6", "-k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-3, -3\n");
  r = run({"derive", "--hesse-c", "abc"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST(Cli, DeriveJsonInput) {
  const auto r = run({"derive", "--input", R"({"monomials":{"x3":"1","xy2":"3","x2z":"3","z3":"-1"}})"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_lines(r.out).at(0);
  EXPECT_EQ(j["monomials"], nlohmann::json::parse(R"({"x3":"1","x2z":"1","xz2":"1","y2z":"-1"})"));
  EXPECT_EQ(run({"derive", "--input", R"({"monomials":{"x3":"1"}})"}).code, 2);
  EXPECT_EQ(run({"derive", "--input", "{oops"}).code, 1);
  EXPECT_EQ(run({"derive", "--input", "/nonexistent/file.json"}).code, 1);
}

TEST(Cli, CountsTable) {
  const auto path = std::filesystem::temp_directory_path() / "hesse_cli_counts_test.csv";
  auto r = run({"counts", "--max-n", "16", "--oracle-max", "0", "--csv", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string line, last;
  while (std::getline(in, line)) last = line;
  EXPECT_EQ(last.rfind("16,6560,13119,6561,810,", 0), 0u) << last;
  std::filesystem::remove(path);
  r = run({"counts", "--max-n", "5", "--oracle-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, VerifyContacts) {
  auto r = run({"verify-contacts", "--a", "0", "--b=-1", "--x0", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_NEAR(j["points"]["S"][0].get<double>(), -0.25, 1e-15);
  EXPECT_NEAR(j["points"]["S"][1].get<double>(), std::sqrt(60.0) / 16, 1e-15);
  r = run({"verify-contacts", "--a", "0", "--b", "3+2*sqrt3", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  r = run({"verify-contacts", "--a", "0", "--b=-1", "--x0", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("pole at x0=0"), std::string::npos);
  r = run({"verify-contacts", "--two-loop-curve", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, PlotIsDeterministicAndLayered) {
  auto a = run({"plot", "--hesse-c", "-4", "--format", "csv"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run({"plot", "--hesse-c", "-4", "--format", "csv"}).out);
  EXPECT_EQ(a.out.rfind("layer,component,x,y\n", 0), 0u);
  EXPECT_NE(a.out.find(",1,"), std::string::npos);  // second component present
  const auto svg = run({"plot", "--two-loop-curve", "--with-hesse"});
  ASSERT_EQ(svg.code, 0) << svg.err;
  std::size_t groups = 0;
  for (std::size_t pos = 0; (pos = svg.out.find("<g ", pos)) != std::string::npos; ++pos) ++groups;
  EXPECT_EQ(groups, 2u);
  EXPECT_EQ(run({"plot", "--hesse-c", "-4", "--resolution", "8"}).code, 1);
  EXPECT_EQ(run({"plot", "--hesse-c", "-4", "--window", "1", "1", "0", "1"}).code, 1);
  // x^3 + y^3 + z^3 far from the window: nothing to draw.
  EXPECT_EQ(run({"plot", "--hesse-c", "0", "--window", "5", "6", "5", "6", "--format", "csv"}).code, 1);
}

TEST(Cli, PlotWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "hesse_cli_plot_test.svg";
  const auto r = run({"plot", "--hesse-c", "inf", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str().rfind("<svg", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, DynamicsWrappers) {
  auto r = run({"loops", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 1);
  EXPECT_NEAR(j["cycles"][0]["values"][0].get<double>(), 2.19615, 1e-5);
  r = run({"chains", "--target", "minus3", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["starts"].size(), 3u);
  r = run({"orbit", "--c0", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["terminal"], "FIXED_INFINITY");
  EXPECT_EQ(j["at"], 1);
  r = run({"growth", "--bound", "100"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"loops", "--n", "12", "--mode", "float"}).code, 2);
  EXPECT_EQ(run({"chains", "--target", "nowhere", "--n", "2"}).code, 1);
}

TEST(Cli, HalveAndConvert) {
  auto r = run({"halve", "--a", "0", "--b=-1", "--x0", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["halves"].size(), 4u);
  for (const auto& h : j["halves"]) EXPECT_EQ(h["status"], "PASS");
  r = run({"convert", "--loop2-check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["loop2_check"], true);
  r = run({"convert", "--q", "-1/2-1/2*sqrt3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("3+2*sqrt3"), std::string::npos) << r.out;
  EXPECT_EQ(run({"convert", "--q", "0"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"thm7"}).code, 1);
}
