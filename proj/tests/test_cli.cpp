#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sergeev/config.hpp"
#include "sergeev/suite.hpp"

using namespace sergeev;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sergeev");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sergeev_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, VerifyIsByteIdenticalAcrossRuns) {
  const auto a = run({"verify", "--n", "2", "--d", "2", "--random-coeffs", "--samples", "2", "--seed", "9"});
  const auto b = run({"verify", "--n", "2", "--d", "2", "--random-coeffs", "--samples", "2", "--seed", "9"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], "sergeev-report/1");
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["samples"].size(), 2u);
}

TEST(Cli, InvalidLevelIsConfigError) {
  const auto r = run({"verify", "--n", "2", "--d", "0"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("level must be"), std::string::npos);
  EXPECT_EQ(run({"verify", "--n", "0", "--d", "2"}).code, kExitConfig);
  EXPECT_EQ(run({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--n", "1", "--d", "2", "--coeffs", "a1=3"}).code, kExitConfig);
  EXPECT_EQ(run({"verify", "--n", "1", "--d", "2", "--coeffs", "a0=1", "--random-coeffs"}).code, kExitConfig);
}

TEST(Cli, InjectedFailureExitsOneWithWitness) {
  const auto r = run({"verify", "--n", "2", "--d", "2", "--inject-failure", "cocenter_rank"});
  EXPECT_EQ(r.code, kExitFailure);
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& rep : j["reports"])
    if (rep["check"] == "cocenter_rank") {
      found = true;
      EXPECT_EQ(rep["status"], "fail");
      EXPECT_FALSE(rep["failures"].empty());
    }
  EXPECT_TRUE(found);
}

TEST(Cli, BudgetSkipExitsThree) {
  const auto r = run({"verify", "--n", "2", "--d", "2", "--budget", "8"});
  EXPECT_EQ(r.code, kExitBudget);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["summary"]["skipped"].get<int>(), 0);
  EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Cli, UnwritableOutputIsIoError) {
  const auto r = run({"enum", "--n", "1", "--d", "2", "--out", "/nonexistent-dir/x.json"});
  EXPECT_EQ(r.code, kExitIo);
}

TEST(Cli, OutputFileWrittenAtomically) {
  const auto path = temp_path("enum.json");
  const auto r = run({"enum", "--n", "2", "--d", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["counts"]["tilde"], 2);
  EXPECT_EQ(j["tilde"][0]["lambda"].size() + j["tilde"][1]["lambda"].size(), 1u);
  std::filesystem::remove(path);
}

TEST(Cli, MultProducesNormalForm) {
  const auto r = run({"mult", "--n", "2", "--d", "2", "--left", "s1", "--right", "x1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto& terms = j["products"][0]["terms"];
  ASSERT_EQ(terms.size(), 3u);
  std::set<std::string> words;
  for (const auto& t : terms) words.insert(t["coeff"].get<std::string>() + " " + t["word"].get<std::string>());
  EXPECT_EQ(words, (std::set<std::string>{"-1 1", "-1 c1 c2", "1 x2 s1"}));
  EXPECT_EQ(run({"mult", "--n", "2", "--d", "2", "--left", "s2", "--right", "x1"}).code, kExitConfig);
  EXPECT_EQ(run({"mult", "--n", "2", "--d", "2", "--left", "q", "--right", "x1"}).code, kExitConfig);
}

TEST(Cli, GramMatrixCsv) {
  const auto r = run({"gram", "--n", "1", "--d", "2", "--matrix", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("determinant -1"), std::string::npos);
  EXPECT_NE(r.out.find("0,0,0,-1"), std::string::npos);
}

TEST(Cli, RankCommands) {
  auto j = nlohmann::json::parse(run({"cocenter-rank", "--n", "2", "--d", "3"}).out);
  EXPECT_EQ(j["reports"][0]["computed"], "4");
  j = nlohmann::json::parse(run({"center-rank", "--n", "3", "--d", "1"}).out);
  EXPECT_EQ(j["reports"][0]["computed"], "2");
  j = nlohmann::json::parse(run({"supercocenter-rank", "--n", "3", "--d", "1"}).out);
  EXPECT_EQ(j["reports"][0]["computed"], "1");
  EXPECT_EQ(j["reports"][0]["status"], "pass");
}

TEST(Cli, TraceCheckReport) {
  const auto r = run({"trace-check", "--n", "2", "--d", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reports"][0]["pairs_tested"], 1024);
  EXPECT_EQ(j["reports"][0]["elapsed_ms"], 0);
}

TEST(Cli, ConfigFileAndOverrides) {
  const auto path = temp_path("cfg.json");
  {
    std::ofstream(path) << R"({"n": 2, "d": 3, "format": "csv"})";
  }
  const auto r = run({"cocenter-rank", "--config", path.string(), "--d", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cocenter_rank,2,2"), std::string::npos) << r.out;
  {
    std::ofstream(path) << R"({"n": 2, "colour": 3})";
  }
  EXPECT_EQ(run({"verify", "--config", path.string(), "--d", "2"}).code, kExitConfig);
  std::filesystem::remove(path);
}

TEST(Config, CoefficientParsing) {
  const auto m = parse_coefficients("a0=1/2,a2=-3");
  EXPECT_EQ(m.at(0), Rational(1, 2));
  EXPECT_EQ(m.at(2), -3);
  EXPECT_THROW(parse_coefficients("b0=1"), ConfigError);
  EXPECT_THROW(parse_coefficients("a0=x"), ConfigError);
}

TEST(Config, RandomSamplesAreReproducible) {
  RunConfig cfg;
  cfg.n = 2;
  cfg.d = 4;
  cfg.random_coeffs = true;
  cfg.samples = 3;
  cfg.seed = 5;
  const auto a = coefficient_samples(cfg), b = coefficient_samples(cfg);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].label, b[i].label);
    EXPECT_EQ(a[i].coeffs, b[i].coeffs);
    for (const auto& [k, v] : a[i].coeffs) {
      EXPECT_EQ(k % 2, 0);
      EXPECT_NE(v, 0);
    }
  }
  cfg.with_monomial = true;
  const auto c = coefficient_samples(cfg);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0].label, "x^d");
  EXPECT_TRUE(c[0].coeffs.empty());
}
