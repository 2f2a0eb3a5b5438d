#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(GTKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  CliRun r = run(args);
  EXPECT_EQ(r.code, expect_code) << r.out;
  return nlohmann::json::parse(r.out);
}

std::string value_of(const nlohmann::json& j, const std::string& label) {
  for (const auto& e : j["results"])
    if (e["label"] == label) return e["value"].is_string() ? e["value"].get<std::string>() : e["value"].dump();
  return "<missing>";
}

}  // namespace

TEST(Cli, Dim) {
  auto j = run_json("dim 2,1,0");
  EXPECT_EQ(j["command"], "dim");
  EXPECT_EQ(value_of(j, "dim"), "8");
}

TEST(Cli, RelativeDimension) {
  auto j = run_json("rdim 1 2,1,0");
  EXPECT_EQ(value_of(j, "rel_dim"), "4");
  EXPECT_EQ(value_of(j, "ratio"), "1/2");
}

TEST(Cli, LinkAndQLink) {
  auto j = run_json("link 1,0 --level 1");
  EXPECT_EQ(value_of(j, "(0)"), "1/2");
  EXPECT_EQ(value_of(j, "(1)"), "1/2");
  EXPECT_EQ(j["status"], "pass");
  auto q = run_json("qlink 1,0 --level 1 --q 1/2");
  EXPECT_EQ(value_of(q, "(0)"), "2/3");
  EXPECT_EQ(value_of(q, "(1)"), "1/3");
}

TEST(Cli, VerifySuites) {
  auto j = run_json("verify q1-oracle --max-n 4 --part-bound 2");
  EXPECT_EQ(j["status"], "pass");
  auto v = run_json("verify q1-oracle --max-n 0");
  EXPECT_EQ(v["status"], "pass");
  EXPECT_EQ(v["checks"][0]["cases"], 0);
  auto t = run_json("verify qtoeplitz --q 1/2");
  EXPECT_EQ(t["status"], "pass");
  EXPECT_EQ(t["inputs"]["q"], nlohmann::json::array({"1/2"}));
}

TEST(Cli, UnknownSuiteFails) {
  CliRun r = run("verify nonsense");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("unknown suite"), std::string::npos);
}

TEST(Cli, ParseErrorsReportPosition) {
  CliRun r = run("dim 2,x,0");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("position 2"), std::string::npos);
  EXPECT_NE(run("link 0,1 --level 1").code, 0);
}

TEST(Cli, Uat) {
  auto j = run_json("uat --kappa 0 --family linear-row:1/2 --n 8,16,32");
  double prev = 1e9;
  for (const auto& e : j["results"]) {
    EXPECT_EQ(e["mode"], "exact");
    std::string s = e["value"];
    auto slash = s.find('/');
    double v = slash == std::string::npos ? std::stod(s) : std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    EXPECT_LT(v, prev);
    prev = v;
  }
  auto z = run_json("uat --kappa 0 --family zero --n 4,8");
  for (const auto& e : z["results"]) EXPECT_EQ(e["value"], "0");
  auto n = run_json("uat --kappa 1 --family linear-row:1/2 --n 8 --numeric --tolerance 1e-11");
  EXPECT_EQ(n["results"][0]["mode"], "numeric");
  EXPECT_EQ(n["results"][0]["tolerance"], 1e-11);
}

TEST(Cli, Bench) {
  auto j = run_json("bench --n 6,20 --level 2");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(value_of(j, "row_sum N=20"), "1");
  EXPECT_EQ(value_of(j, "enumeration N=20"), "skipped: budget exceeded");
  EXPECT_TRUE(j["timing"].contains("enumeration N=6"));
}

TEST(Cli, BudgetFlagAndEnv) {
  auto j = run_json("bench --n 6 --level 2 --budget 10");
  EXPECT_EQ(value_of(j, "enumeration N=6"), "skipped: budget exceeded");
  CliRun r = run("bench --n 6 --level 2");
  std::string cmd = "GTKIT_BUDGET=10 " + std::string(GTKIT_CLI_PATH) + " bench --n 6 --level 2";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  pclose(p);
  EXPECT_EQ(value_of(nlohmann::json::parse(out), "enumeration N=6"), "skipped: budget exceeded");
  EXPECT_EQ(value_of(nlohmann::json::parse(r.out), "enumeration N=6"), "<missing>");
}

TEST(Cli, CsvAndOutFile) {
  CliRun r = run("link 1,0 --level 1 --csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result,(0),exact,1/2,"), std::string::npos);
  std::string path = testing::TempDir() + "gtkit_cli_out.jsonl";
  std::remove(path.c_str());
  EXPECT_EQ(run("dim 1,0 --out " + path).code, 0);
  EXPECT_EQ(run("dim 2,0 --out " + path).code, 0);
  FILE* f = fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  int lines = 0;
  for (int ch; (ch = fgetc(f)) != EOF;) lines += ch == '\n';
  fclose(f);
  EXPECT_EQ(lines, 2);
}
