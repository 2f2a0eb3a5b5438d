#include "gtkit/report.hpp"
#include "gtkit/verify.hpp"

#include <gtest/gtest.h>

using namespace gtkit;

namespace {

RunReport sample_report() {
  RunReport r;
  r.command = "link";
  r.inputs = {{"nu", "2,1,0"}, {"level", 1}};
  r.add("(0)", rat(1, 3));
  r.add("gap", Numeric{0.0123, 1e-10});
  r.add("note", std::string("skipped, \"budget\""));
  r.checks.push_back({"row sums to 1", true, 3, ""});
  r.checks.push_back({"composition", false, 7, "nu=(1,0) K=1"});
  r.timing.emplace_back("determinant", 0.25);
  return r;
}

}  // namespace

TEST(RunReport, JsonRoundTrip) {
  RunReport r = sample_report();
  Json j = to_json(r);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["results"][0]["value"], "1/3");
  EXPECT_EQ(j["results"][0]["mode"], "exact");
  EXPECT_EQ(j["results"][1]["mode"], "numeric");
  EXPECT_EQ(j["results"][1]["tolerance"], 1e-10);
  RunReport back = report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back, r);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(RunReport, Status) {
  RunReport r;
  EXPECT_EQ(r.status(), "n/a");
  EXPECT_TRUE(r.passed());
  r.checks.push_back({"a", true, 1, ""});
  EXPECT_EQ(r.status(), "pass");
  r.checks.push_back({"b", false, 1, "x"});
  EXPECT_EQ(r.status(), "fail");
  EXPECT_FALSE(r.passed());
}

TEST(RunReport, Csv) {
  std::string csv = to_csv(sample_report());
  EXPECT_NE(csv.find("result,(0),exact,1/3,"), std::string::npos);
  EXPECT_NE(csv.find("result,note,text,\"skipped, \"\"budget\"\"\","), std::string::npos);
  EXPECT_NE(csv.find("check,composition,fail,7,\"nu=(1,0) K=1\""), std::string::npos);
  EXPECT_NE(csv.find("status,,fail,,"), std::string::npos);
}

TEST(RunReport, BadModeRejected) {
  Json j = to_json(sample_report());
  j["results"][0]["mode"] = "approximate";
  EXPECT_THROW(report_from_json(j), std::invalid_argument);
}

TEST(OmegaJson, RoundTrip) {
  OmegaPoint w = embed({4, 2, 0, 0, -1, -1, -3});
  w.gamma_plus = rat(1, 5);
  Json j = to_json(w);
  EXPECT_EQ(j["alpha_plus"][1], "1/14");
  EXPECT_EQ(j["gamma_plus"], "1/5");
  EXPECT_EQ(omega_from_json(Json::parse(j.dump())), w);
  Json bad = j;
  bad["beta_plus"] = Json::array({"1/3", "1/2"});
  EXPECT_THROW(omega_from_json(bad), std::invalid_argument);
}

TEST(MixedValue, ToResult) {
  EXPECT_EQ(to_result(MixedValue::of(rat(2, 7))), ResultValue(rat(2, 7)));
  EXPECT_EQ(to_result(MixedValue::numeric(0.5, 1e-9)), ResultValue(Numeric{0.5, 1e-9}));
}

TEST(CheckBuilder, FirstCounterexampleKept) {
  CheckBuilder c("demo");
  c.expect(true, [] { return std::string("a"); });
  c.expect(false, [] { return std::string("b"); });
  c.expect(false, [] { return std::string("c"); });
  Check d = c.done();
  EXPECT_FALSE(d.passed);
  EXPECT_EQ(d.cases, 3u);
  EXPECT_EQ(d.counterexample, "b");
}

TEST(Families, Signatures) {
  EXPECT_EQ(family_signature("linear-row:1/2", 9), Signature({4, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(family_signature("zero", 3), Signature({0, 0, 0}));
  EXPECT_THROW(family_signature("staircase", 3), std::invalid_argument);
  EXPECT_EQ(bench_signature(20).to_string(), "5,4,3,2,1,0,0,0,0,0,0,0,0,0,0,0,0,0,-1,-2");
  EXPECT_EQ(bench_signature(4).to_string(), "5,4,-1,-2");
}

TEST(Suites, SmallRunsPassAndUnknownIsRejected) {
  VerifyOptions o;
  o.max_n = 3;
  o.part_bound = 1;
  for (const auto& name : suite_names())
    for (const auto& c : run_suite(name, o)) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.counterexample;
  EXPECT_THROW(run_suite("nope", o), std::invalid_argument);
  o.max_n = 0;
  auto vacuous = run_suite("q1-oracle", o);
  ASSERT_EQ(vacuous.size(), 1u);
  EXPECT_TRUE(vacuous[0].passed);
  EXPECT_EQ(vacuous[0].cases, 0u);
}
