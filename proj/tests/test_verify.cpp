#include <gtest/gtest.h>

#include "helpers.hpp"
#include "json.hpp"
#include "qgue/verify.hpp"

using namespace qgue;
using qgue::testing::P;

namespace {

const VerificationReport& report_named(const std::vector<VerificationReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.identity == name) return r;
  throw std::runtime_error("no report " + name);
}

}  // namespace

TEST(Classify, EqualDiscrepantAndZeroOracle) {
  const auto eq = classify({{"n", 1}}, P({1, 1}), P({1, 1}));
  EXPECT_EQ(eq.status, PointStatus::equal);
  EXPECT_FALSE(eq.ratio);

  const auto mono = classify({{"n", 1}}, -Scalar::q_power(3), Scalar::q());
  EXPECT_EQ(mono.status, PointStatus::discrepant);
  EXPECT_EQ(mono.monomial, (SignedQPower{-1, 2}));

  const auto structural = classify({{"n", 1}}, P({1, 1}), Scalar(1));
  EXPECT_EQ(structural.status, PointStatus::discrepant);
  EXPECT_TRUE(structural.ratio);
  EXPECT_FALSE(structural.monomial);

  const auto zero = classify({{"n", 1}}, Scalar(1), Scalar());
  EXPECT_FALSE(zero.ratio);
  EXPECT_FALSE(zero.note.empty());
}

TEST(Suites, NamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_FALSE(parse_suite("theorem9"));
  EXPECT_EQ(all_suites().size(), 10u);
}

TEST(Suites, DeterminantalSuiteAllEqual) {
  GridBounds b;
  b.max_weight = 4;
  b.max_vars = 3;
  const auto reports = verify_suite(Suite::theorem3, b, 2);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_GT(reports[0].summary().total, 0);
  EXPECT_FALSE(reports[0].has_discrepancy());
}

TEST(Suites, LevelDensitySuiteAllEqual) {
  GridBounds b;
  b.max_m = 3;
  b.max_vars = 3;
  for (const auto& r : verify_suite(Suite::theorem1, b)) EXPECT_FALSE(r.has_discrepancy()) << r.identity;
}

TEST(Suites, HookMomentOddSign) {
  GridBounds b;
  b.max_weight = 2;
  b.max_vars = 1;
  const auto reports = verify_suite(Suite::theorem4, b);
  const auto* p = reports[0].find({{"m", 1}, {"l", 1}, {"N", 1}});
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->status, PointStatus::discrepant);
  EXPECT_EQ(*p->ratio, Scalar(-1));
}

TEST(Suites, HookMomentRatiosAreSignedQPowers) {
  GridBounds b;
  b.max_weight = 8;
  b.max_vars = 4;
  const auto reports = verify_suite(Suite::theorem4, b, default_thread_count());
  EXPECT_TRUE(reports[0].has_discrepancy());
  EXPECT_TRUE(reports[0].all_ratios_monomial());
}

TEST(Suites, SigmaStepAndHookDifferencesAgree) {
  GridBounds b;
  b.max_m = 3;
  b.max_vars = 3;
  const auto reports = verify_suite(Suite::sigma, b);
  EXPECT_FALSE(report_named(reports, "sigma-step").has_discrepancy());
  EXPECT_FALSE(report_named(reports, "sigma-from-theorem4").has_discrepancy());
  const auto* p = report_named(reports, "p2m").find({{"m", 1}, {"N", 2}});
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(*p->closed, P({0, 1, 1}));
  EXPECT_EQ(*p->oracle, P({2, 1, 1}));
}

TEST(Suites, QHarerZagierAllEqual) {
  GridBounds b;
  b.max_m = 3;
  b.max_s = 3;
  EXPECT_FALSE(verify_suite(Suite::qhz, b)[0].has_discrepancy());
}

TEST(Suites, DualityAndOrthogonality) {
  GridBounds b;
  b.max_n = 30;
  EXPECT_FALSE(verify_suite(Suite::duality, b)[0].has_discrepancy());
  b.max_n = 6;
  EXPECT_FALSE(verify_suite(Suite::orthogonality, b)[0].has_discrepancy());
}

TEST(Suites, TruncationOffByQPowers) {
  GridBounds b;
  b.max_n = 8;
  const auto reports = verify_suite(Suite::truncation, b);
  for (const auto& r : reports) EXPECT_TRUE(r.all_ratios_monomial()) << r.identity;
  const auto* small = report_named(reports, "truncation").find({{"N", 2}, {"l", 3}});
  ASSERT_NE(small, nullptr);
  EXPECT_EQ(small->status, PointStatus::equal);
  const auto* p = report_named(reports, "truncation").find({{"N", 3}, {"l", 1}, {"j", 0}});
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->monomial, (SignedQPower{1, -2}));
}

TEST(Suites, GuardrailsNameTheBound) {
  GridBounds b;
  b.max_vars = 6;
  try {
    validate_bounds(Suite::theorem3, b);
    FAIL() << "expected SizeError";
  } catch (const SizeError& e) {
    EXPECT_NE(std::string(e.what()).find("max-vars"), std::string::npos);
  }
  b.max_vars = 4;
  b.max_weight = 30;
  EXPECT_THROW(validate_bounds(Suite::theorem4, b), SizeError);
  EXPECT_THROW(verify_suite(Suite::theorem3, b), SizeError);
  GridBounds d;
  d.max_n = 61;
  EXPECT_THROW(validate_bounds(Suite::duality, d), SizeError);
  for (Suite s : all_suites()) EXPECT_NO_THROW(validate_bounds(s, GridBounds{})) << to_string(s);
}

TEST(Reports, DeterministicAcrossThreadCounts) {
  GridBounds b;
  b.max_weight = 6;
  b.max_vars = 3;
  const std::string one = reports_to_json(verify_suite(Suite::theorem4, b, 1));
  const std::string many = reports_to_json(verify_suite(Suite::theorem4, b, 8));
  EXPECT_EQ(one, many);
}

TEST(Reports, JsonSchemaAndRoundTrip) {
  GridBounds b;
  b.max_weight = 2;
  b.max_vars = 2;
  const std::string text = reports_to_json(verify_suite(Suite::theorem4, b));
  const auto j = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(j.dump(2) + "\n", text);
  const auto& r = j["reports"][0];
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"identity", "grid", "points", "summary"}));
  bool saw_discrepancy = false;
  for (const auto& p : r["points"]) {
    EXPECT_TRUE(p.contains("params"));
    EXPECT_TRUE(p.contains("status"));
    if (p["status"] == "discrepant") {
      saw_discrepancy = true;
      EXPECT_TRUE(p.contains("ratio"));
      EXPECT_TRUE(p.contains("sign"));
      EXPECT_TRUE(p.contains("qpower"));
    }
  }
  EXPECT_TRUE(saw_discrepancy);
  EXPECT_EQ(j["summary"]["total"], r["summary"]["total"]);
}

TEST(Reports, SummaryTableListsIdentities) {
  GridBounds b;
  const auto table = summary_table(verify_suite(Suite::sigma, b));
  for (const char* name : {"sigma", "sigma-hooks", "sigma-from-theorem4", "sigma-step", "p2m"})
    EXPECT_NE(table.find(name), std::string::npos) << name;
}
