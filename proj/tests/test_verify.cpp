#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>
#include <string>

#include "json.hpp"
#include "lahq/verify.hpp"

namespace lahq {
namespace {

const std::set<std::string> kExpectedIds{
    "lah_rec", "lah_egf", "lah_hgf", "stirling_hgf", "lah_conv", "qi_bell", "w_hgf",
    "wl_rec", "wl_hgf", "wl_conv", "mansour", "r1", "r2", "r2_1", "r3", "graham", "r4",
    "gouqi", "ortho", "gqif1", "dobinski", "q_defs", "qw1w2", "qr1", "qr1_1", "qr2",
    "qr2_1", "inv_qtw", "qbinom_inv", "pe1", "pe2", "qgqif1", "q_limits"};

const std::set<std::string> kAsPrintedIds{"qr2", "qr2_1", "mansour"};

TEST(Registry, CoversEveryExpectedIdentity) {
  std::set<std::string> ids;
  for (const auto& spec : registry()) {
    EXPECT_TRUE(ids.insert(spec.id).second) << "duplicate id " << spec.id;
    EXPECT_FALSE(spec.anchor.empty()) << spec.id;
    EXPECT_FALSE(spec.description.empty()) << spec.id;
    EXPECT_FALSE(spec.domain.ranges.empty()) << spec.id;
    EXPECT_EQ(spec.has_as_printed, kAsPrintedIds.count(spec.id) == 1) << spec.id;
  }
  for (const auto& id : kExpectedIds) EXPECT_TRUE(ids.count(id)) << "missing " << id;
}

TEST(Registry, EveryIdentityHasGridPoints) {
  RunConfig config;
  config.alpha_list = {1, 2};
  for (const auto& spec : registry()) {
    EXPECT_FALSE(enumerate_params(spec, config).empty()) << spec.id;
  }
}

TEST(CheckIdentity, GuoQiWhitneyLahExample) {
  const auto result = check_identity("r4", {{"alpha", 1}, {"k", 2}, {"n", 2}});
  EXPECT_TRUE(result.passed);
  EXPECT_EQ(result.lhs, "12");
  EXPECT_TRUE(result.rhs.empty());
}

TEST(CheckIdentity, CorrectedQAnalogue) {
  const auto result = check_identity("qr2", {{"alpha", 1}, {"k", 1}, {"n", 1}}, Mode::corrected);
  EXPECT_TRUE(result.passed);
  EXPECT_EQ(result.lhs, "-q^-2 - q^-1");
}

TEST(CheckIdentity, AsPrintedQAnalogueFails) {
  const auto result = check_identity("qr2", {{"alpha", 1}, {"k", 1}, {"n", 1}}, Mode::as_printed);
  EXPECT_FALSE(result.passed);
  EXPECT_EQ(result.lhs, "-q^-2 - q^-1");
  EXPECT_EQ(result.rhs, "-1 - q");
}

TEST(CheckIdentity, MansourPrintedBound) {
  const Params p{{"seq", 0}, {"alpha", 1}, {"n", 3}, {"k", 1}};
  EXPECT_TRUE(check_identity("mansour", p, Mode::corrected).passed);
  const auto printed = check_identity("mansour", p, Mode::as_printed);
  EXPECT_FALSE(printed.passed);
  EXPECT_EQ(printed.lhs, "6");
  EXPECT_EQ(printed.rhs, "-6");
}

TEST(CheckIdentity, Errors) {
  EXPECT_THROW(check_identity("no_such_identity", {}), UnknownIdentity);
  EXPECT_THROW(check_identity("r4", {{"alpha", 1}, {"k", 1}, {"n", 2}}), ParamsOutOfDomain);
  EXPECT_THROW(check_identity("r4", {{"alpha", 1}, {"k", 2}}), ParamsOutOfDomain);
  EXPECT_THROW(check_identity("r4", {{"k", 2}, {"alpha", 1}, {"n", 2}}), ParamsOutOfDomain);
}

TEST(RunSuite, ClassicalPasses) {
  RunConfig config;
  config.suite = Suite::classical;
  config.alpha_list = {1};
  config.n_max = 8;
  const Report report = run_suite(config);
  EXPECT_GT(report.total, 0U);
  EXPECT_EQ(report.total, report.passed + report.failed.size());
  EXPECT_TRUE(report.failed.empty()) << report_to_text(report);
}

TEST(RunSuite, FullCorrectedSuitePasses) {
  RunConfig config;
  config.suite = Suite::all;
  config.alpha_list = {1, 2};
  config.n_max = 6;
  const Report report = run_suite(config);
  EXPECT_TRUE(report.failed.empty()) << report_to_text(report);
}

TEST(RunSuite, AsPrintedQSuiteReportsOnlyTheQAnalogue) {
  RunConfig config;
  config.suite = Suite::q;
  config.alpha_list = {1};
  config.n_max = 2;
  config.mode = Mode::as_printed;
  const Report report = run_suite(config);
  ASSERT_FALSE(report.failed.empty());
  for (const auto& f : report.failed) EXPECT_TRUE(f.id == "qr2" || f.id == "qr2_1") << f.id;
  EXPECT_EQ(report.total, report.passed + report.failed.size());
}

TEST(RunSuite, Errors) {
  RunConfig config;
  config.n_max = 0;
  EXPECT_THROW(run_suite(config), InvalidRange);
}

TEST(RunSuite, FailuresAreCanonicallyOrdered) {
  RunConfig config;
  config.suite = Suite::all;
  config.alpha_list = {1, 2};
  config.n_max = 5;
  config.mode = Mode::as_printed;
  const Report report = run_suite(config);
  const bool sorted = std::is_sorted(report.failed.begin(), report.failed.end(),
                                     [](const CheckResult& a, const CheckResult& b) {
                                       return std::tie(a.id, a.params) < std::tie(b.id, b.params);
                                     });
  EXPECT_TRUE(sorted);
}

TEST(RunSuite, Deterministic) {
  RunConfig config;
  config.suite = Suite::all;
  config.alpha_list = {1, 2};
  config.n_max = 4;
  config.mode = Mode::as_printed;
  const std::string first = report_to_json(run_suite(config));
  const std::string second = report_to_json(run_suite(config));
  EXPECT_EQ(first, second);
}

TEST(ReportJson, Schema) {
  RunConfig config;
  config.suite = Suite::q;
  config.alpha_list = {1};
  config.n_max = 2;
  config.mode = Mode::as_printed;
  const auto doc = nlohmann::json::parse(report_to_json(run_suite(config)));
  ASSERT_TRUE(doc.contains("config"));
  EXPECT_EQ(doc["config"]["suite"], "q");
  EXPECT_EQ(doc["config"]["mode"], "as_printed");
  EXPECT_EQ(doc["config"]["n_max"], 2);
  EXPECT_TRUE(doc["total"].is_number_integer());
  EXPECT_TRUE(doc["passed"].is_number_integer());
  EXPECT_TRUE(doc["wall_ms"].is_number_integer());
  EXPECT_EQ(doc["wall_ms"], 0);
  ASSERT_TRUE(doc["failed"].is_array());
  ASSERT_FALSE(doc["failed"].empty());
  const auto& f = doc["failed"][0];
  EXPECT_TRUE(f["id"].is_string());
  EXPECT_TRUE(f["params"].is_object());
  EXPECT_TRUE(f["lhs"].is_string());
  EXPECT_TRUE(f["rhs"].is_string());
  EXPECT_EQ(doc["total"].get<int>(), doc["passed"].get<int>() + static_cast<int>(doc["failed"].size()));
}

TEST(ParseNames, RoundTrip) {
  EXPECT_EQ(parse_mode("corrected"), Mode::corrected);
  EXPECT_EQ(parse_mode("as_printed"), Mode::as_printed);
  EXPECT_EQ(parse_suite("classical"), Suite::classical);
  EXPECT_EQ(to_string(Suite::q), "q");
  EXPECT_THROW(parse_mode("loose"), InvalidRange);
  EXPECT_THROW(parse_suite("everything"), InvalidRange);
}

}  // namespace
}  // namespace lahq
