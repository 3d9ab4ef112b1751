#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace facon;
using facon::fixtures::rationals;

namespace {

ExponentVector ev(std::vector<std::int64_t> v) { return ExponentVector(std::move(v)); }

} // namespace

TEST(NumericCurveCheck, LineThroughRemarkPoint) {
    const auto r = numeric_curve_check(fixtures::load("remark"), ev({-1, 1}), rationals({1, 1}), rationals({0, 1}),
                                       {1e3, 1e4, 1e5, 1e6}, 1e-2);
    EXPECT_TRUE(r.passed);
    ASSERT_EQ(r.deviations.size(), 4u);
    EXPECT_NEAR(r.deviations.back(), 1e-6, 1e-12);
    EXPECT_TRUE(r.notes.empty());
}

TEST(NumericCurveCheck, CuspReachesOneOne) {
    const auto f = fixtures::load("cusp");
    EXPECT_TRUE(numeric_curve_check(f, ev({-1, 1}), rationals({1, 1}), rationals({1, 1})).passed);
    EXPECT_FALSE(numeric_curve_check(f, ev({-1, 1}), rationals({1, 1}), rationals({2, 2})).passed);
}

TEST(NumericCurveCheck, IncreasingDeviationFails) {
    // Diverging first coordinate: the deviation grows with u.
    const auto r = numeric_curve_check(fixtures::load("remark"), ev({1, -1}), rationals({1, 1}), rationals({0, 1}),
                                       {1e-6, 1e-5, 1e-4}, 1.0);
    EXPECT_FALSE(r.passed);
}

TEST(NumericCurveCheck, OverflowShrinksSchedule) {
    const auto r = numeric_curve_check(parse_mapping("vars x1 x2; x1*x2; x2"), ev({60, -60}), rationals({1, 1}),
                                       rationals({1, 0}));
    EXPECT_EQ(r.schedule, (std::vector<double>{1e3, 1e4, 1e5}));
    ASSERT_EQ(r.notes.size(), 1u);
    EXPECT_NE(r.notes[0].find("overflow"), std::string::npos);
    EXPECT_TRUE(r.passed);
}

TEST(NumericCurveCheck, PreconditionsEnforced) {
    const auto f = fixtures::load("cusp");
    EXPECT_THROW(numeric_curve_check(f, ev({-1, 1}), rationals({0, 1}), rationals({0, 0})), UsageError);
    EXPECT_THROW(numeric_curve_check(f, ev({-1, 1}), rationals({1, 1}), rationals({1, 1}), {1e4, 1e3}), UsageError);
    EXPECT_THROW(numeric_curve_check(f, ev({-1, 1}), rationals({1}), rationals({1, 1})), UsageError);
}

TEST(OracleCrossCheck, Examples) {
    auto r = oracle_cross_check(fixtures::load("exfacon"), 2);
    EXPECT_TRUE(r.agrees);
    EXPECT_EQ(r.numeric_labels.size(), 3u);
    r = oracle_cross_check(fixtures::load("cusp"), 2);
    EXPECT_TRUE(r.agrees);
    EXPECT_EQ(r.numeric_labels, (std::set<std::string>{"(2)[1]"}));
    r = oracle_cross_check(fixtures::load("identity"), 2);
    EXPECT_TRUE(r.agrees);
    EXPECT_TRUE(r.numeric_labels.empty());
}

TEST(OracleCrossCheck, BoundLimited) {
    EXPECT_THROW(oracle_cross_check(fixtures::load("cusp"), 3), UsageError);
    EXPECT_THROW(oracle_cross_check(fixtures::load("cusp"), 0), UsageError);
}

TEST(OracleCrossCheck, LargeConvergentValueIsReportedAsMismatch) {
    const auto r = oracle_cross_check(parse_mapping("vars x1 x2; 5000*x1*x2; x2"), 1);
    EXPECT_FALSE(r.agrees);
    ASSERT_FALSE(r.mismatches.empty());
    EXPECT_NE(r.mismatches[0].find("symbolically only"), std::string::npos);
}

TEST(VerifyProperties, AllBundledExamplesAgree) {
    for (const auto& name : fixtures::bundled()) {
        const auto f = fixtures::load(name);
        EXPECT_TRUE(oracle_cross_check(f, 2).agrees) << name;
        for (const auto& check : check_catalog_numerically(f, collect_facons(f, 2), 0, {1e6}, 1e-2)) {
            EXPECT_TRUE(check.report.passed) << name << " " << check.representative.to_string();
        }
    }
}

TEST(VerifyProperties, FullScheduleAtDefaultBound) {
    const auto f = fixtures::load("cone");
    const auto checks = check_catalog_numerically(f, collect_facons(f, 4), 0);
    ASSERT_FALSE(checks.empty());
    for (const auto& check : checks) EXPECT_TRUE(check.report.passed) << check.representative.to_string();
}
