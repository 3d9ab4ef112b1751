#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace facon;
using facon::fixtures::c;

namespace {

ExponentVector ev(std::vector<std::int64_t> v) { return ExponentVector(std::move(v)); }

} // namespace

TEST(ExponentVector, RequiresPositiveEntry) {
    EXPECT_THROW(ev({-1, 0}), UsageError);
    EXPECT_NO_THROW(ev({-1, 1}));
    EXPECT_EQ(ev({-1, 0, 2}).scaled(3), ev({-3, 0, 6}));
    EXPECT_THROW(ev({1}).scaled(0), UsageError);
}

TEST(Substitute, ThreeVariableExample) {
    const auto f = fixtures::load("exfacon");
    const auto s = substitute(f, ev({-1, 0, 1}));
    ASSERT_EQ(s.size(), 3u);
    ASSERT_EQ(s[0].terms().size(), 1u);
    EXPECT_EQ(*s[0].coefficient(-1), c("c1", 3));
    ASSERT_EQ(s[1].terms().size(), 1u);
    EXPECT_EQ(*s[1].coefficient(0), c("c2", 3));
    ASSERT_EQ(s[2].terms().size(), 1u);
    EXPECT_EQ(*s[2].coefficient(0), c("c1*c2*c3", 3));
}

TEST(Substitute, IdentityComponentDiverges) {
    const auto s = substitute(parse_mapping("vars x1; x1"), ev({1}));
    ASSERT_EQ(s[0].terms().size(), 1u);
    EXPECT_EQ(*s[0].coefficient(1), c("c1", 1));
}

TEST(Substitute, CuspSteepCurve) {
    const auto s = substitute(fixtures::load("cusp"), ev({-2, 1}));
    ASSERT_EQ(s[0].terms().size(), 1u);
    EXPECT_EQ(*s[0].coefficient(-2), c("c1^2*c2^2", 2));
    ASSERT_EQ(s[1].terms().size(), 2u);
    EXPECT_EQ(*s[1].coefficient(-3), c("c1^3*c2^3", 2));
    EXPECT_EQ(*s[1].coefficient(-2), c("c1", 2));
}

TEST(Substitute, LengthMismatchThrows) {
    EXPECT_THROW(substitute(fixtures::load("cusp"), ev({1})), UsageError);
}

TEST(ClassifyLimit, Examples) {
    ULaurentPoly negative;
    negative.add(-1, c("c1", 3));
    auto r = classify_limit(negative, 3);
    EXPECT_EQ(r.kind, LimitKind::Converges);
    EXPECT_TRUE(r.value->is_zero());

    ULaurentPoly constant;
    constant.add(0, c("c1*c2*c3", 3));
    r = classify_limit(constant, 3);
    EXPECT_EQ(r.kind, LimitKind::Converges);
    EXPECT_EQ(*r.value, c("c1*c2*c3", 3));

    ULaurentPoly divergent;
    divergent.add(1, c("c1*c2", 3));
    divergent.add(-1, c("c3", 3));
    EXPECT_EQ(classify_limit(divergent, 3).kind, LimitKind::DivergesGeneric);
    EXPECT_FALSE(classify_limit(divergent, 3).value.has_value());
}

TEST(LimitMapping, ThreeVariableExample) {
    const auto lm = limit_mapping(fixtures::load("exfacon"), ev({-1, 0, 1}));
    ASSERT_TRUE(lm);
    EXPECT_TRUE(lm->components[0].is_zero());
    EXPECT_EQ(lm->components[1], c("c2", 3));
    EXPECT_EQ(lm->components[2], c("c1*c2*c3", 3));
    EXPECT_EQ(lm->free_params, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(lm->constraints.size(), 2u);
}

TEST(LimitMapping, CuspCurves) {
    const auto f = fixtures::load("cusp");
    const auto generic = limit_mapping(f, ev({-1, 1}));
    ASSERT_TRUE(generic);
    EXPECT_EQ(generic->components[0], c("(c1*c2)^2", 2));
    EXPECT_EQ(generic->components[1], c("(c1*c2)^3", 2));
    EXPECT_EQ(generic->free_params, (std::vector<std::size_t>{0, 1}));

    const auto steep = limit_mapping(f, ev({-2, 1}));
    ASSERT_TRUE(steep);
    EXPECT_TRUE(steep->components[0].is_zero());
    EXPECT_TRUE(steep->components[1].is_zero());

    EXPECT_FALSE(limit_mapping(f, ev({-1, 2})));
}

TEST(FaconOf, Examples) {
    const auto f = fixtures::load("exfacon");
    EXPECT_EQ(facon_of(f, ev({-1, 0, 1})).label(), "(3)[1]");
    EXPECT_EQ(facon_of(f, ev({-1, -1, 2})).label(), "(3)[1,2]");
    EXPECT_EQ(facon_of(fixtures::load("cone"), ev({1, -1, 1})).label(), "(1,3)[2]");
    EXPECT_THROW(facon_of(f, ev({1, 0, 0})), UsageError);
}

TEST(FaconOf, FreeIndicesAndOrdering) {
    const auto k = facon_of(fixtures::load("exfacon"), ev({-1, 0, 1}));
    EXPECT_EQ(k.free, (std::vector<std::size_t>{2}));
    EXPECT_EQ(k.etoile_label(1), "(3)[1]^{1*}");
    const Facon a{{3}, {1}, {}}, b{{3}, {2}, {}}, ab{{3}, {1, 2}, {}};
    EXPECT_LT(a, b);
    EXPECT_LT(b, ab);
    EXPECT_EQ((Facon{{1}, {}, {}}).label(), "(1)[]");
}

TEST(AssociatedTuple, Examples) {
    auto t = associated_tuple(ev({-1, 1}));
    EXPECT_EQ(t.to_string(), "(1;1)");
    EXPECT_EQ(t.primitive().to_string(), "(1;1)");
    t = associated_tuple(ev({-2, 2}));
    EXPECT_EQ(t.to_string(), "(2;2)");
    EXPECT_EQ(t.primitive().to_string(), "(1;1)");
    t = associated_tuple(ev({-2, 1}));
    EXPECT_EQ(t.to_string(), "(1;2)");
    EXPECT_EQ(t.primitive().to_string(), "(1;2)");
}

TEST(CurveProperties, ReparametrizationInvariance) {
    for (const auto& name : fixtures::bundled()) {
        const auto f = fixtures::load(name);
        for (const auto& e : enumerate_exponents(f.n, 2)) {
            const auto base = limit_mapping(f, e);
            for (std::int64_t k : {2, 3}) {
                const auto scaled = limit_mapping(f, e.scaled(k));
                ASSERT_EQ(base.has_value(), scaled.has_value()) << name << " " << e.to_string();
                if (!base) continue;
                EXPECT_EQ(*base, *scaled) << name << " " << e.to_string();
                EXPECT_EQ(facon_of(f, e), facon_of(f, e.scaled(k)));
                EXPECT_EQ(associated_tuple(e).primitive(), associated_tuple(e.scaled(k)).primitive());
            }
        }
    }
}

TEST(CurveProperties, FaconIndexSetsPartitionCoordinates) {
    for (const auto& name : fixtures::bundled()) {
        const auto f = fixtures::load(name);
        for (const auto& e : enumerate_exponents(f.n, 2)) {
            if (!limit_mapping(f, e)) continue;
            const Facon k = facon_of(f, e);
            EXPECT_GE(k.infinity.size(), 1u);
            std::vector<std::size_t> all = k.infinity;
            all.insert(all.end(), k.zero.begin(), k.zero.end());
            all.insert(all.end(), k.free.begin(), k.free.end());
            std::sort(all.begin(), all.end());
            std::vector<std::size_t> expected(f.n);
            for (std::size_t i = 0; i < f.n; ++i) expected[i] = i + 1;
            EXPECT_EQ(all, expected);
        }
    }
}

TEST(CurveProperties, LimitsContainOnlyFreeParameters) {
    for (const auto& name : fixtures::bundled()) {
        const auto f = fixtures::load(name);
        for (const auto& e : enumerate_exponents(f.n, 2)) {
            const auto lm = limit_mapping(f, e);
            if (!lm) continue;
            for (const auto& comp : lm->components) {
                for (auto v : comp.variables()) {
                    EXPECT_TRUE(std::find(lm->free_params.begin(), lm->free_params.end(), v) !=
                                lm->free_params.end());
                }
            }
        }
    }
}
