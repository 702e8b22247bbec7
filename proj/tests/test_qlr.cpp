#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ribbon/qlr.hpp"

using namespace ribbon;

TEST(Qlr, WorkedExample) {
    SkewShape shape(Partition{4, 4, 4});
    auto t = qlr_via_expansion(shape, 3);
    EXPECT_EQ(t[Partition({2, 1, 1})], QPoly::monomial(2));
    EXPECT_EQ(t[Partition({3, 1})], QPoly::parse("q^4 + q^6"));
    EXPECT_EQ(t[Partition({2, 2})], QPoly::monomial(4));
    EXPECT_EQ(t[Partition({4})], QPoly::monomial(8));
    EXPECT_EQ(t[Partition({1, 1, 1, 1})], QPoly{});
    EXPECT_EQ(t, qlr_table_via_operators(shape, 3));
    EXPECT_EQ(qlr_via_operators(Partition{2, 2}, shape, 3), QPoly::monomial(4));
}

TEST(Qlr, SizeMismatchWarns) {
    std::vector<std::string> warnings;
    EXPECT_EQ(qlr_via_operators(Partition{2}, SkewShape(Partition{4, 4, 4}), 3, &warnings), QPoly{});
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_THROW(qlr_via_expansion(SkewShape(Partition{4}), 3), std::invalid_argument);
}

// n = 1: both routes give the classical Littlewood-Richardson numbers.
TEST(Qlr, ClassicalLittlewoodRichardson) {
    for (const auto& s : skew_shapes(7, 1)) {
        auto ops = qlr_table_via_operators(s, 1);
        auto exp = qlr_via_expansion(s, 1);
        for (const auto& nu : partitions_of(s.size())) {
            QPoly expected(oracle::lr_coefficient(s.outer, s.inner, nu));
            EXPECT_EQ(ops[nu], expected) << s.to_string() << ' ' << nu;
            EXPECT_EQ(exp[nu], expected) << s.to_string() << ' ' << nu;
        }
    }
}

// At q = 1 the coefficients for a shape with empty n-core are the Schur
// expansion of the product of the quotient's Schur functions.
TEST(Qlr, QuotientProductAtQEqualsOne) {
    for (int n = 2; n <= 3; ++n)
        for (const auto& lambda : partitions_up_to(10)) {
            if (lambda.empty()) continue;
            auto cq = core_and_quotient(lambda, n);
            if (!cq.core.empty()) continue;
            FockVec product = FockVec::vacuum();
            for (const auto& q : cq.quotient) product = apply_symfunc(SymFuncName::s(q), 1, product);
            auto t = qlr_via_expansion(SkewShape(lambda), n);
            for (const auto& [nu, c] : t.entries)
                EXPECT_EQ(c.eval_at_one(), product.coefficient_of(nu).eval_at_one()) << lambda << ' ' << nu;
        }
}

TEST(Qlr, RoutesAgreeOnSmallShapes) {
    auto cv = cross_validate_routes({8, {2, 3}, true, 0});
    EXPECT_GT(cv.entries, 0);
    EXPECT_TRUE(cv.mismatches.empty());
}

TEST(Qlr, NonnegativeOnSmallShapes) {
    auto r = nonnegativity_scan({8, {2, 3}, true, 0});
    EXPECT_GT(r.shapes, 0);
    EXPECT_TRUE(r.clean());
}

TEST(Qlr, ShapeEnumeration) {
    for (const auto& s : skew_shapes(6, 2)) {
        EXPECT_EQ(s.size() % 2, 0);
        EXPECT_GT(s.size(), 0);
        EXPECT_LE(s.outer.size(), 6);
    }
    for (const auto& s : skew_shapes(6, 2, false)) EXPECT_TRUE(s.inner.empty());
}
