#include <gtest/gtest.h>

#include <set>

#include "ribbon/dimension.hpp"

using namespace ribbon;

TEST(Rank, ExactOverPolynomials) {
    auto q = QPoly::monomial(1);
    EXPECT_EQ(detail::exact_rank({{QPoly(1), q}, {q, q * q}}), 1);
    EXPECT_EQ(detail::exact_rank({{QPoly(1), q}, {q, QPoly(1)}}), 2);
    EXPECT_EQ(detail::exact_rank({{QPoly(1), q, QPoly(2)}, {QPoly(2), q + q, QPoly(4)}, {QPoly{}, QPoly{}, q}}), 2);
    EXPECT_EQ(detail::exact_rank({}), 0);
}

TEST(Rank, ModularSpecialization) {
    auto q = QPoly::monomial(1);
    constexpr std::uint64_t p = 1000003;
    std::vector<std::vector<QPoly>> m{{QPoly(1), q}, {q, QPoly(1)}};
    EXPECT_EQ(detail::modular_rank(m, 5, p), 2);
    EXPECT_EQ(detail::modular_rank(m, 1, p), 1);  // q = 1 is a root of the determinant
}

TEST(Rank, DivisionIsExact) {
    auto a = QPoly::parse("1 - q^2");
    EXPECT_EQ(detail::divide_exact(a, QPoly::parse("1 - q")), QPoly::parse("1 + q"));
    EXPECT_THROW(detail::divide_exact(a, QPoly::parse("2 + q")), std::domain_error);
    EXPECT_THROW(detail::divide_exact(a, QPoly{}), std::domain_error);
}

TEST(Dimension, WindowSources) {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k) {
            auto src = detail::window_sources(n, k);
            EXPECT_EQ(src.size(), std::size_t{1} << ((k + 1) * n));
            std::set<std::vector<bool>> patterns;
            for (const auto& p : src) {
                auto m = MayaSequence::of(p, p.length() + (k + 2) * n);
                std::vector<bool> bits;
                for (int x = 1 - n; x <= k * n; ++x) bits.push_back(m.contains(x));
                patterns.insert(bits);
            }
            EXPECT_EQ(patterns.size(), src.size()) << "n=" << n << " k=" << k;
        }
}

TEST(Dimension, MeasuredRanks) {
    const long one[] = {2, 5, 14};
    for (int k = 1; k <= 3; ++k) {
        auto d = algebra_dimension(1, k);
        EXPECT_EQ(d.rank, one[k - 1]);
        for (long r : d.specialized_ranks) EXPECT_EQ(r, d.rank);
        EXPECT_FALSE(d.inconclusive);
    }
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(algebra_dimension(2, k).rank, one[k - 1] * one[k - 1]);
    EXPECT_EQ(algebra_dimension(3, 1).rank, 8);
}

TEST(Dimension, SmallTruncationIsFlagged) {
    auto d = algebra_dimension(1, 2, 3);
    EXPECT_EQ(d.sources, "size<=3");
    EXPECT_LT(d.rank, 5);
    EXPECT_TRUE(d.inconclusive);
}

TEST(Dimension, PrintedFormulaIsReported) {
    EXPECT_NEAR(algebra_dimension(1, 1).printed_formula, 2.0 / 3.0, 1e-12);
    EXPECT_THROW(algebra_dimension(1, 0), std::invalid_argument);
    EXPECT_THROW(algebra_dimension(0, 1), std::invalid_argument);
}
