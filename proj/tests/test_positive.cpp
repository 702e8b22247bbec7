#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ribbon/positive.hpp"
#include "ribbon/qlr.hpp"

using namespace ribbon;

namespace {

FilledTableau square(std::vector<int> top, std::vector<int> bottom) {
    return FilledTableau(Partition{2, 2}, {std::move(top), std::move(bottom)});
}

FockVec word_on_vacuum(const std::vector<int>& letters, int n) {
    FockVec v = FockVec::vacuum();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = apply_u(*it, n, v);
    return v;
}

}  // namespace

TEST(Commuting, ThreeCommutingExamples) {
    for (const auto& t : {square({0, 1}, {2, 3}), square({0, 2}, {1, 4}), square({1, 2}, {0, 3})})
        EXPECT_TRUE(is_n_commuting(t, 3)) << t.rows[0][0] << t.rows[0][1] << '/' << t.rows[1][0] << t.rows[1][1];
    for (const auto& t : {square({2, 3}, {0, 1}), square({0, 2}, {1, 3}), square({1, 2}, {0, 4})})
        EXPECT_FALSE(is_n_commuting(t, 3)) << t.rows[0][0] << t.rows[0][1] << '/' << t.rows[1][0] << t.rows[1][1];
}

TEST(Commuting, RowsMustIncrease) {
    EXPECT_FALSE(is_n_commuting(FilledTableau(Partition{2}, {{1, 1}}), 2));
    EXPECT_TRUE(is_n_commuting(FilledTableau(Partition{2}, {{1, 2}}), 2));
    EXPECT_THROW(FilledTableau(Partition{2, 1}, {{1, 2}}), std::invalid_argument);
}

TEST(Commuting, ReadingWord) {
    EXPECT_EQ(reading_word(square({1, 2}, {0, 3})), (std::vector<int>{2, 1, 3, 0}));
}

// Shape (2,2) with entries {0,1,2,3} and n = 3: exactly S and T, and T kills the vacuum.
TEST(Commuting, TwoByTwoExample) {
    std::vector<FilledTableau> full;
    for (const auto& t : s2_fillings(2, 3, 0, 3)) {
        std::set<int> entries;
        for (const auto& row : t.rows) entries.insert(row.begin(), row.end());
        if (entries == std::set<int>{0, 1, 2, 3}) full.push_back(t);
    }
    ASSERT_EQ(full.size(), 2u);
    std::set<std::vector<int>> words;
    for (const auto& t : full) words.insert(reading_word(t));
    EXPECT_EQ(words, (std::set<std::vector<int>>{{2, 1, 3, 0}, {1, 0, 3, 2}}));
    EXPECT_TRUE(word_on_vacuum({1, 0, 3, 2}, 3).is_zero());
    EXPECT_EQ(word_on_vacuum({2, 1, 3, 0}, 3), FockVec(Partition{4, 4, 4}, QPoly::monomial(4)));
}

TEST(Positive, AgreesWithDeterminant) {
    const std::vector<Partition> shapes{{1},    {2},       {1, 1},    {3},       {2, 1},    {1, 1, 1}, {4},
                                        {3, 1}, {2, 2},    {2, 1, 1}, {3, 2},    {2, 2, 1}, {3, 2, 1}, {4, 2}};
    for (int n = 2; n <= 3; ++n)
        for (const auto& nu : shapes)
            for (const auto& mu : partitions_up_to(6)) {
                auto pa = positive_action(nu, n, mu);
                EXPECT_EQ(pa.result, apply_symfunc(SymFuncName::s(nu), n, mu)) << nu << " on " << mu << " n=" << n;
            }
}

TEST(Positive, RouteReporting) {
    EXPECT_EQ(positive_action(Partition{3, 1}, 2, FockVec::vacuum()).route, PositiveRoute::primal);
    EXPECT_EQ(positive_action(Partition{2, 2, 1}, 2, FockVec::vacuum()).route, PositiveRoute::dual);
    EXPECT_EQ(positive_action(Partition{2, 2, 1}, 2, FockVec::vacuum(), false).route, PositiveRoute::determinant);
    EXPECT_EQ(positive_action(Partition{3, 3}, 2, FockVec::vacuum()).route, PositiveRoute::determinant);
    EXPECT_STREQ(route_name(PositiveRoute::dual), "positive-dual");
}

TEST(Positive, FamilyDetection) {
    EXPECT_TRUE(is_hook(Partition{3, 1, 1}));
    EXPECT_FALSE(is_hook(Partition{2, 2}));
    EXPECT_TRUE(is_s2(Partition{2, 2}));
    EXPECT_TRUE(is_s2(Partition{5, 2}));
    EXPECT_FALSE(is_s2(Partition{3, 3}));
    EXPECT_FALSE(positive_family(Partition{3, 3}));
}

TEST(Yamanouchi, Runs) {
    EXPECT_EQ(increasing_runs({0, 3, 1, 2}), (std::vector<int>{2, 2}));
    EXPECT_EQ(increasing_runs({3, 2, 2}), (std::vector<int>{1, 1, 1}));
    EXPECT_TRUE(increasing_runs({}).empty());
}

// The spins of the Yamanouchi tableaux sum to the q-LR coefficient.
TEST(Yamanouchi, SpinsGiveCoefficients) {
    for (int n = 2; n <= 3; ++n)
        for (const auto& s : skew_shapes(9, n)) {
            auto table = qlr_via_expansion(s, n);
            for (const auto& [nu, c] : table.entries) {
                if (!positive_family(nu)) continue;
                auto ts = yamanouchi_tableaux(nu, s, n);
                EXPECT_EQ(yamanouchi_polynomial(ts), c) << s.to_string() << ' ' << nu << " n=" << n;
                for (const auto& t : ts) EXPECT_EQ(t.shape(), s);
            }
        }
}

TEST(Yamanouchi, WorkedExample) {
    auto ts = yamanouchi_tableaux(Partition{2, 2}, SkewShape(Partition{4, 4, 4}), 3);
    ASSERT_EQ(ts.size(), 1u);
    EXPECT_EQ(ts.front().spin, 4);
}

TEST(Yamanouchi, UnsupportedShapes) {
    EXPECT_THROW(yamanouchi_tableaux(Partition{3, 3}, SkewShape(Partition{6, 6}), 2), UnsupportedShape);
    EXPECT_THROW(yamanouchi_tableaux(Partition{2, 2}, SkewShape(Partition{4}), 2), std::invalid_argument);
}
