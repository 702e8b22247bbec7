#include <gtest/gtest.h>

#include "ribbon/verify.hpp"

using namespace ribbon;

namespace {

FockVec word(const std::vector<int>& letters, int n, const FockVec& v) {
    FockVec out = v;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = apply_u(*it, n, out);
    return out;
}

bool equal_on(const std::vector<int>& a, const std::vector<int>& b, int n, const std::vector<Partition>& grid) {
    for (const auto& mu : grid)
        if (word(a, n, mu) != word(b, n, mu)) return false;
    return true;
}

}  // namespace

TEST(Verify, RelationsHold) {
    for (int n = 2; n <= 4; ++n) {
        auto r = check_relations(n, 12);
        EXPECT_GT(r.cases, 0);
        EXPECT_TRUE(r.ok()) << r.failures.size() << " failures for n=" << n;
    }
}

TEST(Verify, CauchyHeisenbergAndDiagonal) {
    for (int n = 2; n <= 3; ++n) {
        EXPECT_TRUE(check_cauchy(n, 3, 6).ok());
        EXPECT_TRUE(check_heisenberg(n, 2, 6).ok());
        EXPECT_TRUE(check_haction(n, 7).ok());
        EXPECT_TRUE(check_h_commute(n, 3, 6).ok());
    }
}

TEST(Verify, WitnessesReplay) {
    Witness w{"heisenberg", 2, Partition{2, 1}, {1, -1}, {}, {}};
    auto [lhs, rhs] = evaluate_case(w.relation, w.n, w.lambda, w.indices, nullptr);
    w.lhs = lhs;
    w.rhs = rhs;
    EXPECT_EQ(lhs, rhs);
    EXPECT_FALSE(replay(w));  // a replayed witness fails only if the identity does
}

TEST(Verify, UnknownRelation) {
    EXPECT_THROW(evaluate_case("nope", 2, Partition{}, {1}, nullptr), std::invalid_argument);
}

// Knuth-like relations: for i<j<k or i>j>k, u_i u_k u_j equals u_k u_i u_j or
// u_j u_i u_k, and u_j u_k u_i equals u_j u_i u_k or u_k u_i u_j.
TEST(Verify, KnuthLikeRelations) {
    auto grid = partitions_up_to(7);
    for (int n = 2; n <= 3; ++n)
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j)
                for (int k = -4; k <= 4; ++k) {
                    if (!((i < j && j < k) || (i > j && j > k))) continue;
                    EXPECT_TRUE(equal_on({i, k, j}, {k, i, j}, n, grid) || equal_on({i, k, j}, {j, i, k}, n, grid))
                        << "n=" << n << " " << i << ',' << j << ',' << k;
                    EXPECT_TRUE(equal_on({j, k, i}, {j, i, k}, n, grid) || equal_on({j, k, i}, {k, i, j}, n, grid))
                        << "n=" << n << " " << i << ',' << j << ',' << k;
                }
}
