#pragma once

// Cell-level reference implementations used to check the library. None of
// them go through Maya sequences or operators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ribbon/partition.hpp"

namespace oracle {

using ribbon::Partition;
using Cell = std::pair<int, int>;  // (row, column), 1-based

inline std::vector<Cell> cells(const Partition& outer, const Partition& inner) {
    std::vector<Cell> out;
    for (int x = 1; x <= outer.length(); ++x)
        for (int y = inner[x] + 1; y <= outer[x]; ++y) out.emplace_back(x, y);
    return out;
}

struct Ribbon {
    int head_diagonal;
    int spin;
};

/// nu/lambda as an n-ribbon: connected, no 2x2 square, n cells.
inline std::optional<Ribbon> as_ribbon(const Partition& nu, const Partition& lambda, int n) {
    if (!nu.contains(lambda) || nu.size() - lambda.size() != n) return std::nullopt;
    auto cs = cells(nu, lambda);
    std::set<Cell> in(cs.begin(), cs.end());
    for (auto [x, y] : cs)
        if (in.count({x + 1, y}) && in.count({x, y + 1}) && in.count({x + 1, y + 1})) return std::nullopt;
    std::set<Cell> seen{cs.front()};
    std::vector<Cell> stack{cs.front()};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (Cell c : {Cell{x + 1, y}, Cell{x - 1, y}, Cell{x, y + 1}, Cell{x, y - 1}})
            if (in.count(c) && seen.insert(c).second) stack.push_back(c);
    }
    if (seen.size() != cs.size()) return std::nullopt;
    int top = cs.front().first, bottom = cs.back().first;
    int right = 0;
    for (auto [x, y] : cs)
        if (x == top) right = std::max(right, y);
    return Ribbon{right - top, bottom - top};
}

/// Partitions obtained from lambda by adding one box.
inline std::vector<Partition> add_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int x = 1; x <= lambda.length() + 1; ++x) {
        if (x > 1 && lambda[x - 1] == lambda[x]) continue;
        auto parts = lambda.vec();
        if (x > lambda.length())
            parts.push_back(1);
        else
            ++parts[static_cast<std::size_t>(x - 1)];
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// Every n-ribbon addable to lambda: (result, head diagonal, spin).
inline std::vector<std::tuple<Partition, int, int>> addable_ribbons(const Partition& lambda, int n) {
    std::set<Partition> layer{lambda};
    for (int k = 0; k < n; ++k) {
        std::set<Partition> next;
        for (const auto& p : layer)
            for (auto& q : add_box(p)) next.insert(std::move(q));
        layer = std::move(next);
    }
    std::vector<std::tuple<Partition, int, int>> out;
    for (const auto& nu : layer)
        if (auto r = as_ribbon(nu, lambda, n)) out.emplace_back(nu, r->head_diagonal, r->spin);
    return out;
}

/// Removes n-ribbons greedily until none is left; the core does not depend on the order.
inline Partition core_by_removal(Partition lambda, int n) {
    for (;;) {
        bool moved = false;
        for (const auto& mu : ribbon::partitions_of(lambda.size() - n)) {
            if (lambda.size() < n) break;
            if (as_ribbon(lambda, mu, n)) {
                lambda = mu;
                moved = true;
                break;
            }
        }
        if (!moved) return lambda;
    }
}

/// Visits every semistandard filling of outer/inner with entries in [1, max_entry].
inline void each_ssyt(const Partition& outer, const Partition& inner, int max_entry,
                      const std::function<void(const std::map<Cell, int>&)>& visit) {
    auto cs = cells(outer, inner);
    std::map<Cell, int> t;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == cs.size()) {
            visit(t);
            return;
        }
        auto [x, y] = cs[k];
        int lo = 1;
        if (auto it = t.find({x, y - 1}); it != t.end()) lo = std::max(lo, it->second);
        if (auto it = t.find({x - 1, y}); it != t.end()) lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= max_entry; ++v) {
            t[{x, y}] = v;
            go(k + 1);
        }
        t.erase({x, y});
    };
    go(0);
}

/// Skew Schur function in the monomial basis: m_alpha -> number of SSYT of content alpha.
inline std::map<Partition, std::int64_t> skew_schur_monomial(const Partition& outer, const Partition& inner) {
    int size = outer.size() - inner.size();
    std::map<Partition, std::int64_t> out;
    each_ssyt(outer, inner, size, [&](const std::map<Cell, int>& t) {
        std::vector<int> content(static_cast<std::size_t>(size), 0);
        for (const auto& [c, v] : t) ++content[static_cast<std::size_t>(v - 1)];
        if (!std::is_sorted(content.begin(), content.end(), std::greater<>())) return;
        while (!content.empty() && content.back() == 0) content.pop_back();
        ++out[Partition(content)];
    });
    return out;
}

/// Classical Littlewood-Richardson coefficient: SSYT of content nu whose
/// reverse reading word (rows top to bottom, right to left) is a lattice word.
inline std::int64_t lr_coefficient(const Partition& outer, const Partition& inner, const Partition& nu) {
    std::int64_t count = 0;
    each_ssyt(outer, inner, nu.length(), [&](const std::map<Cell, int>& t) {
        std::vector<int> seen(static_cast<std::size_t>(nu.length() + 1), 0);
        for (int x = 1; x <= outer.length(); ++x)
            for (int y = outer[x]; y > inner[x]; --y) {
                int v = t.at({x, y});
                ++seen[static_cast<std::size_t>(v)];
                if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)]) return;
            }
        for (int v = 1; v <= nu.length(); ++v)
            if (seen[static_cast<std::size_t>(v)] != nu[v]) return;
        ++count;
    });
    return count;
}

}  // namespace oracle
