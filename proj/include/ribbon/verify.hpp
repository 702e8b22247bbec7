#pragma once

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ribbon/detail/parallel.hpp"
#include "ribbon/operators.hpp"

namespace ribbon {

/// One failing case: enough to recompute both sides in isolation.
struct Witness {
    std::string relation;
    int n = 1;
    Partition lambda;
    std::vector<int> indices;
    FockVec lhs;
    FockVec rhs;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
    std::string identity;
    std::map<std::string, std::string> grid;
    long cases = 0;
    std::vector<Witness> failures;
    double elapsed_seconds = 0;

    bool ok() const noexcept { return failures.empty(); }
};

/// Memoized h_k, h_k^perp and B_k on basis partitions for one n. Safe for
/// concurrent use; entries are immutable once inserted.
class OperatorCache {
public:
    explicit OperatorCache(int n) : n_(n) { detail::require_ribbon_size(n); }

    int n() const noexcept { return n_; }
    FockVec h(int k, const FockVec& v) { return apply('h', k, v); }
    FockVec hperp(int k, const FockVec& v) { return apply('H', k, v); }
    FockVec B(int k, const FockVec& v) { return apply('B', k, v); }

private:
    int n_;
    std::map<std::tuple<char, int, Partition>, FockVec> memo_;
    std::shared_mutex mutex_;

    FockVec basis(char op, int k, const Partition& mu) {
        switch (op) {
            case 'h': return apply_h(k, n_, mu);
            case 'H': return apply_h_perp(k, n_, mu);
            default: return apply_B(k, n_, mu);
        }
    }

    FockVec apply(char op, int k, const FockVec& v) {
        FockVec out;
        for (const auto& [mu, c] : v) {
            auto key = std::make_tuple(op, k, mu);
            const FockVec* image = nullptr;
            {
                std::shared_lock lock(mutex_);
                if (auto it = memo_.find(key); it != memo_.end()) image = &it->second;
            }
            if (!image) {
                FockVec computed = basis(op, k, mu);
                std::unique_lock lock(mutex_);
                image = &memo_.try_emplace(key, std::move(computed)).first->second;
            }
            for (const auto& [lambda, d] : *image) out.add(lambda, c * d);
        }
        return out;
    }
};

namespace detail {

inline FockVec word(std::vector<int> letters, int n, const Partition& lambda) {
    return apply_word(Word{std::move(letters), n}, FockVec(lambda));
}

inline void need(const std::vector<int>& idx, std::size_t k, const std::string& relation) {
    if (idx.size() != k)
        throw std::invalid_argument(relation + " expects " + std::to_string(k) + " indices, got " +
                                    std::to_string(idx.size()));
}

// Sufficient head window for words of up to k letters acting on lambda.
inline std::pair<int, int> head_window(const Partition& lambda, int n, int k) {
    return {-(lambda.length() + n * k), lambda.first_part() + n * k};
}

}  // namespace detail

/// Both sides of one case of a named identity.
///   rel1..rel5, ud: indices (i) or (i, j) as in the relations
///   cauchy: (a, b)   heisenberg: (k, l)   hcommute: (k, l)
///   haction_add, haction_remove: (i, j) with an i-addable / i-removable ribbon
///   haction_line: (i, j) with no addable ribbon left of diagonal i
inline std::pair<FockVec, FockVec> evaluate_case(const std::string& relation, int n, const Partition& lambda,
                                                 const std::vector<int>& idx, OperatorCache* cache = nullptr) {
    std::optional<OperatorCache> local;
    if (!cache) cache = &local.emplace(n);
    if (relation == "rel1" || relation == "rel5") {
        detail::need(idx, 2, relation);
        int i = idx[0], j = idx[1];
        if (relation == "rel1" && std::abs(i - j) < n + 1) throw std::invalid_argument("rel1 needs |i - j| >= n + 1");
        if (relation == "rel5" && !(i - j > 0 && i - j < n)) throw std::invalid_argument("rel5 needs 0 < i - j < n");
        auto rhs = detail::word({j, i}, n, lambda);
        if (relation == "rel5") rhs *= QPoly::monomial(2);
        return {detail::word({i, j}, n, lambda), rhs};
    }
    if (relation == "rel2") {
        detail::need(idx, 1, relation);
        return {detail::word({idx[0], idx[0]}, n, lambda), {}};
    }
    if (relation == "rel3") {
        detail::need(idx, 1, relation);
        return {detail::word({idx[0] + n, idx[0], idx[0] + n}, n, lambda), {}};
    }
    if (relation == "rel4") {
        detail::need(idx, 1, relation);
        return {detail::word({idx[0], idx[0] + n, idx[0]}, n, lambda), {}};
    }
    if (relation == "ud") {
        detail::need(idx, 2, relation);
        int i = idx[0], j = idx[1];
        if (i == j) throw std::invalid_argument("ud needs i != j");
        return {apply_u(i, n, apply_d(j, n, lambda)), apply_d(j, n, apply_u(i, n, lambda))};
    }
    if (relation == "cauchy") {
        detail::need(idx, 2, relation);
        int a = idx[0], b = idx[1];
        FockVec lhs = cache->hperp(b, cache->h(a, lambda));
        FockVec rhs;
        for (int i = 0; i <= std::min(a, b); ++i) {
            FockVec term = cache->h(a - i, cache->hperp(b - i, lambda));
            term *= h_principal(i, n);
            rhs += term;
        }
        return {lhs, rhs};
    }
    if (relation == "heisenberg") {
        detail::need(idx, 2, relation);
        int k = idx[0], l = idx[1];
        FockVec lhs = cache->B(k, cache->B(l, lambda)) - cache->B(l, cache->B(k, lambda));
        FockVec rhs;
        if (k == -l) rhs = FockVec(lambda, QPoly(k) * QPoly::geometric(2 * std::abs(k), n));
        return {lhs, rhs};
    }
    if (relation == "hcommute") {
        detail::need(idx, 2, relation);
        int k = idx[0], l = idx[1];
        return {cache->h(k, cache->h(l, lambda)), cache->h(l, cache->h(k, lambda))};
    }
    if (relation == "haction_add" || relation == "haction_remove" || relation == "haction_line") {
        detail::need(idx, 2, relation);
        int i = idx[0], j = idx[1];
        if (relation == "haction_line") {
            for (const auto& s : ribbon_slots(lambda, n))
                if (s.kind == SlotKind::add && s.diagonal < i)
                    throw std::invalid_argument("haction_line needs no addable ribbon left of diagonal i");
            return {FockVec(lambda, diag_tail_eigenvalue(i, j, n, lambda)), FockVec(lambda, -QPoly::geometric(2 * j, n))};
        }
        bool add = relation == "haction_add";
        auto mv = add ? add_ribbon(lambda, i, n) : remove_ribbon(lambda, i, n);
        if (!mv) throw std::invalid_argument(relation + " needs an " + (add ? "addable" : "removable") + " ribbon at i");
        int terms = add ? mv->spin : mv->spin + 1;
        return {FockVec(lambda, diag_tail_eigenvalue(i + 1, j, n, lambda)),
                FockVec(lambda, -QPoly::geometric(2 * j, terms))};
    }
    throw std::invalid_argument("unknown relation \"" + relation + "\"");
}

/// True iff the witness still fails when recomputed from scratch.
inline bool replay(const Witness& w) {
    auto [lhs, rhs] = evaluate_case(w.relation, w.n, w.lambda, w.indices);
    return lhs != rhs;
}

namespace detail {

struct Case {
    std::string relation;
    std::vector<int> indices;
};

// Runs cases per partition (in parallel over partitions) and merges in
// partition order.
template <class CasesFor>
VerificationReport run_grid(std::string identity, std::map<std::string, std::string> grid, int n, int max_size,
                            int jobs, CasesFor&& cases_for) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report{std::move(identity), std::move(grid), 0, {}, 0};
    auto parts = partitions_up_to(max_size);
    OperatorCache cache(n);
    std::vector<long> counts(parts.size());
    std::vector<std::vector<Witness>> failures(parts.size());
    parallel_for(parts.size(), jobs, [&](std::size_t p) {
        const auto& lambda = parts[p];
        for (const auto& c : cases_for(lambda)) {
            ++counts[p];
            auto [lhs, rhs] = evaluate_case(c.relation, n, lambda, c.indices, &cache);
            if (lhs != rhs) failures[p].push_back({c.relation, n, lambda, c.indices, lhs, rhs});
        }
    });
    for (std::size_t p = 0; p < parts.size(); ++p) {
        report.cases += counts[p];
        report.failures.insert(report.failures.end(), failures[p].begin(), failures[p].end());
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline std::map<std::string, std::string> grid_of(std::initializer_list<std::pair<std::string, int>> items) {
    std::map<std::string, std::string> g;
    for (const auto& [k, v] : items) g[k] = std::to_string(v);
    return g;
}

}  // namespace detail

/// rel1-rel5 and u_i d_j = d_j u_i on all partitions of size <= max_size.
/// Without an explicit window each partition uses its sufficient window.
inline VerificationReport check_relations(int n, int max_size, std::optional<std::pair<int, int>> window = std::nullopt,
                                          int jobs = 0) {
    auto grid = detail::grid_of({{"n", n}, {"max_size", max_size}});
    if (window) grid["window"] = std::to_string(window->first) + ":" + std::to_string(window->second);
    return detail::run_grid("relations", grid, n, max_size, jobs, [&](const Partition& lambda) {
        auto [lo, hi] = window ? *window : detail::head_window(lambda, n, 3);
        std::vector<detail::Case> cases;
        for (int i = lo; i <= hi; ++i) {
            cases.push_back({"rel2", {i}});
            if (i + n <= hi) {
                cases.push_back({"rel3", {i}});
                cases.push_back({"rel4", {i}});
            }
            for (int j = lo; j <= hi; ++j) {
                if (i == j) continue;
                if (std::abs(i - j) >= n + 1 && i < j) cases.push_back({"rel1", {i, j}});
                if (i - j > 0 && i - j < n) cases.push_back({"rel5", {i, j}});
                cases.push_back({"ud", {i, j}});
            }
        }
        return cases;
    });
}

/// h_b^perp h_a = sum_i h_i(1, q^2, ..., q^{2(n-1)}) h_{a-i} h_{b-i}^perp.
inline VerificationReport check_cauchy(int n, int ab_bound, int max_size, int jobs = 0) {
    return detail::run_grid("cauchy", detail::grid_of({{"n", n}, {"ab_bound", ab_bound}, {"max_size", max_size}}), n,
                            max_size, jobs, [&](const Partition&) {
                                std::vector<detail::Case> cases;
                                for (int a = 0; a <= ab_bound; ++a)
                                    for (int b = 0; b <= ab_bound; ++b) cases.push_back({"cauchy", {a, b}});
                                return cases;
                            });
}

/// [B_k, B_l] = k (1 + q^{2|k|} + ... + q^{2|k|(n-1)}) delta_{k,-l}.
inline VerificationReport check_heisenberg(int n, int k_bound, int max_size, int jobs = 0) {
    return detail::run_grid("heisenberg", detail::grid_of({{"n", n}, {"k_bound", k_bound}, {"max_size", max_size}}), n,
                            max_size, jobs, [&](const Partition&) {
                                std::vector<detail::Case> cases;
                                for (int k = -k_bound; k <= k_bound; ++k)
                                    for (int l = -k_bound; l <= k_bound; ++l)
                                        if (k != 0 && l != 0) cases.push_back({"heisenberg", {k, l}});
                                return cases;
                            });
}

/// Partial sums of the diagonal operators at every slot, powers j <= j_bound.
inline VerificationReport check_haction(int n, int max_size, int j_bound = 3, int jobs = 0) {
    return detail::run_grid("haction", detail::grid_of({{"n", n}, {"max_size", max_size}, {"j_bound", j_bound}}), n,
                            max_size, jobs, [&](const Partition& lambda) {
                                std::vector<detail::Case> cases;
                                auto slots = ribbon_slots(lambda, n);
                                for (int j = 1; j <= j_bound; ++j) {
                                    for (const auto& s : slots)
                                        cases.push_back({s.kind == SlotKind::add ? "haction_add" : "haction_remove",
                                                         {s.diagonal, j}});
                                    int first = slots.empty() ? 0 : slots.front().diagonal;
                                    cases.push_back({"haction_line", {first, j}});
                                    cases.push_back({"haction_line", {first - n - 1, j}});
                                }
                                return cases;
                            });
}

inline VerificationReport check_h_commute(int n, int k_bound, int max_size, int jobs = 0) {
    return detail::run_grid("hcommute", detail::grid_of({{"n", n}, {"k_bound", k_bound}, {"max_size", max_size}}), n,
                            max_size, jobs, [&](const Partition&) {
                                std::vector<detail::Case> cases;
                                for (int k = 0; k <= k_bound; ++k)
                                    for (int l = k + 1; l <= k_bound; ++l) cases.push_back({"hcommute", {k, l}});
                                return cases;
                            });
}

}  // namespace ribbon
