#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "ribbon/detail/parallel.hpp"
#include "ribbon/operators.hpp"
#include "ribbon/symfunc.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

/// q-Littlewood-Richardson coefficients c^nu_{lambda/mu}(q) for all nu of
/// size m = |lambda/mu| / n, zero entries included.
struct QLRTable {
    SkewShape shape;
    int n = 1;
    std::map<Partition, QPoly, CanonicalOrder> entries;

    QPoly operator[](const Partition& nu) const {
        auto it = entries.find(nu);
        return it == entries.end() ? QPoly{} : it->second;
    }
    /// The nonzero entries as a Schur-basis symmetric function.
    SymFunc as_symfunc() const {
        SymFunc f(shape.size() / n, Basis::schur);
        for (const auto& [nu, c] : entries) f.add(nu, c);
        return f;
    }
    friend bool operator==(const QLRTable&, const QLRTable&) = default;
};

/// <s_nu(u) mu, lambda>. A size mismatch gives 0 and appends a warning.
inline QPoly qlr_via_operators(const Partition& nu, const SkewShape& shape, int n,
                               std::vector<std::string>* warnings = nullptr) {
    detail::require_ribbon_size(n);
    if (n * nu.size() != shape.size()) {
        if (warnings)
            warnings->push_back("n|nu| = " + std::to_string(n * nu.size()) + " differs from |" + shape.to_string() +
                                "| = " + std::to_string(shape.size()) + "; the coefficient is identically zero");
        return {};
    }
    return apply_symfunc(SymFuncName::s(nu), n, shape.inner).coefficient_of(shape.outer);
}

/// Operator route for every nu; one application of s_nu(u) per nu.
inline QLRTable qlr_table_via_operators(const SkewShape& shape, int n) {
    detail::check_divisible(shape, n);
    QLRTable t{shape, n, {}};
    for (const auto& nu : partitions_of(shape.size() / n))
        t.entries[nu] = apply_symfunc(SymFuncName::s(nu), n, shape.inner).coefficient_of(shape.outer);
    return t;
}

/// Expansion route: G_{lambda/mu} in the monomial basis, then Kostka inversion.
inline QLRTable qlr_via_expansion(const SkewShape& shape, int n, const KostkaTable& kostka) {
    detail::check_divisible(shape, n);
    auto g = to_schur_basis(ribbon_function(shape, n), kostka);
    QLRTable t{shape, n, {}};
    for (const auto& nu : kostka.partitions()) t.entries[nu] = g[nu];
    return t;
}

inline QLRTable qlr_via_expansion(const SkewShape& shape, int n) {
    detail::check_divisible(shape, n);
    return qlr_via_expansion(shape, n, KostkaTable(shape.size() / n));
}

/// Skew shapes lambda/mu with |lambda| <= max_outer, n dividing the size and
/// at least min_size cells; canonical order on (outer, inner).
inline std::vector<SkewShape> skew_shapes(int max_outer, int n, bool skew = true, int min_size = 1) {
    std::vector<SkewShape> out;
    for (const auto& outer : partitions_up_to(max_outer)) {
        if (!skew) {
            if (outer.size() >= min_size && outer.size() % n == 0) out.emplace_back(outer);
            continue;
        }
        for (const auto& inner : subpartitions(outer)) {
            int size = outer.size() - inner.size();
            if (size >= min_size && size % n == 0) out.emplace_back(outer, inner);
        }
    }
    return out;
}

/// Scan range: outer partitions of size at most max_size, each n in ns,
/// inner shapes included when skew is set.
struct ScanBounds {
    int max_size = 12;
    std::vector<int> ns{2, 3};
    bool skew = true;
    int jobs = 0;
};

struct RouteMismatch {
    SkewShape shape;
    int n = 1;
    Partition nu;
    QPoly via_operators;
    QPoly via_expansion;
};

struct CrossValidation {
    long shapes = 0;
    long entries = 0;
    std::vector<RouteMismatch> mismatches;
};

namespace detail {
inline bool shape_less(const SkewShape& a, const SkewShape& b) {
    CanonicalOrder c;
    if (c(a.outer, b.outer) || c(b.outer, a.outer)) return c(a.outer, b.outer);
    return c(a.inner, b.inner);
}
}  // namespace detail

/// Compares both routes on every shape in range. Work is grouped by inner
/// shape so that s_nu(u) mu is computed once per (mu, nu).
inline CrossValidation cross_validate_routes(const ScanBounds& bounds) {
    struct Task {
        int n;
        Partition mu;
    };
    std::vector<Task> tasks;
    for (int n : bounds.ns) {
        detail::require_ribbon_size(n);
        for (const auto& mu : bounds.skew ? partitions_up_to(bounds.max_size) : std::vector<Partition>{Partition{}})
            if (mu.size() + n <= bounds.max_size) tasks.push_back({n, mu});
    }
    std::vector<KostkaTable> kostka;
    for (int m = 0; m <= bounds.max_size; ++m) kostka.emplace_back(m);

    CrossValidation result;
    std::mutex merge;
    detail::parallel_for(tasks.size(), bounds.jobs, [&](std::size_t t) {
        const auto& [n, mu] = tasks[t];
        CrossValidation local;
        for (int m = 1; mu.size() + n * m <= bounds.max_size; ++m) {
            std::map<Partition, FockVec, CanonicalOrder> actions;
            for (const auto& nu : partitions_of(m)) actions[nu] = apply_symfunc(SymFuncName::s(nu), n, mu);
            for (const auto& lambda : partitions_of(mu.size() + n * m)) {
                if (!lambda.contains(mu)) continue;
                SkewShape shape(lambda, mu);
                auto table = qlr_via_expansion(shape, n, kostka[static_cast<std::size_t>(m)]);
                ++local.shapes;
                for (const auto& [nu, action] : actions) {
                    ++local.entries;
                    auto lhs = action.coefficient_of(lambda);
                    auto rhs = table[nu];
                    if (lhs != rhs) local.mismatches.push_back({shape, n, nu, lhs, rhs});
                }
            }
        }
        std::lock_guard lock(merge);
        result.shapes += local.shapes;
        result.entries += local.entries;
        result.mismatches.insert(result.mismatches.end(), local.mismatches.begin(), local.mismatches.end());
    });
    std::sort(result.mismatches.begin(), result.mismatches.end(), [](const RouteMismatch& a, const RouteMismatch& b) {
        if (a.n != b.n) return a.n < b.n;
        if (!(a.shape == b.shape)) return detail::shape_less(a.shape, b.shape);
        return CanonicalOrder{}(a.nu, b.nu);
    });
    return result;
}

struct NonnegViolation {
    SkewShape shape;
    int n = 1;
    Partition nu;
    QPoly coeff;
};

struct NonnegReport {
    ScanBounds bounds;
    long shapes = 0;
    long entries = 0;
    std::vector<NonnegViolation> violations;
    bool clean() const noexcept { return violations.empty(); }
};

/// Looks for a q-LR coefficient with a negative coefficient among all shapes
/// in range. An empty violation list is evidence, not proof.
inline NonnegReport nonnegativity_scan(const ScanBounds& bounds) {
    NonnegReport report{bounds, 0, 0, {}};
    std::vector<std::pair<int, SkewShape>> shapes;
    for (int n : bounds.ns) {
        detail::require_ribbon_size(n);
        for (auto& s : skew_shapes(bounds.max_size, n, bounds.skew)) shapes.emplace_back(n, std::move(s));
    }
    std::vector<KostkaTable> kostka;
    for (int m = 0; m <= bounds.max_size; ++m) kostka.emplace_back(m);
    std::vector<std::vector<NonnegViolation>> found(shapes.size());
    std::vector<long> entries(shapes.size());
    detail::parallel_for(shapes.size(), bounds.jobs, [&](std::size_t k) {
        const auto& [n, shape] = shapes[k];
        auto table = qlr_via_expansion(shape, n, kostka[static_cast<std::size_t>(shape.size() / n)]);
        entries[k] = static_cast<long>(table.entries.size());
        for (const auto& [nu, c] : table.entries)
            if (!c.is_nonnegative()) found[k].push_back({shape, n, nu, c});
    });
    report.shapes = static_cast<long>(shapes.size());
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        report.entries += entries[k];
        report.violations.insert(report.violations.end(), found[k].begin(), found[k].end());
    }
    return report;
}

}  // namespace ribbon
