#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ribbon/operators.hpp"

namespace ribbon {

namespace detail {

/// a / b in Z[q]; throws unless b divides a exactly.
inline QPoly divide_exact(QPoly a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return a;
    int db = b.degree();
    auto lead = b[db];
    std::vector<std::pair<int, QPoly::coeff_type>> quotient;
    while (!a.is_zero() && a.degree() >= db) {
        int da = a.degree();
        auto c = a[da];
        if (c % lead != 0) throw std::domain_error("inexact polynomial division");
        auto t = QPoly::monomial(da - db, c / lead);
        quotient.emplace_back(da - db, c / lead);
        a -= t * b;
    }
    if (!a.is_zero()) throw std::domain_error("inexact polynomial division");
    return QPoly::from_terms(quotient);
}

/// Rank over Q(q) by fraction-free (Bareiss) elimination; rows are consumed.
inline long exact_rank(std::vector<std::vector<QPoly>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    QPoly prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const QPoly p = rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const QPoly a = rows[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                QPoly v = rows[i][j] * p;
                if (!a.is_zero() && !rows[r][j].is_zero()) v -= a * rows[r][j];
                rows[i][j] = divide_exact(std::move(v), prev);
            }
            rows[i][c] = QPoly{};
        }
        prev = p;
        ++r;
    }
    return static_cast<long>(r);
}

/// Rank over F_p after substituting q -> value.
inline long modular_rank(const std::vector<std::vector<QPoly>>& rows, std::uint64_t value, std::uint64_t p) {
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    std::vector<std::vector<std::uint64_t>> m;
    for (const auto& row : rows) {
        m.emplace_back();
        for (const auto& e : row) m.back().push_back(e.eval_mod(value, p));
    }
    auto mul = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    };
    auto inv = [&](std::uint64_t a) {
        std::uint64_t result = 1, e = p - 2;
        while (e) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        auto pi = inv(m[r][c]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            auto f = mul(m[i][c], pi);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + p - mul(f, m[r][j])) % p;
        }
        ++r;
    }
    return static_cast<long>(r);
}

// Action of a monomial on the truncated space: source index -> (target, spin).
using MonomialAction = std::map<int, std::pair<Partition, int>>;

}  // namespace detail

struct DimensionResult {
    int n = 1;
    int k = 1;
    std::string sources;        // "window" or "size<=T"
    long source_count = 0;
    long monomials = 0;         // distinct nonzero monomial actions, identity included
    long rank = 0;              // exact rank over Z[q] (unital span)
    std::vector<long> specialized_ranks;
    bool inconclusive = false;  // size truncation only: rank grew when enlarged by n
    double printed_formula = 0; // ((2k choose k) / (2k + 1))^n
    friend bool operator==(const DimensionResult&, const DimensionResult&) = default;
};

namespace detail {

struct SpanData {
    long monomials = 0;
    std::vector<std::vector<QPoly>> rows;
};

// All nonzero monomials in u_1..u_{kn} as operators on the span of the
// sources, identified by their support map (equal supports mean equal
// operators up to a power of q).
inline SpanData monomial_span(int n, int k, const std::vector<Partition>& sources) {
    MonomialAction identity;
    for (std::size_t s = 0; s < sources.size(); ++s) identity[static_cast<int>(s)] = {sources[s], 0};

    auto support = [](const MonomialAction& a) {
        std::vector<std::pair<int, Partition>> key;
        for (const auto& [s, t] : a) key.emplace_back(s, t.first);
        return key;
    };
    std::set<std::vector<std::pair<int, Partition>>> seen{support(identity)};
    std::vector<MonomialAction> found{identity};
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (int i = 1; i <= k * n; ++i) {
            MonomialAction next;
            for (const auto& [s, t] : found[head])
                if (auto mv = add_ribbon(t.first, i, n)) next[s] = {mv->result, t.second + mv->spin};
            if (next.empty()) continue;
            if (seen.insert(support(next)).second) found.push_back(std::move(next));
        }
    }

    std::map<std::pair<int, Partition>, std::size_t> column;
    for (const auto& a : found)
        for (const auto& [s, t] : a) column.try_emplace({s, t.first}, column.size());
    SpanData data;
    data.monomials = static_cast<long>(found.size());
    for (const auto& a : found) {
        std::vector<QPoly> row(column.size());
        for (const auto& [s, t] : a) row[column.at({s, t.first})] = QPoly::monomial(t.second);
        data.rows.push_back(std::move(row));
    }
    return data;
}

/// One partition for each bead pattern on positions [1-n, kn]. The letters
/// u_1..u_{kn} read and move beads only there (spins count beads strictly
/// between i-n and i), so the Fock space is a direct sum of copies of the
/// span of these partitions and ranks measured on them are exact.
inline std::vector<Partition> window_sources(int n, int k) {
    int lo = 1 - n, hi = k * n, width = hi - lo + 1;
    int pad = width + 1;
    std::vector<Partition> out;
    for (unsigned mask = 0; mask < (1u << width); ++mask) {
        std::vector<int> beads;
        for (int b = 0; b < width; ++b)
            if (mask >> b & 1u) beads.push_back(lo + b);
        int floor = lo - pad;
        int excess = static_cast<int>(beads.size()) - (n - 1);
        for (int x = floor + std::max(excess, 0); x < lo; ++x) beads.push_back(x);
        for (int e = 0; e < -excess; ++e) beads.push_back(hi + 1 + e);
        out.push_back(MayaSequence::from_beads(std::move(beads), floor).to_partition());
    }
    return out;
}

}  // namespace detail

/// Dimension of the algebra generated by u_1, ..., u_{kn}: the rank of the
/// unital span of its monomials. By default the monomials act on one
/// partition per window bead pattern, which is exact. With a truncation they
/// act on all partitions of size at most it, and the result is flagged
/// inconclusive if enlarging the truncation by n still raises the rank. The
/// rank is exact over Z[q]; two specializations mod a prime are reported too.
inline DimensionResult algebra_dimension(int n, int k, std::optional<int> truncation = std::nullopt,
                                         std::uint64_t seed = 42) {
    detail::require_ribbon_size(n);
    if (k < 1) throw std::invalid_argument("generator block count k must be at least 1");
    if (truncation && *truncation < 0) throw std::invalid_argument("truncation must be nonnegative");
    DimensionResult res;
    res.n = n;
    res.k = k;
    auto sources = truncation ? partitions_up_to(*truncation) : detail::window_sources(n, k);
    res.sources = truncation ? "size<=" + std::to_string(*truncation) : "window";
    res.source_count = static_cast<long>(sources.size());
    auto span = detail::monomial_span(n, k, sources);
    res.monomials = span.monomials;

    constexpr std::uint64_t prime = 2305843009213693951ULL;  // 2^61 - 1
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(2, prime - 2);
    for (int t = 0; t < 2; ++t) res.specialized_ranks.push_back(detail::modular_rank(span.rows, pick(rng), prime));

    res.rank = detail::exact_rank(std::move(span.rows));
    for (long r : res.specialized_ranks)
        if (r > res.rank) throw std::logic_error("specialized rank exceeds exact rank");

    if (truncation) {
        auto wider = detail::monomial_span(n, k, partitions_up_to(*truncation + n));
        res.inconclusive = detail::modular_rank(wider.rows, pick(rng), prime) > res.rank;
    }

    double c = 1;
    for (int j = 1; j <= k; ++j) c = c * (k + j) / j;  // (2k choose k)
    res.printed_formula = std::pow(c / (2 * k + 1), n);
    return res;
}

}  // namespace ribbon
