#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/operators.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

/// Filling of a Young diagram by arbitrary integers; rows[x-1][y-1] = T(x,y).
struct FilledTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    FilledTableau() = default;
    FilledTableau(Partition s, std::vector<std::vector<int>> r) : shape(std::move(s)), rows(std::move(r)) {
        if (static_cast<int>(rows.size()) != shape.length())
            throw std::invalid_argument("filling has the wrong number of rows for shape " + shape.to_string());
        for (int x = 1; x <= shape.length(); ++x)
            if (static_cast<int>(rows[static_cast<std::size_t>(x - 1)].size()) != shape[x])
                throw std::invalid_argument("filling row " + std::to_string(x) + " has the wrong length");
    }

    int at(int x, int y) const { return rows[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)]; }
    friend bool operator==(const FilledTableau&, const FilledTableau&) = default;
};

/// Top row right to left, then each lower row right to left.
inline std::vector<int> reading_word(const FilledTableau& t) {
    std::vector<int> w;
    for (const auto& row : t.rows) w.insert(w.end(), row.rbegin(), row.rend());
    return w;
}

/// Rows and columns strictly increasing.
inline bool is_strict_tableau(const FilledTableau& t) {
    const auto& s = t.shape;
    for (int x = 1; x <= s.length(); ++x)
        for (int y = 1; y <= s[x]; ++y) {
            if (y < s[x] && t.at(x, y) >= t.at(x, y + 1)) return false;
            if (s.contains_cell(x + 1, y) && t.at(x, y) >= t.at(x + 1, y)) return false;
        }
    return true;
}

/// n-commuting condition. In the two-by-two clause with T(x,1) < T(x+1,1)
/// and T(x,2) > T(x+1,1) the difference T(x+1,2) - T(x,1) must exceed n;
/// this is the reading that matches the worked (2,2) examples.
inline bool is_n_commuting(const FilledTableau& t, int n) {
    const auto& s = t.shape;
    for (int x = 1; x <= s.length(); ++x)
        for (int y = 1; y < s[x]; ++y)
            if (t.at(x, y) >= t.at(x, y + 1)) return false;
    for (int x = 1; x < s.length(); ++x) {
        for (int y = 2; y <= s[x + 1]; ++y)
            if (t.at(x, y) > t.at(x + 1, y)) return false;
        if (!s.contains_cell(x + 1, 2) && t.at(x, 1) > t.at(x + 1, 1)) return false;
    }
    for (int x = 1; x < s.length(); ++x) {
        if (!s.contains_cell(x + 1, 2)) continue;
        int a = t.at(x, 1), b = t.at(x, 2), c = t.at(x + 1, 1), d = t.at(x + 1, 2);
        if (a > c) {
            if (d - c > n) return false;
        } else if (a < c) {
            if (b > c && d - a <= n) return false;
        } else {
            return false;
        }
    }
    return true;
}

class UnsupportedShape : public std::invalid_argument {
public:
    explicit UnsupportedShape(const Partition& nu)
        : std::invalid_argument("unsupported shape " + nu.to_string() +
                                ": positive formulas exist only for hooks (a,1^b), (s,2) and their conjugates") {}
};

enum class PositiveFamily { hook, s2 };

inline bool is_hook(const Partition& nu) { return !nu.empty() && nu[2] <= 1; }
inline bool is_s2(const Partition& nu) { return nu.length() == 2 && nu[2] == 2; }

inline std::optional<PositiveFamily> positive_family(const Partition& nu) {
    if (is_hook(nu)) return PositiveFamily::hook;
    if (is_s2(nu)) return PositiveFamily::s2;
    return std::nullopt;
}

namespace detail {

// Cells in the order their letters act: the reverse of the reading order.
inline std::vector<std::pair<int, int>> application_order(const Partition& shape) {
    std::vector<std::pair<int, int>> cells;
    for (int x = shape.length(); x >= 1; --x)
        for (int y = 1; y <= shape[x]; ++y) cells.emplace_back(x, y);
    return cells;
}

// Admissibility of a complete filling for the formula of this family.
inline bool admissible(PositiveFamily f, const FilledTableau& t, int n) {
    return f == PositiveFamily::hook ? is_strict_tableau(t) : is_n_commuting(t, n);
}

// Rows strictly increasing, plus columns for hooks, against assigned cells.
inline bool locally_ok(PositiveFamily f, const std::vector<std::vector<std::optional<int>>>& cells, int x, int y, int v) {
    auto get = [&](int r, int c) -> std::optional<int> {
        if (r < 1 || r > static_cast<int>(cells.size())) return std::nullopt;
        const auto& row = cells[static_cast<std::size_t>(r - 1)];
        if (c < 1 || c > static_cast<int>(row.size())) return std::nullopt;
        return row[static_cast<std::size_t>(c - 1)];
    };
    if (auto l = get(x, y - 1); l && *l >= v) return false;
    if (auto r = get(x, y + 1); r && v >= *r) return false;
    if (f == PositiveFamily::hook) {
        if (auto u = get(x - 1, y); u && *u >= v) return false;
        if (auto d = get(x + 1, y); d && v >= *d) return false;
    }
    return true;
}

/// Depth-first search over admissible fillings of `shape`. Letters are
/// sign * entry. With a start partition only letters that add a ribbon are
/// tried, and visit receives the partitions after every letter; otherwise
/// entries range over [lo, hi].
template <class Visit>
void search_fillings(PositiveFamily family, const Partition& shape, int n, int sign, std::optional<Partition> start,
                     int lo, int hi, const std::optional<Partition>& bound, Visit&& visit) {
    auto order = application_order(shape);
    std::vector<std::vector<std::optional<int>>> cells;
    for (int x = 1; x <= shape.length(); ++x) cells.emplace_back(static_cast<std::size_t>(shape[x]));
    std::vector<Partition> path;
    if (start) path.push_back(*start);
    int spin = 0;

    auto finish = [&] {
        std::vector<std::vector<int>> rows;
        for (const auto& row : cells) {
            rows.emplace_back();
            for (const auto& c : row) rows.back().push_back(*c);
        }
        FilledTableau t(shape, std::move(rows));
        if (admissible(family, t, n)) visit(t, path, spin);
    };

    auto rec = [&](auto&& self, std::size_t step) -> void {
        if (step == order.size()) return finish();
        auto [x, y] = order[step];
        auto& cell = cells[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)];
        auto try_value = [&](int v) {
            if (v < lo || v > hi || !locally_ok(family, cells, x, y, v)) return;
            cell = v;
            if (start) {
                auto mv = add_ribbon(path.back(), sign * v, n);
                if (mv && (!bound || bound->contains(mv->result))) {
                    path.push_back(std::move(mv->result));
                    spin += mv->spin;
                    self(self, step + 1);
                    spin -= mv->spin;
                    path.pop_back();
                }
            } else {
                self(self, step + 1);
            }
            cell.reset();
        };
        if (start) {
            for (const auto& slot : ribbon_slots(path.back(), n))
                if (slot.kind == SlotKind::add) try_value(sign * slot.diagonal);
        } else {
            for (int v = lo; v <= hi; ++v) try_value(v);
        }
    };
    rec(rec, 0);
}

constexpr int unbounded_lo = -(1 << 28);
constexpr int unbounded_hi = 1 << 28;

inline std::vector<FilledTableau> fillings(PositiveFamily family, const Partition& shape, int n, int lo, int hi) {
    std::vector<FilledTableau> out;
    if (lo > hi) return out;
    search_fillings(family, shape, n, 1, std::nullopt, lo, hi, std::nullopt,
                    [&](const FilledTableau& t, const std::vector<Partition>&, int) { out.push_back(t); });
    return out;
}

inline std::vector<std::vector<int>> words_of(const std::vector<FilledTableau>& ts, int sign = 1) {
    std::vector<std::vector<int>> out;
    for (const auto& t : ts) {
        auto w = reading_word(t);
        for (int& a : w) a *= sign;
        out.push_back(std::move(w));
    }
    return out;
}

inline Partition hook_shape(int a, int b) {
    if (a < 1 || b < 0) throw std::invalid_argument("hook (a,1^b) needs a >= 1 and b >= 0");
    std::vector<int> parts{a};
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    return Partition(std::move(parts));
}

inline Partition s2_shape(int s) {
    if (s < 2) throw std::invalid_argument("shape (s,2) needs s >= 2");
    return Partition{s, 2};
}

}  // namespace detail

/// Strict fillings of the hook (a,1^b) with entries in [lo, hi].
inline std::vector<FilledTableau> hook_fillings(int a, int b, int lo, int hi) {
    return detail::fillings(PositiveFamily::hook, detail::hook_shape(a, b), 1, lo, hi);
}

/// Reading words of the hook formula for s_{(a,1^b)}(u).
inline std::vector<std::vector<int>> hook_monomials(int a, int b, int lo, int hi) {
    return detail::words_of(hook_fillings(a, b, lo, hi));
}

/// n-commuting fillings of (s,2) with entries in [lo, hi].
inline std::vector<FilledTableau> s2_fillings(int s, int n, int lo, int hi) {
    return detail::fillings(PositiveFamily::s2, detail::s2_shape(s), n, lo, hi);
}

inline std::vector<std::vector<int>> s2_monomials(int s, int n, int lo, int hi) {
    return detail::words_of(s2_fillings(s, n, lo, hi));
}

/// Words for s_nu(u) with nu' a hook or (s,2): the primal words of nu' for
/// the reversed order on Z, i.e. fillings in [-hi, -lo] with letters negated.
inline std::vector<std::vector<int>> dual_monomials(const Partition& nu, int n, int lo, int hi) {
    auto conj = nu.conjugate();
    auto family = positive_family(conj);
    if (!family) throw UnsupportedShape(nu);
    return detail::words_of(detail::fillings(*family, conj, n, -hi, -lo), -1);
}

/// Which formula a positive action used.
enum class PositiveRoute { primal, dual, determinant };

inline const char* route_name(PositiveRoute r) {
    switch (r) {
        case PositiveRoute::primal: return "positive";
        case PositiveRoute::dual: return "positive-dual";
        case PositiveRoute::determinant: return "determinant";
    }
    return "?";
}

struct PositiveAction {
    FockVec result;
    PositiveRoute route = PositiveRoute::determinant;
};

namespace detail {
inline std::optional<std::pair<PositiveFamily, int>> formula_for(const Partition& nu, bool allow_dual,
                                                                  PositiveRoute& route, Partition& filled_shape) {
    if (auto f = positive_family(nu)) {
        route = PositiveRoute::primal;
        filled_shape = nu;
        return std::make_pair(*f, 1);
    }
    if (allow_dual)
        if (auto f = positive_family(nu.conjugate())) {
            route = PositiveRoute::dual;
            filled_shape = nu.conjugate();
            return std::make_pair(*f, -1);
        }
    return std::nullopt;
}
}  // namespace detail

/// s_nu(u) v by the positive monomial formula when nu or nu' is a hook or
/// (s,2); any other nu falls back to the Jacobi-Trudi determinant, and the
/// route is reported.
inline PositiveAction positive_action(const Partition& nu, int n, const FockVec& v, bool allow_dual = true) {
    detail::require_ribbon_size(n);
    PositiveAction out;
    if (nu.empty()) {
        out.result = v;
        out.route = PositiveRoute::primal;
        return out;
    }
    Partition filled;
    auto f = detail::formula_for(nu, allow_dual, out.route, filled);
    if (!f) {
        out.result = apply_symfunc(SymFuncName::s(nu), n, v);
        out.route = PositiveRoute::determinant;
        return out;
    }
    for (const auto& [mu, c] : v)
        detail::search_fillings(f->first, filled, n, f->second, mu, detail::unbounded_lo, detail::unbounded_hi,
                                std::nullopt, [&](const FilledTableau&, const std::vector<Partition>& path, int spin) {
                                    out.result.add(path.back(), c.shifted(spin));
                                });
    return out;
}

/// Splits the application-order letters into maximal strictly increasing
/// runs; returns the run lengths.
inline std::vector<int> increasing_runs(const std::vector<int>& applied) {
    std::vector<int> runs;
    for (std::size_t k = 0; k < applied.size(); ++k) {
        if (k == 0 || applied[k] <= applied[k - 1])
            runs.push_back(1);
        else
            ++runs.back();
    }
    return runs;
}

/// Ribbon tableaux of shape lambda/mu carved out by the positive formula for
/// s_nu(u): each contributing word is grouped into its increasing runs, one
/// horizontal strip per run. The spins sum to c^nu_{lambda/mu}(q).
inline std::vector<RibbonTableau> yamanouchi_tableaux(const Partition& nu, const SkewShape& shape, int n) {
    detail::require_ribbon_size(n);
    auto family = positive_family(nu);
    if (!family) throw UnsupportedShape(nu);
    if (n * nu.size() != shape.size())
        throw std::invalid_argument("n|nu| = " + std::to_string(n * nu.size()) + " differs from |" + shape.to_string() +
                                    "| = " + std::to_string(shape.size()));
    std::vector<int> sorted_nu(nu.vec());
    std::vector<RibbonTableau> out;
    detail::search_fillings(
        *family, nu, n, 1, shape.inner, detail::unbounded_lo, detail::unbounded_hi, shape.outer,
        [&](const FilledTableau& t, const std::vector<Partition>& path, int spin) {
            if (!(path.back() == shape.outer)) return;
            auto word = reading_word(t);
            std::vector<int> applied(word.rbegin(), word.rend());
            auto runs = increasing_runs(applied);
            auto sorted = runs;
            std::sort(sorted.rbegin(), sorted.rend());
            if (sorted != sorted_nu)
                throw std::logic_error("word of " + nu.to_string() + " does not split into runs of lengths nu");
            std::vector<Partition> chain{path.front()};
            std::size_t pos = 0;
            for (int r : runs) {
                pos += static_cast<std::size_t>(r);
                chain.push_back(path[pos]);
            }
            auto tab = tableau_from_chain(std::move(chain), n);
            if (tab.spin != spin) throw std::logic_error("strip spins disagree with the word's spin");
            out.push_back(std::move(tab));
        });
    return out;
}

/// Sum of q^spin over the Yamanouchi tableaux.
inline QPoly yamanouchi_polynomial(const std::vector<RibbonTableau>& ts) {
    QPoly acc;
    for (const auto& t : ts) acc += QPoly::monomial(t.spin);
    return acc;
}

}  // namespace ribbon
