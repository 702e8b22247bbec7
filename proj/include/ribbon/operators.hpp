#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/fock.hpp"
#include "ribbon/partition_core.hpp"

namespace ribbon {

// ---------------------------------------------------------------------------
// Ribbon Schur operators u_i and their adjoints d_i

inline FockVec apply_u(int i, int n, const FockVec& v) {
    FockVec out;
    for (const auto& [lambda, c] : v)
        if (auto mv = add_ribbon(lambda, i, n)) out.add(mv->result, c.shifted(mv->spin));
    return out;
}

inline FockVec apply_d(int i, int n, const FockVec& v) {
    FockVec out;
    for (const auto& [lambda, c] : v)
        if (auto mv = remove_ribbon(lambda, i, n)) out.add(mv->result, c.shifted(mv->spin));
    return out;
}

/// Monomial u_{w_1} u_{w_2} ... u_{w_k}; the last letter acts first.
struct Word {
    std::vector<int> letters;
    int n = 1;
    friend bool operator==(const Word&, const Word&) = default;
};

/// Result of a monomial on a basis vector: zero or q^spin * result.
inline std::optional<RibbonMove> apply_word(const Word& w, const Partition& mu) {
    RibbonMove acc{mu, 0};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto mv = add_ribbon(acc.result, *it, w.n);
        if (!mv) return std::nullopt;
        acc.result = std::move(mv->result);
        acc.spin += mv->spin;
    }
    return acc;
}

inline FockVec apply_word(const Word& w, const FockVec& v) {
    FockVec out;
    for (const auto& [mu, c] : v)
        if (auto r = apply_word(w, mu)) out.add(r->result, c.shifted(r->spin));
    return out;
}

// ---------------------------------------------------------------------------
// Horizontal ribbon strips: h_k(u) and h_k^perp(u)

namespace detail {

// Adds ribbons on strictly increasing diagonals above `last`.
inline void add_increasing(const Partition& lambda, int n, int remaining, int last, int spin, const QPoly& c,
                           FockVec& out) {
    if (remaining == 0) {
        out.add(lambda, c.shifted(spin));
        return;
    }
    for (const auto& slot : ribbon_slots(lambda, n)) {
        if (slot.kind != SlotKind::add || slot.diagonal <= last) continue;
        auto mv = add_ribbon(lambda, slot.diagonal, n);
        add_increasing(mv->result, n, remaining - 1, slot.diagonal, spin + mv->spin, c, out);
    }
}

// Removes ribbons on strictly decreasing diagonals below `last`.
inline void remove_decreasing(const Partition& lambda, int n, int remaining, int last, int spin, const QPoly& c,
                              FockVec& out) {
    if (remaining == 0) {
        out.add(lambda, c.shifted(spin));
        return;
    }
    for (const auto& slot : ribbon_slots(lambda, n)) {
        if (slot.kind != SlotKind::remove || slot.diagonal >= last) continue;
        auto mv = remove_ribbon(lambda, slot.diagonal, n);
        remove_decreasing(mv->result, n, remaining - 1, slot.diagonal, spin + mv->spin, c, out);
    }
}

}  // namespace detail

/// h_k(u): sum over i_1 < ... < i_k of u_{i_k} ... u_{i_1}.
inline FockVec apply_h(int k, int n, const FockVec& v) {
    if (k < 0) return {};
    if (k == 0) return v;
    FockVec out;
    for (const auto& [lambda, c] : v)
        detail::add_increasing(lambda, n, k, std::numeric_limits<int>::min(), 0, c, out);
    return out;
}

/// h_k^perp(u): sum over i_1 < ... < i_k of d_{i_1} ... d_{i_k}.
inline FockVec apply_h_perp(int k, int n, const FockVec& v) {
    if (k < 0) return {};
    if (k == 0) return v;
    FockVec out;
    for (const auto& [lambda, c] : v)
        detail::remove_decreasing(lambda, n, k, std::numeric_limits<int>::max(), 0, c, out);
    return out;
}

// ---------------------------------------------------------------------------
// Symmetric functions in the commuting h_k(u)

/// Integer combination of products h_{a_1} h_{a_2} ...; keys are sorted
/// decreasing with zero indices dropped.
using HExpansion = std::map<std::vector<int>, std::int64_t>;

namespace detail {
inline void add_term(HExpansion& e, std::vector<int> key, std::int64_t c) {
    if (c == 0) return;
    key.erase(std::remove(key.begin(), key.end(), 0), key.end());
    std::sort(key.begin(), key.end(), std::greater<>());
    auto& slot = e[key];
    slot += c;
    if (slot == 0) e.erase(key);
}
}  // namespace detail

inline HExpansion h_product(std::vector<int> parts) {
    HExpansion e;
    if (std::any_of(parts.begin(), parts.end(), [](int a) { return a < 0; })) return e;
    detail::add_term(e, std::move(parts), 1);
    return e;
}

inline HExpansion operator*(const HExpansion& a, const HExpansion& b) {
    HExpansion r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            detail::add_term(r, std::move(key), ca * cb);
        }
    return r;
}

inline HExpansion& operator+=(HExpansion& a, const HExpansion& b) {
    for (const auto& [k, c] : b) detail::add_term(a, k, c);
    return a;
}

inline HExpansion scaled(const HExpansion& a, std::int64_t s) {
    HExpansion r;
    for (const auto& [k, c] : a) detail::add_term(r, k, c * s);
    return r;
}

/// Jacobi-Trudi: s_{lambda/mu} = det(h_{lambda_i - mu_j - i + j}), expanded
/// over permutations.
inline HExpansion schur_in_h(const Partition& lambda, const Partition& mu = {}) {
    if (!lambda.contains(mu)) return {};
    int l = lambda.length();
    std::vector<int> perm(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) perm[static_cast<std::size_t>(k)] = k;
    HExpansion e;
    do {
        int inversions = 0;
        for (int a = 0; a < l; ++a)
            for (int b = a + 1; b < l; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        std::vector<int> key;
        bool vanishes = false;
        for (int row = 1; row <= l && !vanishes; ++row) {
            int col = perm[static_cast<std::size_t>(row - 1)] + 1;
            int idx = lambda[row] - mu[col] - row + col;
            if (idx < 0) vanishes = true;
            key.push_back(idx);
        }
        if (!vanishes) detail::add_term(e, std::move(key), inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return e;
}

/// e_k = sum_{i=1}^{k} (-1)^{i-1} h_i e_{k-i}
inline HExpansion elementary_in_h(int k) {
    std::vector<HExpansion> e(static_cast<std::size_t>(std::max(k, 0) + 1));
    e[0] = h_product({});
    for (int m = 1; m <= k; ++m)
        for (int i = 1; i <= m; ++i)
            e[static_cast<std::size_t>(m)] += scaled(h_product({i}) * e[static_cast<std::size_t>(m - i)], i % 2 ? 1 : -1);
    return k < 0 ? HExpansion{} : e[static_cast<std::size_t>(k)];
}

/// Newton: p_k = k h_k - sum_{i=1}^{k-1} h_{k-i} p_i
inline HExpansion power_sum_in_h(int k) {
    if (k < 1) throw std::invalid_argument("power sum p_k needs k >= 1");
    std::vector<HExpansion> p(static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) {
        HExpansion cur = scaled(h_product({m}), m);
        for (int i = 1; i < m; ++i) cur += scaled(h_product({m - i}) * p[static_cast<std::size_t>(i)], -1);
        p[static_cast<std::size_t>(m)] = cur;
    }
    return p[static_cast<std::size_t>(k)];
}

/// Applies an h-expansion with h_a -> h_a(u) (or h_a^perp(u) when perp).
/// Shared factor prefixes are evaluated once.
inline FockVec apply_h_expansion(const HExpansion& expansion, int n, const FockVec& v, bool perp = false) {
    FockVec out;
    // Keys are visited in sorted order, so each key shares a prefix with the
    // previous one; keep the stack of partial products along that prefix.
    std::vector<int> stack_keys;
    std::vector<FockVec> stack_vals{v};
    for (const auto& [key, c] : expansion) {
        std::size_t common = 0;
        while (common < stack_keys.size() && common < key.size() && stack_keys[common] == key[common]) ++common;
        stack_keys.resize(common);
        stack_vals.resize(common + 1);
        for (std::size_t t = common; t < key.size(); ++t) {
            const FockVec& prev = stack_vals.back();
            stack_vals.push_back(perp ? apply_h_perp(key[t], n, prev) : apply_h(key[t], n, prev));
            stack_keys.push_back(key[t]);
        }
        FockVec term = stack_vals.back();
        term *= QPoly(c);
        out += term;
    }
    return out;
}

/// A symmetric function named by basis and (skew) shape; products are taken
/// over the parts, e.g. h[2,1] = h_2 h_1 and e[3] = e_3.
struct SymFuncName {
    enum class Kind { h, e, p, s };
    Kind kind = Kind::h;
    Partition shape;
    Partition inner;  // only for skew Schur

    static SymFuncName h(Partition p) { return {Kind::h, std::move(p), {}}; }
    static SymFuncName e(Partition p) { return {Kind::e, std::move(p), {}}; }
    static SymFuncName p(Partition p) { return {Kind::p, std::move(p), {}}; }
    static SymFuncName s(Partition p, Partition inner = {}) {
        if (!p.contains(inner))
            throw std::invalid_argument("s[" + p.to_string() + "/" + inner.to_string() + "] is not a skew shape");
        return {Kind::s, std::move(p), std::move(inner)};
    }

    HExpansion in_h() const {
        switch (kind) {
            case Kind::s:
                return schur_in_h(shape, inner);
            case Kind::h:
                return h_product(shape.vec());
            case Kind::e: {
                HExpansion r = h_product({});
                for (int a : shape.parts()) r = r * elementary_in_h(a);
                return r;
            }
            case Kind::p: {
                HExpansion r = h_product({});
                for (int a : shape.parts()) r = r * power_sum_in_h(a);
                return r;
            }
        }
        return {};
    }
};

inline FockVec apply_symfunc(const SymFuncName& f, int n, const FockVec& v) {
    return apply_h_expansion(f.in_h(), n, v);
}

/// Adjoint action f^perp(u).
inline FockVec apply_symfunc_perp(const SymFuncName& f, int n, const FockVec& v) {
    return apply_h_expansion(f.in_h(), n, v, true);
}

/// Heisenberg generators: B_{-k} = p_k(u), B_k = p_k^perp(u) for k > 0.
inline FockVec apply_B(int k, int n, const FockVec& v) {
    if (k == 0) throw std::invalid_argument("B_0 is not defined");
    return apply_h_expansion(power_sum_in_h(std::abs(k)), n, v, k > 0);
}

/// |k| (1 + q^{2|k|} + ... + q^{2|k|(n-1)}), the scalar of [B_{|k|}, B_{-|k|}].
inline QPoly heisenberg_scalar(int k, int n) {
    return QPoly::geometric(2 * std::abs(k), n) * QPoly(std::abs(k));
}

// ---------------------------------------------------------------------------
// Diagonal operators (u_i d_i)^j - (d_i u_i)^j

struct DiagonalOp {
    int i = 0;
    int j = 1;
};

/// Eigenvalue of the diagonal operator on lambda.
inline QPoly diag_eigenvalue(const DiagonalOp& h, int n, const Partition& lambda) {
    if (h.j < 1) throw std::invalid_argument("diagonal operator power j must be at least 1");
    if (auto mv = add_ribbon(lambda, h.i, n)) return -QPoly::monomial(2 * h.j * mv->spin);
    if (auto mv = remove_ribbon(lambda, h.i, n)) return QPoly::monomial(2 * h.j * mv->spin);
    return {};
}

inline FockVec apply_diag(const DiagonalOp& h, int n, const FockVec& v) {
    FockVec out;
    for (const auto& [lambda, c] : v) out.add(lambda, c * diag_eigenvalue(h, n, lambda));
    return out;
}

/// Eigenvalue of sum_{k >= from} of the diagonal operators at power j.
inline QPoly diag_tail_eigenvalue(int from, int j, int n, const Partition& lambda) {
    QPoly acc;
    auto [lo, hi] = slot_window(lambda, n);
    for (int k = std::max(from, lo); k <= hi; ++k) acc += diag_eigenvalue({k, j}, n, lambda);
    return acc;
}

// ---------------------------------------------------------------------------
// Operator expressions: "u[2] u[1] u[3] u[0]", "B[1] B[-1] - B[-1] B[1]",
// "2 h[2] hperp[1]", "s[2,2]", "s[3,2/1]", "hd[0,1]".

struct Generator {
    enum class Kind { u, d, h, hperp, e, p, B, s, diag };
    Kind kind = Kind::u;
    int index = 0;      // u, d, h, hperp, e, p, B; diagonal for diag
    int power = 1;      // diag only
    Partition shape;    // s only
    Partition inner;    // s only

    std::string to_string() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::u: os << "u[" << index << ']'; break;
            case Kind::d: os << "d[" << index << ']'; break;
            case Kind::h: os << "h[" << index << ']'; break;
            case Kind::hperp: os << "hperp[" << index << ']'; break;
            case Kind::e: os << "e[" << index << ']'; break;
            case Kind::p: os << "p[" << index << ']'; break;
            case Kind::B: os << "B[" << index << ']'; break;
            case Kind::diag: os << "hd[" << index << ',' << power << ']'; break;
            case Kind::s:
                os << "s[" << (shape.empty() ? "" : shape.to_string());
                if (!inner.empty()) os << '/' << inner.to_string();
                os << ']';
                break;
        }
        return os.str();
    }
};

inline FockVec apply_generator(const Generator& g, int n, const FockVec& v) {
    using K = Generator::Kind;
    switch (g.kind) {
        case K::u: return apply_u(g.index, n, v);
        case K::d: return apply_d(g.index, n, v);
        case K::h: return apply_h(g.index, n, v);
        case K::hperp: return apply_h_perp(g.index, n, v);
        case K::e: return apply_h_expansion(elementary_in_h(g.index), n, v);
        case K::p: return apply_h_expansion(power_sum_in_h(g.index), n, v);
        case K::B: return apply_B(g.index, n, v);
        case K::s: return apply_symfunc(SymFuncName::s(g.shape, g.inner), n, v);
        case K::diag: return apply_diag({g.index, g.power}, n, v);
    }
    return {};
}

/// Integer combination of compositions of generators; factors act right to left.
struct OperatorExpr {
    struct Term {
        std::int64_t coeff = 1;
        std::vector<Generator> factors;
    };
    std::vector<Term> terms;

    FockVec apply(int n, const FockVec& v) const {
        FockVec out;
        for (const auto& t : terms) {
            FockVec cur = v;
            for (auto it = t.factors.rbegin(); it != t.factors.rend() && !cur.is_zero(); ++it)
                cur = apply_generator(*it, n, cur);
            cur *= QPoly(t.coeff);
            out += cur;
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const auto& t = terms[k];
            std::int64_t c = t.coeff;
            if (k > 0) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << '-';
            std::int64_t mag = c < 0 ? -c : c;
            if (mag != 1 || t.factors.empty()) os << mag << (t.factors.empty() ? "" : " ");
            for (std::size_t f = 0; f < t.factors.size(); ++f) os << (f ? " " : "") << t.factors[f].to_string();
        }
        return os.str();
    }

    static OperatorExpr parse(std::string_view text);
};

inline OperatorExpr OperatorExpr::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("operator expression \"" + std::string(text) + "\": " + why);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (digits == pos) fail("expected an integer at offset " + std::to_string(start));
        return std::stoll(std::string(text.substr(start, pos - start)));
    };

    OperatorExpr expr;
    skip_ws();
    if (pos == text.size()) fail("empty expression");
    bool first_term = true;
    while (pos < text.size()) {
        Term term;
        skip_ws();
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') term.coeff = -1;
            ++pos;
            skip_ws();
        } else if (!first_term) {
            fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first_term = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            term.coeff *= read_int();
            skip_ws();
        }
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string name(text.substr(start, pos - start));
            if (pos >= text.size() || text[pos] != '[') fail("expected '[' after " + name);
            std::size_t close = text.find(']', pos);
            if (close == std::string_view::npos) fail("missing ']'");
            std::string arg(text.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            Generator g;
            using K = Generator::Kind;
            auto int_arg = [&]() {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(arg, &used);
                } catch (const std::exception&) {
                    fail("bad index \"" + arg + "\" for " + name);
                }
                if (used != arg.size()) fail("bad index \"" + arg + "\" for " + name);
                return v;
            };
            if (name == "u") g.kind = K::u, g.index = int_arg();
            else if (name == "d") g.kind = K::d, g.index = int_arg();
            else if (name == "h") g.kind = K::h, g.index = int_arg();
            else if (name == "hperp") g.kind = K::hperp, g.index = int_arg();
            else if (name == "e") g.kind = K::e, g.index = int_arg();
            else if (name == "p") g.kind = K::p, g.index = int_arg();
            else if (name == "B") g.kind = K::B, g.index = int_arg();
            else if (name == "hd") {
                auto comma = arg.find(',');
                if (comma == std::string::npos) fail("hd[i,j] needs two indices");
                g.kind = K::diag;
                g.index = std::stoi(arg.substr(0, comma));
                g.power = std::stoi(arg.substr(comma + 1));
                if (g.power < 1) fail("hd[i,j] needs j >= 1");
            } else if (name == "s") {
                g.kind = K::s;
                auto slash = arg.find('/');
                g.shape = Partition::parse(arg.substr(0, slash));
                if (slash != std::string::npos) g.inner = Partition::parse(arg.substr(slash + 1));
                if (!g.shape.contains(g.inner)) fail("s[" + arg + "] is not a skew shape");
            } else {
                fail("unknown generator \"" + name + "\"");
            }
            if ((g.kind == K::p) && g.index < 1) fail("p[k] needs k >= 1");
            if (g.kind == K::B && g.index == 0) fail("B[0] is not defined");
            term.factors.push_back(std::move(g));
            skip_ws();
        }
        if (term.factors.empty() && !(pos >= text.size() || text[pos] == '+' || text[pos] == '-'))
            fail("unexpected character at offset " + std::to_string(pos));
        expr.terms.push_back(std::move(term));
        skip_ws();
    }
    return expr;
}

/// Principal specialization h_k(1, q^2, ..., q^{2(n-1)}).
inline QPoly h_principal(int k, int n) {
    if (k < 0) return {};
    // row[t] = h_t of the variables processed so far
    std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = QPoly(1);
    for (int var = 0; var < n; ++var) {
        std::vector<QPoly> next(static_cast<std::size_t>(k) + 1);
        for (int total = 0; total <= k; ++total)
            for (int t = 0; t <= total; ++t)
                next[static_cast<std::size_t>(total)] += row[static_cast<std::size_t>(total - t)].shifted(2 * var * t);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace ribbon
