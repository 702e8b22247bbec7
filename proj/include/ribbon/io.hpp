#pragma once

// JSON forms of the library values (nlohmann::json). Every to_json has a
// matching from_json so outputs re-parse into equal values.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ribbon/dimension.hpp"
#include "ribbon/fock.hpp"
#include "ribbon/partition_core.hpp"
#include "ribbon/qlr.hpp"
#include "ribbon/symfunc.hpp"
#include "ribbon/tableaux.hpp"
#include "ribbon/verify.hpp"

namespace ribbon {

using json = nlohmann::json;

inline void to_json(json& j, const Partition& p) { j = json{{"parts", p.vec()}}; }
inline void from_json(const json& j, Partition& p) { p = Partition(j.at("parts").get<std::vector<int>>()); }

inline void to_json(json& j, const QPoly& p) {
    json coeffs = json::array();
    for (auto [e, c] : p.terms()) coeffs.push_back({e, c});
    j = json{{"coeffs", coeffs}};
}
inline void from_json(const json& j, QPoly& p) {
    p = QPoly{};
    for (const auto& t : j.at("coeffs")) p += QPoly::monomial(t.at(0).get<int>(), t.at(1).get<QPoly::coeff_type>());
}

inline void to_json(json& j, const SkewShape& s) { j = json{{"outer", s.outer.vec()}, {"inner", s.inner.vec()}}; }
inline void from_json(const json& j, SkewShape& s) {
    s = SkewShape(Partition(j.at("outer").get<std::vector<int>>()), Partition(j.at("inner").get<std::vector<int>>()));
}

namespace detail {
template <class Map>
json coefficient_terms(const Map& m) {
    json terms = json::array();
    for (const auto& [p, c] : m) {
        json t = c;
        t["parts"] = p.vec();
        terms.push_back(std::move(t));
    }
    return terms;
}
}  // namespace detail

inline void to_json(json& j, const FockVec& v) { j = json{{"terms", detail::coefficient_terms(v.terms())}}; }
inline void from_json(const json& j, FockVec& v) {
    v = FockVec{};
    for (const auto& t : j.at("terms")) v.add(Partition(t.at("parts").get<std::vector<int>>()), t.get<QPoly>());
}

inline void to_json(json& j, const SymFunc& f) {
    j = json{{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", detail::coefficient_terms(f.coeffs())}};
}
inline void from_json(const json& j, SymFunc& f) {
    auto basis = j.at("basis").get<std::string>();
    if (basis != "schur" && basis != "monomial") throw std::invalid_argument("unknown basis \"" + basis + "\"");
    f = SymFunc(j.at("degree").get<int>(), basis == "schur" ? Basis::schur : Basis::monomial);
    for (const auto& t : j.at("terms")) f.add(Partition(t.at("parts").get<std::vector<int>>()), t.get<QPoly>());
}

inline void to_json(json& j, const Tile& t) { j = json{{"head_diagonal", t.head_diagonal}, {"ribbon_index", t.ribbon_index}}; }
inline void from_json(const json& j, Tile& t) {
    t.head_diagonal = j.at("head_diagonal").get<int>();
    t.ribbon_index = j.at("ribbon_index").get<int>();
}

inline void to_json(json& j, const RibbonTableau& t) {
    json chain = json::array();
    for (const auto& p : t.chain) chain.push_back(p.vec());
    j = json{{"chain", chain}, {"weight", t.weight}, {"spin", t.spin}, {"tiles", t.tiles}};
}
inline void from_json(const json& j, RibbonTableau& t) {
    t.chain.clear();
    for (const auto& p : j.at("chain")) t.chain.emplace_back(p.get<std::vector<int>>());
    t.weight = j.at("weight").get<std::vector<int>>();
    t.spin = j.at("spin").get<int>();
    t.tiles = j.at("tiles").get<std::vector<Tile>>();
}

inline void to_json(json& j, const HorizontalStrip& s) {
    j = json{{"outer", s.outer.vec()}, {"spin", s.spin}, {"heads", s.heads}};
}
inline void from_json(const json& j, HorizontalStrip& s) {
    s.outer = Partition(j.at("outer").get<std::vector<int>>());
    s.spin = j.at("spin").get<int>();
    s.heads = j.at("heads").get<std::vector<int>>();
}

inline void to_json(json& j, const CoreQuotient& cq) {
    json quotient = json::array();
    for (const auto& p : cq.quotient) quotient.push_back(p.vec());
    j = json{{"core", cq.core.vec()}, {"quotient", quotient}, {"offsets", cq.offsets}};
}
inline void from_json(const json& j, CoreQuotient& cq) {
    cq.core = Partition(j.at("core").get<std::vector<int>>());
    cq.quotient.clear();
    for (const auto& p : j.at("quotient")) cq.quotient.emplace_back(p.get<std::vector<int>>());
    cq.offsets = j.at("offsets").get<std::vector<int>>();
}

inline void to_json(json& j, const QLRTable& t) {
    json entries = json::array();
    for (const auto& [nu, c] : t.entries) {
        json e = c;
        e["nu"] = nu.vec();
        entries.push_back(std::move(e));
    }
    j = json{{"shape", t.shape}, {"n", t.n}, {"entries", entries}};
}
inline void from_json(const json& j, QLRTable& t) {
    t.shape = j.at("shape").get<SkewShape>();
    t.n = j.at("n").get<int>();
    t.entries.clear();
    for (const auto& e : j.at("entries")) t.entries[Partition(e.at("nu").get<std::vector<int>>())] = e.get<QPoly>();
}

inline void to_json(json& j, const Witness& w) {
    j = json{{"relation", w.relation}, {"n", w.n},     {"lambda", w.lambda.vec()},
             {"indices", w.indices},   {"lhs", w.lhs}, {"rhs", w.rhs}};
}
inline void from_json(const json& j, Witness& w) {
    w.relation = j.at("relation").get<std::string>();
    w.n = j.at("n").get<int>();
    w.lambda = Partition(j.at("lambda").get<std::vector<int>>());
    w.indices = j.at("indices").get<std::vector<int>>();
    w.lhs = j.at("lhs").get<FockVec>();
    w.rhs = j.at("rhs").get<FockVec>();
}

inline void to_json(json& j, const VerificationReport& r) {
    j = json{{"identity", r.identity}, {"grid", r.grid},
             {"cases", r.cases},       {"failures", r.failures},
             {"ok", r.ok()},           {"elapsed_seconds", r.elapsed_seconds}};
}
inline void from_json(const json& j, VerificationReport& r) {
    r.identity = j.at("identity").get<std::string>();
    r.grid = j.at("grid").get<std::map<std::string, std::string>>();
    r.cases = j.at("cases").get<long>();
    r.failures = j.at("failures").get<std::vector<Witness>>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
}

inline void to_json(json& j, const DimensionResult& d) {
    j = json{{"n", d.n},
             {"k", d.k},
             {"sources", d.sources},
             {"source_count", d.source_count},
             {"monomials", d.monomials},
             {"rank", d.rank},
             {"unital", true},
             {"specialized_ranks", d.specialized_ranks},
             {"inconclusive", d.inconclusive},
             {"printed_formula", d.printed_formula}};
}
inline void from_json(const json& j, DimensionResult& d) {
    d.n = j.at("n").get<int>();
    d.k = j.at("k").get<int>();
    d.sources = j.at("sources").get<std::string>();
    d.source_count = j.at("source_count").get<long>();
    d.monomials = j.at("monomials").get<long>();
    d.rank = j.at("rank").get<long>();
    d.specialized_ranks = j.at("specialized_ranks").get<std::vector<long>>();
    d.inconclusive = j.at("inconclusive").get<bool>();
    d.printed_formula = j.at("printed_formula").get<double>();
}

inline void to_json(json& j, const NonnegViolation& v) {
    j = json{{"shape", v.shape}, {"n", v.n}, {"nu", v.nu.vec()}, {"coeff", v.coeff}};
}
inline void to_json(json& j, const NonnegReport& r) {
    j = json{{"max_size", r.bounds.max_size}, {"ns", r.bounds.ns},   {"skew", r.bounds.skew},
             {"shapes", r.shapes},            {"entries", r.entries}, {"violations", r.violations}};
}

// ---------------------------------------------------------------------------
// LaTeX

/// "211" for single-digit parts, "10,2" otherwise.
inline std::string latex_subscript(const Partition& p) {
    if (p.empty()) return "\\emptyset";
    bool small = p.first_part() < 10;
    std::ostringstream os;
    for (std::size_t k = 0; k < p.vec().size(); ++k) os << (k && !small ? "," : "") << p.vec()[k];
    return os.str();
}

/// Schur expansion grouped by powers of q, e.g.
/// "q^{2} s_{211} + q^{4}(s_{31}+s_{22}) + q^{6} s_{31} + q^{8} s_{4}".
inline std::string to_latex(const SymFunc& f) {
    const char* sym = f.basis() == Basis::schur ? "s" : "m";
    std::map<int, std::vector<std::pair<Partition, QPoly::coeff_type>>> by_power;
    for (const auto& [nu, c] : f.coeffs())
        for (auto [e, a] : c.terms()) by_power[e].emplace_back(nu, a);
    if (by_power.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, group] : by_power) {
        std::ostringstream inner;
        for (std::size_t k = 0; k < group.size(); ++k) {
            auto [nu, a] = group[k];
            if (a < 0)
                inner << "-";
            else if (k)
                inner << "+";
            if (a != 1 && a != -1) inner << (a < 0 ? -a : a);
            inner << sym << "_{" << latex_subscript(nu) << "}";
        }
        std::string body = inner.str();
        bool lone = group.size() == 1;
        if (!first) os << (body.front() == '-' && lone ? " - " : " + ");
        if (!first && body.front() == '-' && lone) body.erase(0, 1);
        first = false;
        if (e == 0) {
            os << (lone ? body : "(" + body + ")");
        } else {
            os << "q^{" << e << "}" << (lone ? " " + body : "(" + body + ")");
        }
    }
    return os.str();
}

}  // namespace ribbon
