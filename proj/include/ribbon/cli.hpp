#pragma once

#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ribbon/io.hpp"
#include "ribbon/positive.hpp"

namespace ribbon::cli {

// Exit codes
constexpr int ok = 0;
constexpr int verification_failed = 1;
constexpr int usage_error = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "2,1,3,1" -> {2,1,3,1}; entries must be nonnegative integers.
inline std::vector<int> parse_composition(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789 ") != std::string::npos)
            throw UsageError("malformed composition \"" + text + "\"");
        out.push_back(std::stoi(tok));
    }
    return out;
}

/// "lo:hi" with lo <= hi.
inline std::pair<int, int> parse_window(const std::string& text) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        int lo = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
        int hi = std::stoi(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1) throw std::invalid_argument("");
        if (lo > hi) throw UsageError("window " + text + " is empty (lo > hi)");
        return {lo, hi};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("malformed window \"" + text + "\", expected lo:hi");
    }
}

inline Partition partition_flag(const std::string& text, const char* flag) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--") + flag + ": " + e.what());
    }
}

struct Options {
    int n = 1;
    std::string outer, inner, nu, weight, window, expr, identity = "relations", basis = "schur", route = "both";
    std::string format;
    int max_size = 10;
    int k = 1;
    std::optional<int> bound;
    std::optional<int> truncation;
    std::uint64_t seed = 42;
    int jobs = 0;
};

namespace detail {

inline void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline SkewShape shape_of(const Options& o) {
    auto outer = partition_flag(o.outer, "outer");
    auto inner = partition_flag(o.inner, "inner");
    if (!outer.contains(inner))
        throw UsageError("--inner " + inner.to_string() + " is not contained in --outer " + outer.to_string());
    return SkewShape(outer, inner);
}

inline void require_divisible(const SkewShape& s, int n) {
    if (n < 1) throw UsageError("--n must be at least 1");
    if (s.size() % n != 0)
        throw UsageError("shape " + s.to_string() + " has size " + std::to_string(s.size()) +
                         ", not divisible by n = " + std::to_string(n));
}

inline int cmd_qlr(const Options& o, std::ostream& out, std::ostream& err) {
    auto shape = shape_of(o);
    require_divisible(shape, o.n);
    if (!o.nu.empty()) {
        auto nu = partition_flag(o.nu, "nu");
        if (o.n * nu.size() != shape.size())
            throw UsageError("n|nu| = " + std::to_string(o.n * nu.size()) + " but |" + shape.to_string() +
                             "| = " + std::to_string(shape.size()));
        auto via_ops = qlr_via_operators(nu, shape, o.n);
        auto via_exp = qlr_via_expansion(shape, o.n)[nu];
        if (via_ops != via_exp) {
            err << "route mismatch: operators give " << via_ops << ", expansion gives " << via_exp << '\n';
            return verification_failed;
        }
        if (o.format == "json")
            emit_json(out, {{"shape", shape}, {"n", o.n}, {"nu", nu.vec()}, {"coeff", via_ops}});
        else
            out << (o.format == "latex" ? via_ops.to_latex() : via_ops.to_string()) << '\n';
        return ok;
    }
    auto table = qlr_via_expansion(shape, o.n);
    if (o.route == "both" && table != qlr_table_via_operators(shape, o.n)) {
        err << "route mismatch on " << shape.to_string() << '\n';
        return verification_failed;
    }
    if (o.format == "json")
        emit_json(out, table);
    else
        out << (o.format == "latex" ? to_latex(table.as_symfunc()) : table.as_symfunc().to_string()) << '\n';
    return ok;
}

inline int cmd_ribbonfn(const Options& o, std::ostream& out) {
    auto shape = shape_of(o);
    require_divisible(shape, o.n);
    auto g = ribbon_function(shape, o.n);
    if (o.basis == "schur") g = to_schur_basis(g);
    if (o.format == "json")
        emit_json(out, g);
    else
        out << (o.format == "latex" ? to_latex(g) : g.to_string()) << '\n';
    return ok;
}

inline int cmd_tableaux(const Options& o, std::ostream& out) {
    auto shape = shape_of(o);
    require_divisible(shape, o.n);
    std::vector<int> weight;
    if (o.weight.empty())
        weight.assign(static_cast<std::size_t>(shape.size() / o.n), 1);
    else
        weight = parse_composition(o.weight);
    long total = 0;
    for (int w : weight) total += w;
    if (total * o.n != shape.size())
        throw UsageError("weight sums to " + std::to_string(total) + " ribbons but the shape holds " +
                         std::to_string(shape.size() / o.n));
    auto ts = enumerate_tableaux(shape, o.n, weight);
    QPoly gen;
    for (const auto& t : ts) gen += QPoly::monomial(t.spin);
    if (o.format == "json") {
        emit_json(out, {{"shape", shape}, {"n", o.n}, {"weight", weight}, {"count", ts.size()}, {"spin_polynomial", gen},
                        {"tableaux", ts}});
        return ok;
    }
    for (const auto& t : ts) out << render_ascii(t, o.n) << '\n';
    out << ts.size() << " tableaux, spin polynomial " << gen << '\n';
    return ok;
}

inline int cmd_strips(const Options& o, std::ostream& out) {
    auto mu = partition_flag(o.inner, "inner");
    if (o.n < 1) throw UsageError("--n must be at least 1");
    if (o.k < 0) throw UsageError("--k must be nonnegative");
    auto strips = horizontal_strips(mu, o.n, o.k);
    if (o.format == "json") {
        emit_json(out, {{"inner", mu.vec()}, {"n", o.n}, {"k", o.k}, {"strips", strips}});
        return ok;
    }
    for (const auto& s : strips) out << '(' << s.outer.to_string() << ") spin " << s.spin << '\n';
    return ok;
}

inline int cmd_quotient(const Options& o, std::ostream& out) {
    auto lambda = partition_flag(o.outer, "outer");
    if (o.n < 1) throw UsageError("--n must be at least 1");
    auto cq = core_and_quotient(lambda, o.n);
    if (o.format == "json") {
        emit_json(out, cq);
        return ok;
    }
    out << "core (" << cq.core.to_string() << ")\nquotient";
    for (const auto& q : cq.quotient) out << " (" << q.to_string() << ')';
    out << "\noffsets";
    for (int s : cq.offsets) out << ' ' << s;
    out << '\n';
    return ok;
}

inline int cmd_apply(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    if (o.expr.empty()) throw UsageError("apply needs --expr");
    auto start = partition_flag(o.inner, "inner");
    OperatorExpr e;
    try {
        e = OperatorExpr::parse(o.expr);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string("--expr: ") + ex.what());
    }
    auto v = e.apply(o.n, start);
    if (o.format == "json")
        emit_json(out, {{"expr", e.to_string()}, {"n", o.n}, {"input", start.vec()}, {"result", v}});
    else
        out << v << '\n';
    return ok;
}

inline int cmd_yamanouchi(const Options& o, std::ostream& out) {
    auto shape = shape_of(o);
    require_divisible(shape, o.n);
    auto nu = partition_flag(o.nu, "nu");
    if (o.n * nu.size() != shape.size())
        throw UsageError("n|nu| = " + std::to_string(o.n * nu.size()) + " but |" + shape.to_string() +
                         "| = " + std::to_string(shape.size()));
    auto ts = yamanouchi_tableaux(nu, shape, o.n);
    auto c = yamanouchi_polynomial(ts);
    if (o.format == "json") {
        emit_json(out, {{"shape", shape}, {"n", o.n}, {"nu", nu.vec()}, {"coeff", c}, {"tableaux", ts}});
        return ok;
    }
    for (const auto& t : ts) out << render_ascii(t, o.n) << '\n';
    out << "c = " << (o.format == "latex" ? c.to_latex() : c.to_string()) << '\n';
    return ok;
}

inline int cmd_dim(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    if (o.k < 1) throw UsageError("--k must be at least 1");
    auto d = algebra_dimension(o.n, o.k, o.truncation, o.seed);
    if (o.format == "json") {
        emit_json(out, d);
    } else {
        out << "rank " << d.rank << " (unital span, " << d.monomials << " monomials, sources " << d.sources << ")\n";
        out << "printed formula ((2k choose k)/(2k+1))^n = " << d.printed_formula << '\n';
        if (d.inconclusive) out << "inconclusive: rank grows with the truncation\n";
    }
    return d.inconclusive ? verification_failed : ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    if (o.max_size < 0) throw UsageError("--max-size must be nonnegative");
    const auto& id = o.identity;
    if (id == "dimension") return cmd_dim(o, out);
    if (id == "qlr" || id == "nonneg") {
        ScanBounds b{o.max_size, {o.n}, true, o.jobs};
        json j;
        bool good;
        if (id == "qlr") {
            auto cv = cross_validate_routes(b);
            json mism = json::array();
            for (const auto& m : cv.mismatches)
                mism.push_back({{"shape", m.shape}, {"nu", m.nu.vec()}, {"via_operators", m.via_operators},
                                {"via_expansion", m.via_expansion}});
            j = {{"identity", "qlr"}, {"n", o.n}, {"max_size", o.max_size}, {"shapes", cv.shapes},
                 {"cases", cv.entries}, {"failures", mism}, {"ok", cv.mismatches.empty()}};
            good = cv.mismatches.empty();
        } else {
            auto rep = nonnegativity_scan(b);
            j = rep;
            j["identity"] = "nonneg";
            j["ok"] = rep.clean();
            good = rep.clean();
        }
        if (o.format == "json")
            emit_json(out, j);
        else
            out << id << ": " << j["cases"].dump() << " entries, " << (good ? "no" : "SOME") << " failures\n";
        return good ? ok : verification_failed;
    }
    std::optional<std::pair<int, int>> window;
    if (!o.window.empty()) window = parse_window(o.window);
    VerificationReport r;
    if (id == "relations")
        r = check_relations(o.n, o.max_size, window, o.jobs);
    else if (id == "cauchy")
        r = check_cauchy(o.n, o.bound.value_or(4), o.max_size, o.jobs);
    else if (id == "heisenberg")
        r = check_heisenberg(o.n, o.bound.value_or(3), o.max_size, o.jobs);
    else if (id == "haction")
        r = check_haction(o.n, o.max_size, o.bound.value_or(3), o.jobs);
    else if (id == "hcommute")
        r = check_h_commute(o.n, o.bound.value_or(4), o.max_size, o.jobs);
    else
        throw UsageError("unknown identity \"" + id + "\"");
    if (o.format == "text") {
        out << r.identity << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << r.elapsed_seconds
            << " s\n";
        for (const auto& w : r.failures)
            out << "  " << w.relation << " n=" << w.n << " lambda=(" << w.lambda.to_string() << ") lhs=" << w.lhs
                << " rhs=" << w.rhs << '\n';
    } else {
        emit_json(out, r);
    }
    return r.ok() ? ok : verification_failed;
}

}  // namespace detail

/// Parses argv and dispatches; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ribbon Schur operators, ribbon tableaux and q-Littlewood-Richardson coefficients"};
    app.require_subcommand(1);
    Options o;
    auto formats = CLI::IsMember({"json", "text", "latex"});

    auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "ribbon size")->required(); };
    auto add_shape = [&](CLI::App* c) {
        c->add_option("--outer", o.outer, "outer partition, e.g. 4,4,4")->required();
        c->add_option("--inner", o.inner, "inner partition (\"\" for the empty partition)");
    };
    auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "json|text|latex")->check(formats); };
    auto add_jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "worker threads (0 = all cores)"); };

    auto* qlr = app.add_subcommand("qlr", "q-Littlewood-Richardson coefficients of a skew shape");
    add_n(qlr);
    add_shape(qlr);
    qlr->add_option("--nu", o.nu, "single coefficient c^nu");
    qlr->add_option("--route", o.route, "both|expansion")->check(CLI::IsMember({"both", "expansion"}));
    add_format(qlr);

    auto* rfn = app.add_subcommand("ribbonfn", "ribbon function G of a skew shape");
    add_n(rfn);
    add_shape(rfn);
    rfn->add_option("--basis", o.basis, "schur|monomial")->check(CLI::IsMember({"schur", "monomial"}));
    add_format(rfn);

    auto* tab = app.add_subcommand("tableaux", "semistandard ribbon tableaux of a given weight");
    add_n(tab);
    add_shape(tab);
    tab->add_option("--weight", o.weight, "composition, e.g. 2,1,3,1 (default all ones)");
    add_format(tab);

    auto* strips = app.add_subcommand("strips", "horizontal ribbon strips on a partition");
    add_n(strips);
    strips->add_option("--inner", o.inner, "starting partition");
    strips->add_option("--k", o.k, "number of ribbons")->required();
    add_format(strips);

    auto* quo = app.add_subcommand("quotient", "n-core and n-quotient");
    add_n(quo);
    quo->add_option("--outer", o.outer, "partition")->required();
    add_format(quo);

    auto* apply = app.add_subcommand("apply", "apply an operator expression to a partition");
    add_n(apply);
    apply->add_option("--expr", o.expr, "e.g. \"u[2] u[1] u[3] u[0]\"")->required();
    apply->add_option("--inner", o.inner, "input partition (default empty)");
    add_format(apply);

    auto* yam = app.add_subcommand("yamanouchi", "Yamanouchi ribbon tableaux for hooks and (s,2)");
    add_n(yam);
    add_shape(yam);
    yam->add_option("--nu", o.nu, "hook or (s,2)")->required();
    add_format(yam);

    auto* ver = app.add_subcommand("verify", "check an identity on all partitions up to a size");
    add_n(ver);
    ver->add_option("--identity", o.identity)
        ->check(CLI::IsMember({"relations", "cauchy", "heisenberg", "haction", "hcommute", "dimension", "qlr", "nonneg"}));
    ver->add_option("--max-size", o.max_size, "largest partition size");
    ver->add_option("--window", o.window, "head diagonals lo:hi (relations only)");
    ver->add_option("--bound", o.bound, "index bound (a,b for cauchy; |k| for heisenberg; j for haction)");
    ver->add_option("--k", o.k, "generator blocks (dimension)");
    ver->add_option("--seed", o.seed, "seed for random specializations");
    add_jobs(ver);
    add_format(ver);

    auto* dim = app.add_subcommand("dim", "dimension of the algebra generated by u_1..u_{kn}");
    add_n(dim);
    dim->add_option("--k", o.k, "generator blocks")->required();
    dim->add_option("--truncation", o.truncation, "use partitions of size <= T instead of window patterns");
    dim->add_option("--seed", o.seed, "seed for random specializations");
    add_format(dim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
        err << "usage error: " << msg << '\n';
        return usage_error;
    }

    auto* cmd = app.get_subcommands().front();
    if (o.format.empty()) o.format = cmd == ver ? "json" : "text";
    try {
        if (cmd == qlr) return detail::cmd_qlr(o, out, err);
        if (cmd == rfn) return detail::cmd_ribbonfn(o, out);
        if (cmd == tab) return detail::cmd_tableaux(o, out);
        if (cmd == strips) return detail::cmd_strips(o, out);
        if (cmd == quo) return detail::cmd_quotient(o, out);
        if (cmd == apply) return detail::cmd_apply(o, out);
        if (cmd == yam) return detail::cmd_yamanouchi(o, out);
        if (cmd == ver) return detail::cmd_verify(o, out);
        if (cmd == dim) return detail::cmd_dim(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return verification_failed;
    }
    return usage_error;
}

}  // namespace ribbon::cli
