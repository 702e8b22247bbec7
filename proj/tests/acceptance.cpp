// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ribbon/ribbon.hpp"

using namespace ribbon;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < limit_seconds;
    bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %2d %-28s %8.2fs (limit %.0fs)  %s%s\n", pass ? "PASS" : "FAIL", id, name, secs, limit_seconds,
                o.detail.c_str(), in_time ? "" : " [over time limit]");
    std::fflush(stdout);
}

std::string count_msg(long cases, std::size_t failed) {
    return std::to_string(cases) + " cases, " + std::to_string(failed) + " failures";
}

Outcome reports(const std::vector<VerificationReport>& rs) {
    long cases = 0;
    std::size_t failed = 0;
    for (const auto& r : rs) {
        cases += r.cases;
        failed += r.failures.size();
    }
    return {failed == 0 && cases > 0, count_msg(cases, failed)};
}

}  // namespace

int main() {
    criterion(1, "worked example G_(444)", 5, [] {
        auto g = to_schur_basis(ribbon_function(SkewShape(Partition{4, 4, 4}), 3));
        SymFunc expected(4, Basis::schur);
        expected.add(Partition{2, 1, 1}, QPoly::monomial(2));
        expected.add(Partition{3, 1}, QPoly::parse("q^4 + q^6"));
        expected.add(Partition{2, 2}, QPoly::monomial(4));
        expected.add(Partition{4}, QPoly::monomial(8));
        return Outcome{g == expected, to_latex(g)};
    });

    criterion(2, "q-LR c^(22)_(444) both routes", 1, [] {
        SkewShape s(Partition{4, 4, 4});
        auto ops = qlr_via_operators(Partition{2, 2}, s, 3);
        auto exp = qlr_via_expansion(s, 3)[Partition{2, 2}];
        auto q4 = QPoly::monomial(4);
        return Outcome{ops == q4 && exp == q4, "operators " + ops.to_string() + ", expansion " + exp.to_string()};
    });

    criterion(3, "spin-7 tableau and slot spins", 5, [] {
        auto ts = enumerate_tableaux(SkewShape(Partition{7, 6, 4, 3, 1}), 3, {2, 1, 3, 1});
        bool spin7 = false;
        for (const auto& t : ts) spin7 = spin7 || t.spin == 7;
        std::vector<int> spins;
        std::ostringstream os;
        for (const auto& s : ribbon_slots(Partition{7, 6, 4, 3, 1}, 3)) {
            spins.push_back(s.signed_spin());
            os << (spins.size() > 1 ? "," : "") << s.signed_spin();
        }
        return Outcome{spin7 && spins == std::vector<int>{2, 1, -1, 1, -1, 1, 0},
                       std::to_string(ts.size()) + " tableaux, spin 7 " + (spin7 ? "found" : "missing") +
                           "; slot spins " + os.str()};
    });

    criterion(4, "relations rel1-rel5, ud", 60, [] {
        std::vector<VerificationReport> rs;
        for (int n = 2; n <= 4; ++n) rs.push_back(check_relations(n, 10));
        return reports(rs);
    });

    criterion(5, "Cauchy h/hperp identity", 120, [] {
        std::vector<VerificationReport> rs;
        for (int n = 2; n <= 3; ++n) rs.push_back(check_cauchy(n, 4, 8));
        return reports(rs);
    });

    criterion(6, "Heisenberg commutators", 120, [] {
        std::vector<VerificationReport> rs;
        for (int n = 2; n <= 3; ++n) rs.push_back(check_heisenberg(n, 3, 8));
        return reports(rs);
    });

    criterion(7, "route cross-validation", 600, [] {
        auto cv = cross_validate_routes({12, {2, 3}, true, 0});
        return Outcome{cv.mismatches.empty() && cv.entries > 0,
                       std::to_string(cv.shapes) + " shapes, " + count_msg(cv.entries, cv.mismatches.size())};
    });

    criterion(8, "positive formulas", 600, [] {
        std::vector<Partition> shapes;
        for (int a = 1; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b) shapes.push_back(detail::hook_shape(a, b));
        for (int s = 2; s <= 3; ++s) shapes.push_back(detail::s2_shape(s));
        long cases = 0;
        std::size_t failed = 0;
        for (int n = 2; n <= 3; ++n)
            for (const auto& nu : shapes)
                for (const auto& mu : partitions_up_to(9)) {
                    ++cases;
                    auto pa = positive_action(nu, n, mu, false);
                    if (pa.route != PositiveRoute::primal || pa.result != apply_symfunc(SymFuncName::s(nu), n, mu))
                        ++failed;
                }
        std::set<std::vector<int>> words;
        for (const auto& t : s2_fillings(2, 3, 0, 3)) {
            std::set<int> entries;
            for (const auto& row : t.rows) entries.insert(row.begin(), row.end());
            if (entries == std::set<int>{0, 1, 2, 3}) words.insert(reading_word(t));
        }
        auto on_vacuum = [](const std::vector<int>& w) {
            FockVec v = FockVec::vacuum();
            for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_u(*it, 3, v);
            return v;
        };
        bool two_by_two = words == std::set<std::vector<int>>{{2, 1, 3, 0}, {1, 0, 3, 2}} &&
                      on_vacuum({1, 0, 3, 2}).is_zero() &&
                      on_vacuum({2, 1, 3, 0}) == FockVec(Partition{4, 4, 4}, QPoly::monomial(4));
        return Outcome{failed == 0 && two_by_two,
                       count_msg(cases, failed) + "; (2,2) on {0,1,2,3}: " + std::to_string(words.size()) +
                           " commuting tableaux" + (two_by_two ? ", T kills the vacuum" : ", (2,2) check failed")};
    });

    criterion(9, "core/quotient bijection", 60, [] {
        long cases = 0;
        std::size_t failed = 0;
        for (int n = 1; n <= 4; ++n)
            for (const auto& lambda : partitions_up_to(12)) {
                ++cases;
                auto cq = core_and_quotient(lambda, n);
                if (!is_core(cq.core, n) || from_core_and_quotient(cq.core, cq.quotient, n) != lambda) ++failed;
            }
        for (int n = 1; n <= 3; ++n)
            for (const auto& lambda : partitions_up_to(10)) {
                auto cq = core_and_quotient(lambda, n);
                for (int j = 0; j < n; ++j) {
                    const auto& alpha = cq.quotient[static_cast<std::size_t>(j)];
                    for (const auto& beta : oracle::add_box(alpha)) {
                        ++cases;
                        int k = 0;
                        for (int x = 1; x <= beta.length(); ++x)
                            if (beta[x] != alpha[x]) k = beta[x] - x;
                        auto mv = add_ribbon(lambda, n * k + cq.offsets[static_cast<std::size_t>(j)], n);
                        auto expected = cq.quotient;
                        expected[static_cast<std::size_t>(j)] = beta;
                        if (!mv || core_and_quotient(mv->result, n) != CoreQuotient{cq.core, expected, cq.offsets})
                            ++failed;
                    }
                }
            }
        return Outcome{failed == 0, count_msg(cases, failed)};
    });

    criterion(10, "n=1 degeneration", 600, [] {
        long cases = 0;
        std::size_t failed = 0;
        for (const auto& outer : partitions_up_to(9))
            for (const auto& inner : subpartitions(outer)) {
                int size = outer.size() - inner.size();
                if (size < 1 || size > 6) continue;
                ++cases;
                auto g = ribbon_function(SkewShape(outer, inner), 1);
                SymFunc expected(size, Basis::monomial);
                for (const auto& [nu, c] : oracle::skew_schur_monomial(outer, inner)) expected.add(nu, QPoly(c));
                if (g != expected) ++failed;
            }
        return Outcome{failed == 0, std::to_string(cases) + " skew shapes (outer size <= 9), " +
                                        std::to_string(failed) + " failures"};
    });

    criterion(11, "algebra dimension", 600, [] {
        std::ostringstream os;
        bool ok = true;
        const long expected[] = {2, 5, 14};
        long one[4] = {};
        for (int k = 1; k <= 3; ++k) {
            auto d = algebra_dimension(1, k);
            one[k] = d.rank;
            ok = ok && d.rank == expected[k - 1];
            for (long r : d.specialized_ranks) ok = ok && r == d.rank;
            os << "n=1 k=" << k << ": " << d.rank << " (printed formula " << d.printed_formula << "); ";
        }
        for (int k = 1; k <= 2; ++k) {
            auto d = algebra_dimension(2, k);
            ok = ok && d.rank == one[k] * one[k];
            os << "n=2 k=" << k << ": " << d.rank << (k == 1 ? "; " : "");
        }
        return Outcome{ok, os.str()};
    });

    criterion(12, "non-negativity scan", 600, [] {
        auto r = nonnegativity_scan({12, {2, 3}, true, 0});
        std::string msg = std::to_string(r.shapes) + " shapes, " + std::to_string(r.entries) + " coefficients, " +
                          std::to_string(r.violations.size()) + " negative";
        if (!r.clean()) {
            const auto& v = r.violations.front();
            msg += "; COUNTEREXAMPLE n=" + std::to_string(v.n) + " " + v.shape.to_string() + " nu=" +
                   v.nu.to_string() + " c=" + v.coeff.to_string();
        }
        return Outcome{r.clean() && r.shapes > 0, msg};
    });

    std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
