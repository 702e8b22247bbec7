#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/qpoly.hpp"

namespace ribbon {

enum class Basis { monomial, schur };

inline const char* basis_name(Basis b) { return b == Basis::monomial ? "monomial" : "schur"; }

/// Homogeneous symmetric function of degree m with Z[q] coefficients.
class SymFunc {
public:
    using map_type = std::map<Partition, QPoly, CanonicalOrder>;

    SymFunc() : SymFunc(0, Basis::schur) {}
    SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
        if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
    }

    int degree() const noexcept { return degree_; }
    Basis basis() const noexcept { return basis_; }
    const map_type& coeffs() const noexcept { return coeffs_; }

    QPoly operator[](const Partition& nu) const {
        auto it = coeffs_.find(nu);
        return it == coeffs_.end() ? QPoly{} : it->second;
    }

    void add(const Partition& nu, const QPoly& c) {
        if (nu.size() != degree_)
            throw std::invalid_argument("SymFunc: " + nu.to_string() + " is not a partition of " + std::to_string(degree_));
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(nu, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    /// "q^2 s[2,1,1] + (q^6 + q^4) s[3,1]"; "0" when empty.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        const char* sym = basis_ == Basis::schur ? "s" : "m";
        std::ostringstream os;
        bool first = true;
        for (const auto& [nu, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (c != QPoly(1)) {
                if (c.terms().size() == 1)
                    os << c.to_string() << ' ';
                else
                    os << '(' << c.to_string() << ") ";
            }
            os << sym << '[' << (nu.empty() ? "" : nu.to_string()) << ']';
        }
        return os.str();
    }

private:
    int degree_;
    Basis basis_;
    map_type coeffs_;
};

/// Kostka numbers K_{nu,rho} (SSYT of shape nu and content rho) for all
/// partitions of one degree.
class KostkaTable {
public:
    explicit KostkaTable(int degree) : degree_(degree), parts_(partitions_of(degree)) {
        for (const auto& rho : parts_) {
            memo_.clear();  // memo entries are only valid for one content
            for (const auto& nu : parts_) table_[{nu, rho}] = count(nu, rho.vec(), rho.length());
        }
        memo_.clear();
    }

    int degree() const noexcept { return degree_; }
    /// Partitions of the degree in reverse-lexicographic order; K is upper
    /// unitriangular in this order.
    const std::vector<Partition>& partitions() const noexcept { return parts_; }

    std::int64_t operator()(const Partition& nu, const Partition& rho) const {
        auto it = table_.find({nu, rho});
        return it == table_.end() ? 0 : it->second;
    }

private:
    int degree_;
    std::vector<Partition> parts_;
    std::map<std::pair<Partition, Partition>, std::int64_t> table_;
    std::map<std::pair<Partition, int>, std::int64_t> memo_;

    // Cells labelled `labels` form a horizontal strip at the outer edge.
    std::int64_t count(const Partition& shape, const std::vector<int>& content, int labels) {
        if (labels == 0) return shape.empty() ? 1 : 0;
        auto key = std::make_pair(shape, labels);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int strip = content[static_cast<std::size_t>(labels - 1)];
        std::int64_t total = 0;
        std::vector<int> inner(shape.vec());
        // choose inner_k in [shape_{k+1}, shape_k] with total removed = strip
        std::vector<int> cur(inner.size());
        auto rec = [&](auto&& self, std::size_t row, int left) -> void {
            if (row == inner.size()) {
                if (left == 0) total += count(Partition(cur), content, labels - 1);
                return;
            }
            int top = shape.vec()[row];
            int bottom = row + 1 < inner.size() ? shape.vec()[row + 1] : 0;
            for (int keep = top; keep >= bottom; --keep) {
                int removed = top - keep;
                if (removed > left) break;
                cur[row] = keep;
                self(self, row + 1, left - removed);
            }
        };
        rec(rec, 0, strip);
        memo_[key] = total;
        return total;
    }
};

/// Monomial to Schur basis by back-substitution through the unitriangular
/// Kostka matrix: a_rho = sum_{nu >= rho} c_nu K_{nu,rho}.
inline SymFunc to_schur_basis(const SymFunc& f, const KostkaTable& kostka) {
    if (f.basis() == Basis::schur) return f;
    if (kostka.degree() != f.degree()) throw std::invalid_argument("to_schur_basis: Kostka table degree mismatch");
    SymFunc out(f.degree(), Basis::schur);
    std::map<Partition, QPoly> c;
    const auto& order = kostka.partitions();
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& rho = order[r];
        QPoly value = f[rho];
        for (std::size_t v = 0; v < r; ++v) {
            auto k = kostka(order[v], rho);
            if (k != 0) value -= c[order[v]] * QPoly(k);
        }
        c[rho] = value;
        out.add(rho, value);
    }
    return out;
}

inline SymFunc to_schur_basis(const SymFunc& f) { return to_schur_basis(f, KostkaTable(f.degree())); }

/// Schur to monomial basis: s_nu = sum_rho K_{nu,rho} m_rho.
inline SymFunc to_monomial_basis(const SymFunc& f, const KostkaTable& kostka) {
    if (f.basis() == Basis::monomial) return f;
    SymFunc out(f.degree(), Basis::monomial);
    for (const auto& [nu, c] : f.coeffs())
        for (const auto& rho : kostka.partitions()) {
            auto k = kostka(nu, rho);
            if (k != 0) out.add(rho, c * QPoly(k));
        }
    return out;
}

inline SymFunc to_monomial_basis(const SymFunc& f) { return to_monomial_basis(f, KostkaTable(f.degree())); }

}  // namespace ribbon
