#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "ribbon/partition.hpp"
#include "ribbon/qpoly.hpp"

namespace ribbon {

/// Finite Z[q]-linear combination of partitions.
class FockVec {
public:
    using map_type = std::map<Partition, QPoly, CanonicalOrder>;

    FockVec() = default;
    /// The basis vector of lambda.
    FockVec(const Partition& lambda) { terms_.emplace(lambda, QPoly(1)); }  // NOLINT
    FockVec(const Partition& lambda, QPoly coeff) { add(lambda, std::move(coeff)); }

    static FockVec vacuum() { return FockVec(Partition{}); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }
    const map_type& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    QPoly coefficient_of(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? QPoly{} : it->second;
    }

    /// this += coeff * lambda
    void add(const Partition& lambda, const QPoly& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(lambda, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FockVec& operator+=(const FockVec& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    FockVec& operator-=(const FockVec& o) {
        for (const auto& [p, c] : o.terms_) add(p, -c);
        return *this;
    }
    FockVec& operator*=(const QPoly& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend FockVec operator+(FockVec a, const FockVec& b) { return a += b; }
    friend FockVec operator-(FockVec a, const FockVec& b) { return a -= b; }
    friend FockVec operator*(const QPoly& s, FockVec v) { return v *= s; }
    friend bool operator==(const FockVec&, const FockVec&) = default;

    /// "q^4 (4,4,4) + (2,1)"; "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != QPoly(1)) {
                auto tms = c.terms();
                if (tms.size() == 1)
                    os << c.to_string() << ' ';
                else
                    os << '(' << c.to_string() << ") ";
            }
            os << '(' << p.to_string() << ')';
        }
        return os.str();
    }

private:
    map_type terms_;
};

inline std::ostream& operator<<(std::ostream& os, const FockVec& v) { return os << v.to_string(); }

/// Bilinear pairing with <lambda, mu> = delta.
inline QPoly inner_product(const FockVec& v, const FockVec& w) {
    const FockVec& small = v.support_size() <= w.support_size() ? v : w;
    const FockVec& large = &small == &v ? w : v;
    QPoly acc;
    for (const auto& [p, c] : small) {
        auto other = large.coefficient_of(p);
        if (!other.is_zero()) acc += c * other;
    }
    return acc;
}

inline QPoly coefficient_of(const FockVec& v, const Partition& lambda) { return v.coefficient_of(lambda); }

}  // namespace ribbon
