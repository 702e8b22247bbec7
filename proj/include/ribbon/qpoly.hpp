#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ribbon {

/// Polynomial in q with integer coefficients.
///
/// Stored densely by exponent with trailing zeros trimmed, so the zero
/// polynomial has no coefficients at all and equality is plain vector
/// equality.
class QPoly {
public:
    using coeff_type = std::int64_t;

    QPoly() = default;
    QPoly(coeff_type c) {  // NOLINT: implicit constants read naturally in formulas
        if (c != 0) coeffs_.push_back(c);
    }

    /// c * q^e
    static QPoly monomial(int e, coeff_type c = 1) {
        if (e < 0) throw std::invalid_argument("QPoly: negative exponent");
        QPoly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(e) + 1, 0);
            p.coeffs_.back() = c;
        }
        return p;
    }

    static QPoly from_terms(const std::vector<std::pair<int, coeff_type>>& terms) {
        QPoly p;
        for (auto [e, c] : terms) p += monomial(e, c);
        return p;
    }

    /// 1 + x + x^2 + ... + x^(count-1) with x = q^step.
    static QPoly geometric(int step, int count) {
        QPoly p;
        for (int t = 0; t < count; ++t) p += monomial(step * t);
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    coeff_type operator[](int e) const noexcept {
        if (e < 0 || e >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(e)];
    }

    /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<int, coeff_type>> terms() const {
        std::vector<std::pair<int, coeff_type>> out;
        for (std::size_t e = 0; e < coeffs_.size(); ++e)
            if (coeffs_[e] != 0) out.emplace_back(static_cast<int>(e), coeffs_[e]);
        return out;
    }

    bool is_nonnegative() const noexcept {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](coeff_type c) { return c >= 0; });
    }

    coeff_type eval_at_one() const noexcept {
        coeff_type s = 0;
        for (auto c : coeffs_) s += c;
        return s;
    }

    /// Horner evaluation modulo a prime below 2^62.
    std::uint64_t eval_mod(std::uint64_t q, std::uint64_t p) const noexcept {
        unsigned __int128 acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            std::int64_t c = *it % static_cast<std::int64_t>(p);
            if (c < 0) c += static_cast<std::int64_t>(p);
            acc = (acc * q + static_cast<std::uint64_t>(c)) % p;
        }
        return static_cast<std::uint64_t>(acc);
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] -= o.coeffs_[e];
        trim();
        return *this;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    /// Multiply by q^e in place.
    QPoly& shift(int e) {
        if (e < 0) throw std::invalid_argument("QPoly: negative shift");
        if (!coeffs_.empty()) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(e), 0);
        return *this;
    }
    QPoly shifted(int e) const {
        QPoly p = *this;
        p.shift(e);
        return p;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(QPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                coeff_type t;
                if (__builtin_mul_overflow(a.coeffs_[i], b.coeffs_[j], &t) ||
                    __builtin_add_overflow(r.coeffs_[i + j], t, &r.coeffs_[i + j]))
                    throw std::overflow_error("QPoly: coefficient overflow");
            }
        }
        r.trim();
        return r;
    }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// "q^4 + 2q^2 + 1"; "0" for the zero polynomial.
    std::string to_string() const { return render(false); }
    /// "q^{4} + 2q^{2} + 1"
    std::string to_latex() const { return render(true); }

    /// Inverse of to_string (also accepts the LaTeX braces and '*').
    static QPoly parse(std::string_view text);

private:
    std::vector<coeff_type> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::string render(bool latex) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int e = degree(); e >= 0; --e) {
            coeff_type c = (*this)[e];
            if (c == 0) continue;
            coeff_type mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0 || mag != 1) os << mag;
            if (e >= 1) os << 'q';
            if (e >= 2) {
                if (latex)
                    os << "^{" << e << '}';
                else
                    os << '^' << e;
            }
        }
        return os.str();
    }
};

inline QPoly QPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}' && ch != '*') s += ch;
    if (s.empty()) throw std::invalid_argument("QPoly: empty text");
    QPoly out;
    std::size_t pos = 0;
    auto read_int = [&](coeff_type& v) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) return false;
        v = std::stoll(s.substr(start, pos - start));
        return true;
    };
    while (pos < s.size()) {
        coeff_type sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("QPoly: expected '+' or '-' in \"" + std::string(text) + "\"");
        }
        coeff_type c = 1;
        bool has_coeff = read_int(c);
        int e = 0;
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                coeff_type ev = 0;
                if (!read_int(ev)) throw std::invalid_argument("QPoly: bad exponent");
                e = static_cast<int>(ev);
            }
        } else if (!has_coeff) {
            throw std::invalid_argument("QPoly: cannot parse \"" + std::string(text) + "\"");
        }
        out += monomial(e, sign * c);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

}  // namespace ribbon
