#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the Fock vacuum.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }

    /// Part k (1-based rows); zero beyond the last part.
    int operator[](int k) const noexcept {
        return (k >= 1 && k <= length()) ? parts_[static_cast<std::size_t>(k - 1)] : 0;
    }
    int first_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    bool contains_cell(int row, int col) const noexcept { return row >= 1 && col >= 1 && (*this)[row] >= col; }

    bool contains(const Partition& inner) const noexcept {
        if (inner.length() > length()) return false;
        for (int k = 1; k <= inner.length(); ++k)
            if (inner[k] > (*this)[k]) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int col = 1; col <= first_part(); ++col) {
            int h = 0;
            while (h < length() && parts_[static_cast<std::size_t>(h)] >= col) ++h;
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    /// Plain lexicographic order on part lists (for ordered containers).
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    /// "7,6,4,3,1"; "-" for the empty partition.
    std::string to_string() const {
        if (parts_.empty()) return "-";
        std::ostringstream os;
        for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
        return os.str();
    }

    /// Accepts "7,6,4,3,1", "", "-" and "()" forms; whitespace ignored.
    static Partition parse(std::string_view text) {
        std::string s;
        for (char ch : text)
            if (ch != ' ' && ch != '\t' && ch != '(' && ch != ')' && ch != '[' && ch != ']') s += ch;
        if (s.empty() || s == "-") return {};
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
            parts.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (std::any_of(parts.begin(), parts.end(), [](int p) { return p <= 0; }))
            throw std::invalid_argument("malformed partition \"" + std::string(text) + "\": parts must be positive");
        if (!std::is_sorted(parts.rbegin(), parts.rend()))
            throw std::invalid_argument("malformed partition \"" + std::string(text) + "\": parts must be weakly decreasing");
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

/// Canonical order: by size, then reverse-lexicographic ((4) before (3,1)).
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return b < a;
    }
};

/// Partitions of m in reverse-lexicographic order, starting from (m).
inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    if (m < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

/// All partitions of size at most max_size in canonical order.
inline std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int m = 0; m <= max_size; ++m) {
        auto ps = partitions_of(m);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// All partitions contained in outer, canonical order.
inline std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int bound) {
        out.emplace_back(cur);
        if (row > outer.length()) return;
        for (int p = 1; p <= std::min(bound, outer[row]); ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(1, outer.first_part());
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

/// A skew shape outer/inner with inner contained in outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition o, Partition i = {}) : outer(std::move(o)), inner(std::move(i)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("skew shape " + outer.to_string() + "/" + inner.to_string() +
                                        ": inner partition is not contained in outer");
    }
    int size() const noexcept { return outer.size() - inner.size(); }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    std::string to_string() const { return outer.to_string() + "/" + inner.to_string(); }
};

}  // namespace ribbon

template <>
struct std::hash<ribbon::Partition> {
    std::size_t operator()(const ribbon::Partition& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }
};
