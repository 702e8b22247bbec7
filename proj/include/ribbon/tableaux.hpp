#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/partition_core.hpp"
#include "ribbon/qpoly.hpp"
#include "ribbon/symfunc.hpp"

namespace ribbon {

/// lambda/mu as a horizontal n-ribbon strip: its natural tiling (head
/// diagonals, increasing) and total spin.
struct HorizontalStrip {
    Partition outer;
    int spin = 0;
    std::vector<int> heads;
    friend bool operator==(const HorizontalStrip&, const HorizontalStrip&) = default;
};

namespace detail {

// Classical horizontal strips of `size` boxes added to alpha: (new part list,
// contents of the added boxes).
inline void classical_strips(const Partition& alpha, int size,
                             std::vector<std::pair<Partition, std::vector<int>>>& out) {
    int rows = alpha.length() + 1;
    std::vector<int> parts(static_cast<std::size_t>(rows));
    std::vector<int> contents;
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row > rows) {
            if (left == 0) out.emplace_back(Partition(parts), contents);
            return;
        }
        int base = alpha[row];
        int cap = row == 1 ? base + left : std::min(base + left, alpha[row - 1]);
        for (int part = base; part <= cap; ++part) {
            parts[static_cast<std::size_t>(row - 1)] = part;
            for (int col = base + 1; col <= part; ++col) contents.push_back(col - row);
            self(self, row + 1, left - (part - base));
            contents.resize(contents.size() - static_cast<std::size_t>(part - base));
        }
    };
    rec(rec, 1, size);
}

// Replays increasing heads from mu; the strip must come out nonzero.
inline std::optional<RibbonMove> replay_heads(const Partition& mu, const std::vector<int>& heads, int n) {
    RibbonMove acc{mu, 0};
    for (int i : heads) {
        auto mv = add_ribbon(acc.result, i, n);
        if (!mv) return std::nullopt;
        acc.result = std::move(mv->result);
        acc.spin += mv->spin;
    }
    return acc;
}

}  // namespace detail

/// All lambda such that lambda/mu is a horizontal strip of k n-ribbons.
///
/// Built on the n-quotient: a horizontal ribbon strip is exactly a choice of
/// classical horizontal strips in the quotient components, with each added
/// box at content c of component j becoming a ribbon head on diagonal
/// n*c + s_j. Spins come from replaying the heads in increasing order.
inline std::vector<HorizontalStrip> horizontal_strips(const Partition& mu, int n, int k) {
    detail::require_ribbon_size(n);
    std::vector<HorizontalStrip> out;
    if (k < 0) return out;
    auto cq = core_and_quotient(mu, n);
    std::vector<Partition> quotient(static_cast<std::size_t>(n));
    std::vector<int> heads;
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == n) {
            if (left != 0) return;
            std::vector<int> sorted = heads;
            std::sort(sorted.begin(), sorted.end());
            auto mv = detail::replay_heads(mu, sorted, n);
            auto lambda = from_core_and_quotient(cq.core, quotient, n);
            if (!mv || !(mv->result == lambda))
                throw std::logic_error("horizontal_strips: quotient strip does not replay on " + mu.to_string());
            out.push_back({std::move(lambda), mv->spin, std::move(sorted)});
            return;
        }
        std::vector<std::pair<Partition, std::vector<int>>> strips;
        for (int t = 0; t <= left; ++t)
            detail::classical_strips(cq.quotient[static_cast<std::size_t>(j)], t, strips);
        for (auto& [alpha, contents] : strips) {
            int boxes = static_cast<int>(contents.size());
            if (j == n - 1 && boxes != left) continue;
            quotient[static_cast<std::size_t>(j)] = alpha;
            for (int c : contents) heads.push_back(n * c + cq.offsets[static_cast<std::size_t>(j)]);
            self(self, j + 1, left - boxes);
            heads.resize(heads.size() - contents.size());
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(),
              [](const HorizontalStrip& a, const HorizontalStrip& b) { return CanonicalOrder{}(a.outer, b.outer); });
    return out;
}

/// The natural tiling of lambda/mu if it is a horizontal n-ribbon strip.
inline std::optional<HorizontalStrip> as_horizontal_strip(const Partition& mu, const Partition& lambda, int n) {
    if (!lambda.contains(mu) || (lambda.size() - mu.size()) % n != 0) return std::nullopt;
    auto a = core_and_quotient(mu, n);
    auto b = core_and_quotient(lambda, n);
    if (!(a.core == b.core)) return std::nullopt;
    std::vector<int> heads;
    for (int j = 0; j < n; ++j) {
        const auto& inner = a.quotient[static_cast<std::size_t>(j)];
        const auto& outer = b.quotient[static_cast<std::size_t>(j)];
        if (!outer.contains(inner)) return std::nullopt;
        for (int row = 1; row <= outer.length(); ++row) {
            if (row >= 2 && outer[row] > inner[row - 1]) return std::nullopt;  // two boxes in one column
            for (int col = inner[row] + 1; col <= outer[row]; ++col)
                heads.push_back(n * (col - row) + a.offsets[static_cast<std::size_t>(j)]);
        }
    }
    std::sort(heads.begin(), heads.end());
    auto mv = detail::replay_heads(mu, heads, n);
    if (!mv || !(mv->result == lambda)) return std::nullopt;
    return HorizontalStrip{lambda, mv->spin, std::move(heads)};
}

struct Tile {
    int head_diagonal = 0;
    int ribbon_index = 0;  // 1-based label of the strip holding this ribbon
    friend bool operator==(const Tile&, const Tile&) = default;
};

/// Semistandard ribbon tableau mu = chain[0] < chain[1] < ... < chain[r] = lambda.
struct RibbonTableau {
    std::vector<Partition> chain;
    std::vector<int> weight;  // ribbons per label
    int spin = 0;
    std::vector<Tile> tiles;
    friend bool operator==(const RibbonTableau&, const RibbonTableau&) = default;

    SkewShape shape() const { return {chain.back(), chain.front()}; }
};

/// Rebuilds weight, spin and natural tiles from a chain; throws if some step
/// is not a horizontal ribbon strip.
inline RibbonTableau tableau_from_chain(std::vector<Partition> chain, int n) {
    if (chain.empty()) throw std::invalid_argument("ribbon tableau needs a nonempty chain");
    RibbonTableau t;
    for (std::size_t s = 1; s < chain.size(); ++s) {
        auto strip = as_horizontal_strip(chain[s - 1], chain[s], n);
        if (!strip)
            throw std::invalid_argument(chain[s].to_string() + "/" + chain[s - 1].to_string() +
                                        " is not a horizontal " + std::to_string(n) + "-ribbon strip");
        t.weight.push_back(static_cast<int>(strip->heads.size()));
        t.spin += strip->spin;
        for (int h : strip->heads) t.tiles.push_back({h, static_cast<int>(s)});
    }
    t.chain = std::move(chain);
    return t;
}

namespace detail {
inline void check_divisible(const SkewShape& shape, int n) {
    require_ribbon_size(n);
    if (shape.size() % n != 0)
        throw std::invalid_argument("skew shape " + shape.to_string() + " has size " + std::to_string(shape.size()) +
                                    ", not divisible by n = " + std::to_string(n));
}
}  // namespace detail

/// All semistandard n-ribbon tableaux of the given shape and weight.
inline std::vector<RibbonTableau> enumerate_tableaux(const SkewShape& shape, int n, const std::vector<int>& weight) {
    detail::check_divisible(shape, n);
    long total = 0;
    for (int w : weight) {
        if (w < 0) throw std::invalid_argument("weight entries must be nonnegative");
        total += w;
    }
    if (total * n != shape.size())
        throw std::invalid_argument("weight sums to " + std::to_string(total) + " ribbons but shape " +
                                    shape.to_string() + " holds " + std::to_string(shape.size() / n));
    std::vector<RibbonTableau> out;
    std::map<std::pair<Partition, std::size_t>, bool> dead;
    RibbonTableau cur;
    cur.chain.push_back(shape.inner);
    auto rec = [&](auto&& self, std::size_t label) -> bool {
        const Partition here = cur.chain.back();
        if (label == weight.size()) {
            if (here == shape.outer) {
                out.push_back(cur);
                out.back().weight = weight;
                return true;
            }
            return false;
        }
        if (dead.count({here, label})) return false;
        bool any = false;
        for (auto& strip : horizontal_strips(here, n, weight[label])) {
            if (!shape.outer.contains(strip.outer)) continue;
            std::size_t tiles_before = cur.tiles.size();
            for (int h : strip.heads) cur.tiles.push_back({h, static_cast<int>(label) + 1});
            cur.spin += strip.spin;
            cur.chain.push_back(strip.outer);
            any = self(self, label + 1) || any;
            cur.chain.pop_back();
            cur.spin -= strip.spin;
            cur.tiles.resize(tiles_before);
        }
        if (!any) dead[{here, label}] = true;
        return any;
    };
    rec(rec, 0);
    return out;
}

/// Spin generating polynomial of tableaux with the given weight, i.e.
/// <h_{weight}(u) mu, lambda> computed strip by strip with memoization.
class TableauCounter {
public:
    TableauCounter(SkewShape shape, int n) : shape_(std::move(shape)), n_(n) { detail::check_divisible(shape_, n); }

    QPoly count(const std::vector<int>& weight) {
        memo_.clear();
        weight_ = weight;
        return rec(shape_.inner, 0);
    }

private:
    SkewShape shape_;
    int n_;
    std::vector<int> weight_;
    std::map<std::pair<Partition, std::size_t>, QPoly> memo_;
    std::map<std::pair<Partition, int>, std::vector<HorizontalStrip>> strips_;

    const std::vector<HorizontalStrip>& strips(const Partition& mu, int k) {
        auto key = std::make_pair(mu, k);
        auto it = strips_.find(key);
        if (it != strips_.end()) return it->second;
        std::vector<HorizontalStrip> kept;
        for (auto& s : horizontal_strips(mu, n_, k))
            if (shape_.outer.contains(s.outer)) kept.push_back(std::move(s));
        return strips_.emplace(key, std::move(kept)).first->second;
    }

    QPoly rec(const Partition& here, std::size_t label) {
        if (label == weight_.size()) return here == shape_.outer ? QPoly(1) : QPoly{};
        auto key = std::make_pair(here, label);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        QPoly acc;
        for (const auto& s : strips(here, weight_[label])) {
            QPoly tail = rec(s.outer, label + 1);
            if (!tail.is_zero()) acc += tail.shifted(s.spin);
        }
        memo_[key] = acc;
        return acc;
    }
};

/// G_{lambda/mu}(X;q) in the monomial basis: the coefficient of m_nu is the
/// spin generating function of tableaux of weight nu.
inline SymFunc ribbon_function(const SkewShape& shape, int n) {
    detail::check_divisible(shape, n);
    int m = shape.size() / n;
    SymFunc g(m, Basis::monomial);
    TableauCounter counter(shape, n);
    for (const auto& nu : partitions_of(m)) g.add(nu, counter.count(nu.vec()));
    return g;
}

/// Cells (row, col) of each ribbon in the tableau, in tile order.
inline std::vector<std::vector<std::pair<int, int>>> tile_cells(const RibbonTableau& t, int n) {
    std::vector<std::vector<std::pair<int, int>>> cells;
    std::size_t tile = 0;
    for (std::size_t s = 1; s < t.chain.size(); ++s) {
        Partition cur = t.chain[s - 1];
        for (; tile < t.tiles.size() && t.tiles[tile].ribbon_index == static_cast<int>(s); ++tile) {
            auto mv = add_ribbon(cur, t.tiles[tile].head_diagonal, n);
            if (!mv) throw std::logic_error("tile_cells: tile does not replay");
            std::vector<std::pair<int, int>> these;
            for (int row = 1; row <= mv->result.length(); ++row)
                for (int col = cur[row] + 1; col <= mv->result[row]; ++col) these.emplace_back(row, col);
            cells.push_back(std::move(these));
            cur = std::move(mv->result);
        }
    }
    return cells;
}

/// Two side-by-side grids: strip labels on the left, one letter per ribbon
/// on the right; cells of the inner shape show '.'.
inline std::string render_ascii(const RibbonTableau& t, int n) {
    const Partition& outer = t.chain.back();
    std::vector<std::string> grid;
    for (int row = 1; row <= outer.length(); ++row) grid.emplace_back(static_cast<std::size_t>(outer[row]), '.');
    auto cells = tile_cells(t, n);
    const std::string ids = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::vector<std::string> idgrid = grid;
    for (std::size_t r = 0; r < cells.size(); ++r)
        for (auto [row, col] : cells[r]) {
            int label = t.tiles[r].ribbon_index;
            grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] =
                label < 10 ? static_cast<char>('0' + label) : '#';
            idgrid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = ids[r % ids.size()];
        }
    std::ostringstream os;
    for (std::size_t row = 0; row < grid.size(); ++row) os << grid[row] << "   " << idgrid[row] << '\n';
    os << "spin " << t.spin << ", weight (";
    for (std::size_t k = 0; k < t.weight.size(); ++k) os << (k ? "," : "") << t.weight[k];
    os << ")\n";
    return os.str();
}

}  // namespace ribbon
