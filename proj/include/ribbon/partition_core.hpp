#pragma once

// Ribbon moves on partitions through the Maya (edge-sequence) encoding
//   S(lambda) = { lambda_k - k : k >= 1 }.
// An n-ribbon with head on diagonal i can be added iff i-n is in S and i is
// not; adding it moves that bead from i-n to i, and the number of beads
// jumped over is the ribbon's spin.

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/partition.hpp"

namespace ribbon {

/// Co-finite-downward set of integers: the explicit beads plus every
/// integer strictly below floor.
class MayaSequence {
public:
    /// Encodes lambda with explicit beads for rows 1..depth (depth >= length).
    static MayaSequence of(const Partition& lambda, int depth) {
        depth = std::max(depth, lambda.length());
        MayaSequence m;
        m.floor_ = -depth;
        m.beads_.reserve(static_cast<std::size_t>(depth));
        for (int k = 1; k <= depth; ++k) m.beads_.push_back(lambda[k] - k);
        return m;
    }

    /// Builds from an arbitrary bead list; every integer below floor is implied.
    static MayaSequence from_beads(std::vector<int> beads, int floor) {
        MayaSequence m;
        m.floor_ = floor;
        std::sort(beads.begin(), beads.end(), std::greater<>());
        beads.erase(std::unique(beads.begin(), beads.end()), beads.end());
        if (!beads.empty() && beads.back() < floor) throw std::invalid_argument("MayaSequence: bead below floor");
        m.beads_ = std::move(beads);
        return m;
    }

    int floor() const noexcept { return floor_; }
    const std::vector<int>& beads() const noexcept { return beads_; }

    bool contains(int x) const noexcept {
        if (x < floor_) return true;
        return std::binary_search(beads_.begin(), beads_.end(), x, std::greater<>());
    }

    /// |S intersect (lo, hi)|, both ends exclusive.
    int count_between(int lo, int hi) const noexcept {
        if (hi - lo <= 1) return 0;
        int count = 0;
        if (lo + 1 < floor_) count += std::min(hi, floor_) - (lo + 1);
        for (int b : beads_)
            if (b > lo && b < hi) ++count;
        return count;
    }

    /// Moves the bead at `from` to the empty position `to`.
    void move_bead(int from, int to) {
        assert(from >= floor_ && to >= floor_);
        auto it = std::find(beads_.begin(), beads_.end(), from);
        assert(it != beads_.end());
        *it = to;
        std::sort(beads_.begin(), beads_.end(), std::greater<>());
    }

    /// Charge: beads at nonnegative positions minus holes at negative ones.
    int charge() const noexcept {
        int c = 0;
        for (int b : beads_) c += b >= 0 ? 1 : 0;
        int holes = 0;
        for (int x = floor_; x < 0; ++x)
            if (!contains(x)) ++holes;
        return c - holes;
    }

    /// Decodes a charge-zero sequence back to its partition.
    Partition to_partition() const {
        if (static_cast<int>(beads_.size()) != -floor_)
            throw std::logic_error("MayaSequence: bead count does not match floor (nonzero charge)");
        std::vector<int> parts;
        for (std::size_t k = 0; k < beads_.size(); ++k) {
            int part = beads_[k] + static_cast<int>(k) + 1;
            if (part < 0) throw std::logic_error("MayaSequence: inconsistent beads");
            if (part > 0) parts.push_back(part);
        }
        return Partition(std::move(parts));
    }

private:
    int floor_ = 0;
    std::vector<int> beads_;  // strictly decreasing
};

struct RibbonMove {
    Partition result;
    int spin = 0;
    friend bool operator==(const RibbonMove&, const RibbonMove&) = default;
};

namespace detail {
inline void require_ribbon_size(int n) {
    if (n < 1) throw std::invalid_argument("ribbon size n must be at least 1");
}
}  // namespace detail

/// Adds the n-ribbon with head on diagonal i, if there is one.
inline std::optional<RibbonMove> add_ribbon(const Partition& lambda, int i, int n) {
    detail::require_ribbon_size(n);
    // i not in S forces i >= -length; i-n in S forces i-n <= lambda_1 - 1.
    if (i < -lambda.length() || i - n > lambda.first_part() - 1) return std::nullopt;
    auto maya = MayaSequence::of(lambda, std::max(lambda.length(), n - i));
    if (!maya.contains(i - n) || maya.contains(i)) return std::nullopt;
    int spin = maya.count_between(i - n, i);
    maya.move_bead(i - n, i);
    return RibbonMove{maya.to_partition(), spin};
}

/// Removes the n-ribbon with head on diagonal i, if there is one.
inline std::optional<RibbonMove> remove_ribbon(const Partition& lambda, int i, int n) {
    detail::require_ribbon_size(n);
    if (i > lambda.first_part() - 1 || i - n < -lambda.length()) return std::nullopt;
    auto maya = MayaSequence::of(lambda, std::max(lambda.length(), n - i));
    if (!maya.contains(i) || maya.contains(i - n)) return std::nullopt;
    int spin = maya.count_between(i - n, i);
    maya.move_bead(i, i - n);
    return RibbonMove{maya.to_partition(), spin};
}

enum class SlotKind { add, remove };

struct RibbonSlot {
    int diagonal = 0;
    SlotKind kind = SlotKind::add;
    int spin = 0;

    /// +spin for addable, -spin for removable (a removable spin-0 slot reads as 0).
    int signed_spin() const noexcept { return kind == SlotKind::add ? spin : -spin; }
    friend bool operator==(const RibbonSlot&, const RibbonSlot&) = default;
};

/// Diagonal range outside of which no n-ribbon can be added to or removed
/// from lambda.
inline std::pair<int, int> slot_window(const Partition& lambda, int n) {
    return {-lambda.length(), lambda.first_part() - 1 + n};
}

/// Every addable and removable n-ribbon of lambda, by increasing head diagonal.
inline std::vector<RibbonSlot> ribbon_slots(const Partition& lambda, int n) {
    detail::require_ribbon_size(n);
    auto [lo, hi] = slot_window(lambda, n);
    auto maya = MayaSequence::of(lambda, lambda.length() + n);
    std::vector<RibbonSlot> out;
    for (int i = lo; i <= hi; ++i) {
        bool head = maya.contains(i);
        bool tail = maya.contains(i - n);
        if (tail && !head)
            out.push_back({i, SlotKind::add, maya.count_between(i - n, i)});
        else if (head && !tail)
            out.push_back({i, SlotKind::remove, maya.count_between(i - n, i)});
    }
    return out;
}

inline bool is_core(const Partition& lambda, int n) {
    auto slots = ribbon_slots(lambda, n);
    return std::none_of(slots.begin(), slots.end(), [](const RibbonSlot& s) { return s.kind == SlotKind::remove; });
}

/// n-core, n-quotient and offsets.
///
/// Runner r of the abacus holds the beads at positions n*y + r. Its charge
/// c_r fixes the offset s_r = n*c_r + r, which is the first empty position of
/// runner r once every bead is pushed down; with this normalization the core
/// itself has the empty quotient and adding a box on diagonal k of
/// quotient[r] is the n-ribbon move on diagonal n*k + s_r.
struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;
    std::vector<int> offsets;
    friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

namespace detail {
inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

/// Reassembles a partition from per-runner charges and runner partitions.
inline Partition assemble_abacus(const std::vector<int>& charges, const std::vector<Partition>& runners, int n) {
    int depth = 1;
    for (int r = 0; r < n; ++r)
        depth = std::max(depth, runners[static_cast<std::size_t>(r)].length() + std::abs(charges[static_cast<std::size_t>(r)]) + 1);
    std::vector<int> beads;
    for (int r = 0; r < n; ++r) {
        const auto& alpha = runners[static_cast<std::size_t>(r)];
        int c = charges[static_cast<std::size_t>(r)];
        for (int k = 1;; ++k) {
            int y = alpha[k] - k + c;
            if (y < -depth) break;
            beads.push_back(n * y + r);
        }
    }
    auto maya = MayaSequence::from_beads(std::move(beads), -n * depth);
    return maya.to_partition();
}
}  // namespace detail

inline CoreQuotient core_and_quotient(const Partition& lambda, int n) {
    detail::require_ribbon_size(n);
    int blocks = (lambda.length() + n - 1) / n;
    auto maya = MayaSequence::of(lambda, blocks * n);
    int depth = blocks;  // runner floor is -depth
    std::vector<std::vector<int>> runner_beads(static_cast<std::size_t>(n));
    for (int x : maya.beads()) {
        int r = ((x % n) + n) % n;
        runner_beads[static_cast<std::size_t>(r)].push_back(detail::floor_div(x - r, n));
    }
    CoreQuotient out;
    std::vector<int> charges(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        auto& ys = runner_beads[static_cast<std::size_t>(r)];  // already decreasing
        int c = static_cast<int>(ys.size()) - depth;
        charges[static_cast<std::size_t>(r)] = c;
        std::vector<int> parts;
        for (std::size_t k = 0; k < ys.size(); ++k) {
            int part = ys[k] + static_cast<int>(k) + 1 - c;
            if (part > 0) parts.push_back(part);
        }
        out.quotient.emplace_back(std::move(parts));
        out.offsets.push_back(n * c + r);
    }
    out.core = detail::assemble_abacus(charges, std::vector<Partition>(static_cast<std::size_t>(n)), n);
    return out;
}

/// Inverse of core_and_quotient. Throws if core is not an n-core or the
/// quotient does not have n entries.
inline Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int n) {
    detail::require_ribbon_size(n);
    if (static_cast<int>(quotient.size()) != n)
        throw std::invalid_argument("quotient must have exactly n = " + std::to_string(n) + " entries");
    if (!is_core(core, n))
        throw std::invalid_argument("partition " + core.to_string() + " is not an " + std::to_string(n) + "-core");
    auto cq = core_and_quotient(core, n);
    std::vector<int> charges;
    for (int r = 0; r < n; ++r) charges.push_back((cq.offsets[static_cast<std::size_t>(r)] - r) / n);
    return detail::assemble_abacus(charges, quotient, n);
}

}  // namespace ribbon
