#pragma once

#include "lisrc/sequence.hpp"

#include <span>
#include <vector>

namespace lisrc {

struct PileEntry {
    Index index;
    int value; // rank; the sentinel has value 0

    bool operator==(const PileEntry&) const = default;
};

struct PileCoord {
    int pile;
    int depth; // 0-based from the bottom

    bool operator==(const PileCoord&) const = default;
};

using Pile = std::vector<PileEntry>;

/// Result of patience sorting the sequence with a sentinel a_0 = 0 prepended.
///
/// Pile 0 holds only the sentinel. Every other pile is listed bottom to top;
/// along a pile indices increase and values decrease, so each pile is an
/// antichain of ≼. The number of non-sentinel piles equals the LIS length,
/// and every maximum feasible set takes exactly one element from each of
/// them, in pile order.
class PileSystem {
public:
    const std::vector<Pile>& piles() const noexcept { return piles_; }
    const Pile& pile(int t) const { return piles_.at(t); }

    /// Id of the last nonempty pile.
    int k() const noexcept { return static_cast<int>(piles_.size()) - 1; }
    std::size_t n() const noexcept { return coord_.size() - 1; }

    PileCoord coord(Index i) const;

    /// Top of the previous pile at the moment a_i was placed. Defined for i >= 1.
    Index blocker(Index i) const;

    friend PileSystem build_piles(const Sequence& seq);

private:
    std::vector<Pile> piles_;
    std::vector<PileCoord> coord_;
    std::vector<Index> blocker_;
};

/// Leftmost pile whose top exceeds v, or tops.size() if none does.
/// tops must be strictly increasing.
std::size_t placement_pile(std::span<const int> tops, int v);

PileSystem build_piles(const Sequence& seq);

/// Maximum feasible set read off the blocker chain that starts at the bottom
/// entry of the last pile.
IndexSet extract_canonical_max(const PileSystem& ps);

PileCoord pile_coord(const PileSystem& ps, Index i);

} // namespace lisrc
