#include "lisrc/piles.hpp"

#include "lisrc/error.hpp"

#include <algorithm>
#include <cassert>

namespace lisrc {

PileCoord PileSystem::coord(Index i) const
{
    if (i < 0 || static_cast<std::size_t>(i) >= coord_.size())
        throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " has no pile");
    return coord_[i];
}

Index PileSystem::blocker(Index i) const
{
    if (i < 1 || static_cast<std::size_t>(i) >= blocker_.size())
        throw Error(Errc::IndexOutOfRange, "index " + std::to_string(i) + " has no blocker");
    return blocker_[i];
}

std::size_t placement_pile(std::span<const int> tops, int v)
{
    return static_cast<std::size_t>(std::upper_bound(tops.begin(), tops.end(), v) - tops.begin());
}

PileSystem build_piles(const Sequence& seq)
{
    const std::size_t n = seq.size();
    PileSystem ps;
    ps.piles_.push_back({PileEntry{0, 0}});
    ps.coord_.assign(n + 1, PileCoord{0, 0});
    ps.blocker_.assign(n + 1, 0);

    std::vector<int> tops{0};
    std::vector<Index> top_index{0};
    for (Index i = 1; i <= static_cast<Index>(n); ++i) {
        int v = seq.perm()[i - 1];
        std::size_t t = placement_pile(tops, v);
        assert(t >= 1);
        if (t == tops.size()) {
            ps.piles_.emplace_back();
            tops.push_back(v);
            top_index.push_back(i);
        }
        ps.blocker_[i] = top_index[t - 1];
        ps.coord_[i] = PileCoord{static_cast<int>(t), static_cast<int>(ps.piles_[t].size())};
        ps.piles_[t].push_back(PileEntry{i, v});
        tops[t] = v;
        top_index[t] = i;
        assert(std::is_sorted(tops.begin(), tops.end()) &&
               std::adjacent_find(tops.begin(), tops.end()) == tops.end());
    }
    return ps;
}

IndexSet extract_canonical_max(const PileSystem& ps)
{
    IndexSet out;
    if (ps.k() == 0)
        return out;
    for (Index i = ps.pile(ps.k()).front().index; i != 0; i = ps.blocker(i))
        out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

PileCoord pile_coord(const PileSystem& ps, Index i)
{
    return ps.coord(i);
}

} // namespace lisrc
