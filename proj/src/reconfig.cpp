#include "lisrc/reconfig.hpp"

#include "lisrc/error.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace lisrc {

std::vector<IndexSet> ReconfSequence::sets() const
{
    std::vector<IndexSet> out{start};
    for (const SwapStep& step : steps)
        out.push_back(apply_step(out.back(), step));
    return out;
}

IndexSet ReconfSequence::final_set() const
{
    IndexSet cur = start;
    for (const SwapStep& step : steps)
        cur = apply_step(cur, step);
    return cur;
}

IndexSet apply_step(std::span<const Index> s, SwapStep step)
{
    IndexSet out(s.begin(), s.end());
    auto it = std::find(out.begin(), out.end(), step.remove);
    if (it == out.end())
        throw Error(Errc::InvalidArgument, "step removes " + std::to_string(step.remove) + " which is not in " +
                                               format_set(s));
    if (std::find(out.begin(), out.end(), step.add) != out.end())
        throw Error(Errc::InvalidArgument, "step adds " + std::to_string(step.add) + " which is already in " +
                                               format_set(s));
    *it = step.add;
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_reconfiguration(const Sequence& seq, const ReconfSequence& rs, std::span<const Index> target)
{
    const int lis = lis_length(seq);
    auto valid_index = [&](Index i) { return i >= 1 && static_cast<std::size_t>(i) <= seq.size(); };
    auto ok = [&](const IndexSet& s) {
        return std::all_of(s.begin(), s.end(), valid_index) && is_maximum_feasible(seq, s, lis);
    };
    IndexSet cur = sorted_set(rs.start);
    if (!ok(cur))
        return false;
    for (const SwapStep& step : rs.steps) {
        if (!valid_index(step.add) || !valid_index(step.remove))
            return false;
        if (!std::binary_search(cur.begin(), cur.end(), step.remove) ||
            std::binary_search(cur.begin(), cur.end(), step.add))
            return false;
        cur = apply_step(cur, step);
        if (!ok(cur))
            return false;
    }
    return cur == sorted_set(target);
}

namespace {

constexpr int kNoBound = std::numeric_limits<int>::max();

// Neighbours of pile t's member in a maximum set s (sorted, one per pile).
struct Neighbours {
    Index prev_index;
    int prev_value;
    Index next_index; // kNoBound when t is the last pile
    int next_value;
};

Neighbours neighbours(const Sequence& seq, std::span<const Index> s, int t)
{
    Neighbours nb{0, 0, kNoBound, kNoBound};
    if (t >= 2) {
        nb.prev_index = s[t - 2];
        nb.prev_value = seq.rank(nb.prev_index);
    }
    if (static_cast<std::size_t>(t) < s.size()) {
        nb.next_index = s[t];
        nb.next_value = seq.rank(nb.next_index);
    }
    return nb;
}

bool fits(const PileEntry& e, const Neighbours& nb)
{
    return e.index > nb.prev_index && e.value > nb.prev_value && e.index < nb.next_index &&
           e.value < nb.next_value;
}

// Along a pile, index grows and value shrinks with depth, so the depths that
// fit between two neighbours form an interval. Its lower end is the first
// depth satisfying both monotone lower-bound conditions.
int deepest_fit(const Pile& pile, const Neighbours& nb)
{
    auto it = std::partition_point(pile.begin(), pile.end(), [&](const PileEntry& e) {
        return !(e.index > nb.prev_index && e.value < nb.next_value);
    });
    return static_cast<int>(it - pile.begin());
}

void check_pile_alignment(const PileSystem& ps, std::span<const Index> s)
{
    for (std::size_t t = 1; t <= s.size(); ++t)
        if (ps.coord(s[t - 1]).pile != static_cast<int>(t))
            throw Error(Errc::InvalidArgument, "set " + format_set(s) + " does not match the pile system");
}

// Start of a descent, recovered by undoing its trace from the endpoint.
IndexSet apply_steps_backward(const MinimalResult& r)
{
    IndexSet cur = r.minimal;
    for (auto it = r.trace.rbegin(); it != r.trace.rend(); ++it)
        cur = apply_step(cur, SwapStep{it->add, it->remove});
    return cur;
}

} // namespace

void require_maximum(const Sequence& seq, int lis, std::span<const Index> s, const char* name)
{
    if (auto bad = find_violation(seq, s))
        throw Error(Errc::Infeasible, std::string(name) + " = " + format_set(sorted_set(s)) +
                                          " is not feasible: indices " + std::to_string(bad->first) + " and " +
                                          std::to_string(bad->second) + " are not increasing");
    if (static_cast<int>(s.size()) != lis)
        throw Error(Errc::NotMaximum, std::string(name) + " = " + format_set(sorted_set(s)) + " has size " +
                                          std::to_string(s.size()) + " but the longest increasing subsequence has length " +
                                          std::to_string(lis));
}

void require_maximum_pair(const Sequence& seq, int lis, std::span<const Index> i, std::span<const Index> j)
{
    if (i.size() != j.size())
        throw Error(Errc::SizeMismatch,
                    "|I| = " + std::to_string(i.size()) + " differs from |J| = " + std::to_string(j.size()));
    require_maximum(seq, lis, i, "I");
    require_maximum(seq, lis, j, "J");
}

std::vector<SwapStep> downward_moves(const Sequence& seq, const PileSystem& ps, std::span<const Index> s_in)
{
    IndexSet s = sorted_set(s_in);
    require_maximum(seq, ps.k(), s, "S");
    check_pile_alignment(ps, s);

    std::vector<SwapStep> moves;
    for (int t = 1; t <= ps.k(); ++t) {
        const Pile& pile = ps.pile(t);
        const Neighbours nb = neighbours(seq, s, t);
        const int depth = ps.coord(s[t - 1]).depth;
        for (int d = 0; d < depth; ++d)
            if (fits(pile[d], nb))
                moves.push_back(SwapStep{s[t - 1], pile[d].index});
    }
    return moves;
}

MinimalResult minimal_set(const Sequence& seq, const PileSystem& ps, std::span<const Index> s_in)
{
    MinimalResult result{sorted_set(s_in), {}};
    IndexSet& s = result.minimal;
    require_maximum(seq, ps.k(), s, "S");
    check_pile_alignment(ps, s);

    const int k = ps.k();
    std::vector<int> depth(k + 1, 0);
    for (int t = 1; t <= k; ++t)
        depth[t] = ps.coord(s[t - 1]).depth;

    auto target = [&](int t) { return deepest_fit(ps.pile(t), neighbours(seq, s, t)); };

    // Piles that currently admit a downward move; the smallest id is served first.
    std::set<int> active;
    for (int t = 1; t <= k; ++t)
        if (target(t) < depth[t])
            active.insert(t);

    while (!active.empty()) {
        const int t = *active.begin();
        const int d = target(t);
        assert(d < depth[t]);
        const Index u = ps.pile(t)[d].index;
        result.trace.push_back(SwapStep{s[t - 1], u});
        s[t - 1] = u;
        depth[t] = d;
        for (int r = std::max(1, t - 1); r <= std::min(k, t + 1); ++r) {
            if (target(r) < depth[r])
                active.insert(r);
            else
                active.erase(r);
        }
    }
    return result;
}

MinimalResult minimal_set(const Sequence& seq, const PileSystem& ps, std::span<const Index> s_in,
                          const MoveChooser& choose)
{
    MinimalResult result{sorted_set(s_in), {}};
    for (;;) {
        std::vector<SwapStep> moves = downward_moves(seq, ps, result.minimal);
        if (moves.empty())
            break;
        std::size_t pick = choose(moves);
        if (pick >= moves.size())
            throw Error(Errc::InvalidArgument, "move chooser returned an out-of-range choice");
        result.trace.push_back(moves[pick]);
        result.minimal = apply_step(result.minimal, moves[pick]);
    }
    return result;
}

Decision analyze(const Sequence& seq, const PileSystem& ps, std::span<const Index> i, std::span<const Index> j)
{
    require_maximum_pair(seq, ps.k(), i, j);
    Decision d{false, minimal_set(seq, ps, i), minimal_set(seq, ps, j)};
    d.reconfigurable = d.from_i.minimal == d.from_j.minimal;
    return d;
}

bool decide(const Sequence& seq, std::span<const Index> i, std::span<const Index> j)
{
    return analyze(seq, build_piles(seq), i, j).reconfigurable;
}

std::optional<ReconfSequence> witness(const Decision& decision, std::span<const Index> i)
{
    if (!decision.reconfigurable)
        return std::nullopt;
    const std::vector<IndexSet> down_i = ReconfSequence{sorted_set(i), decision.from_i.trace}.sets();
    const std::vector<IndexSet> down_j =
        ReconfSequence{apply_steps_backward(decision.from_j), decision.from_j.trace}.sets();

    // Leave I's descent at the first set J's descent also visits, then climb
    // J's descent backwards from there.
    std::size_t p = 0, q = 0;
    for (p = 0; p < down_i.size(); ++p) {
        auto hit = std::find(down_j.begin(), down_j.end(), down_i[p]);
        if (hit != down_j.end()) {
            q = static_cast<std::size_t>(hit - down_j.begin());
            break;
        }
    }
    assert(p < down_i.size());

    ReconfSequence rs{sorted_set(i), {}};
    rs.steps.assign(decision.from_i.trace.begin(), decision.from_i.trace.begin() + static_cast<std::ptrdiff_t>(p));
    for (std::size_t k = q; k > 0; --k) {
        const SwapStep& s = decision.from_j.trace[k - 1];
        rs.steps.push_back(SwapStep{s.add, s.remove});
    }
    return rs;
}

std::optional<ReconfSequence> witness(const Sequence& seq, std::span<const Index> i, std::span<const Index> j)
{
    return witness(analyze(seq, build_piles(seq), i, j), i);
}

} // namespace lisrc
