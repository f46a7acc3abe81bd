#include "lisrc/bipartite.hpp"

#include "lisrc/error.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace lisrc {

bool PermutationGraph::adjacent(Index u, Index v) const
{
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t PermutationGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& nb : adjacency_)
        twice += nb.size();
    return twice / 2;
}

std::vector<std::pair<Index, Index>> PermutationGraph::edges() const
{
    std::vector<std::pair<Index, Index>> out;
    for (Index u = 1; u <= static_cast<Index>(n()); ++u)
        for (Index v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

PermutationGraph build_graph(const Sequence& seq)
{
    const auto n = static_cast<Index>(seq.size());
    PermutationGraph g(seq.size());
    for (Index i = 1; i <= n; ++i)
        for (Index j = i + 1; j <= n; ++j)
            if (seq.rank(i) > seq.rank(j)) {
                g.adjacency_[i].push_back(j);
                g.adjacency_[j].push_back(i);
            }
    for (auto& nb : g.adjacency_)
        std::sort(nb.begin(), nb.end());
    return g;
}

TwoColoring two_coloring(const PermutationGraph& g)
{
    const auto n = static_cast<Index>(g.n());
    std::vector<int> side(n + 1, -1);
    std::vector<Index> parent(n + 1, 0);
    std::vector<int> level(n + 1, 0);

    for (Index root = 1; root <= n; ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::queue<Index> queue;
        queue.push(root);
        while (!queue.empty()) {
            Index u = queue.front();
            queue.pop();
            for (Index v : g.neighbours(u)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    level[v] = level[u] + 1;
                    queue.push(v);
                } else if (side[v] == side[u]) {
                    // climb both tree paths to their meeting point
                    std::vector<Index> up_u{u}, up_v{v};
                    Index a = u, b = v;
                    while (level[a] > level[b]) up_u.push_back(a = parent[a]);
                    while (level[b] > level[a]) up_v.push_back(b = parent[b]);
                    while (a != b) {
                        up_u.push_back(a = parent[a]);
                        up_v.push_back(b = parent[b]);
                    }
                    up_v.pop_back();
                    TwoColoring result;
                    result.odd_cycle.assign(up_u.rbegin(), up_u.rend());
                    result.odd_cycle.insert(result.odd_cycle.end(), up_v.begin(), up_v.end());
                    return result;
                }
            }
        }
    }
    side[0] = 0;
    return TwoColoring{std::move(side), {}};
}

std::vector<MixedPile> mixed_piles(const Sequence& seq, const PileSystem& ps, std::span<const Index> i_in,
                                   std::span<const Index> j_in)
{
    require_maximum_pair(seq, ps.k(), i_in, j_in);
    IndexSet i = sorted_set(i_in);
    IndexSet j = sorted_set(j_in);
    std::vector<MixedPile> out;
    for (int t = 1; t <= ps.k(); ++t)
        if (i[t - 1] != j[t - 1])
            out.push_back(MixedPile{t, i[t - 1], j[t - 1]});
    return out;
}

namespace {

bool induces_four_cycle(const PermutationGraph& g, const MixedPile& p, const MixedPile& q)
{
    const Index v[4] = {p.i_elem, p.j_elem, q.i_elem, q.j_elem};
    int degree[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (g.adjacent(v[a], v[b])) {
                ++edges;
                ++degree[a];
                ++degree[b];
            }
    return edges == 4 && std::all_of(std::begin(degree), std::end(degree), [](int d) { return d == 2; });
}

} // namespace

std::optional<std::pair<MixedPile, MixedPile>> find_forbidden_pair(const PermutationGraph& g,
                                                                    std::span<const MixedPile> mixed)
{
    for (std::size_t a = 0; a < mixed.size(); ++a)
        for (std::size_t b = a + 1; b < mixed.size(); ++b)
            if (induces_four_cycle(g, mixed[a], mixed[b]))
                return std::pair{mixed[a], mixed[b]};
    return std::nullopt;
}

ShortestResult shortest_sequence(const Sequence& seq, std::span<const Index> i_in, std::span<const Index> j_in)
{
    const PileSystem ps = build_piles(seq);
    require_maximum_pair(seq, ps.k(), i_in, j_in);

    const PermutationGraph g = build_graph(seq);
    TwoColoring coloring = two_coloring(g);
    if (!coloring.side)
        return ShortestResult{ShortestResult::Status::NotBipartite, std::nullopt, std::nullopt,
                              std::move(coloring.odd_cycle)};

    IndexSet cur_i = sorted_set(i_in);
    IndexSet cur_j = sorted_set(j_in);
    std::vector<MixedPile> mixed = mixed_piles(seq, ps, cur_i, cur_j);
    if (auto pair = find_forbidden_pair(g, mixed))
        return ShortestResult{ShortestResult::Status::NoSequence, std::nullopt, pair, {}};

    ReconfSequence forward{cur_i, {}};
    std::vector<SwapStep> backward;
    while (!mixed.empty()) {
        const MixedPile& left = mixed.front();
        IndexSet next_i = apply_step(cur_i, SwapStep{left.i_elem, left.j_elem});
        if (is_feasible(seq, next_i)) {
            forward.steps.push_back(SwapStep{left.i_elem, left.j_elem});
            cur_i = std::move(next_i);
        } else {
            IndexSet next_j = apply_step(cur_j, SwapStep{left.j_elem, left.i_elem});
            if (!is_feasible(seq, next_j))
                throw std::logic_error("neither swap on the leftmost mixed pile is feasible");
            backward.push_back(SwapStep{left.j_elem, left.i_elem});
            cur_j = std::move(next_j);
        }
        mixed.erase(mixed.begin());
        assert(!find_forbidden_pair(g, mixed_piles(seq, ps, cur_i, cur_j)).has_value());
    }
    assert(cur_i == cur_j);
    for (auto it = backward.rbegin(); it != backward.rend(); ++it)
        forward.steps.push_back(SwapStep{it->add, it->remove});
    return ShortestResult{ShortestResult::Status::Found, std::move(forward), std::nullopt, {}};
}

std::string to_dot(const PermutationGraph& g, const Sequence& seq)
{
    std::ostringstream os;
    os << "graph G_A {\n";
    for (Index v = 1; v <= static_cast<Index>(g.n()); ++v)
        os << "  " << v << " [label=\"" << v << " (" << seq.raw_at(v) << ")\"];\n";
    for (auto [u, v] : g.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace lisrc
