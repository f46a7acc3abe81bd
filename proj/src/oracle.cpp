#include "lisrc/oracle.hpp"

#include "lisrc/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace lisrc {

namespace {

void check_bound(const Sequence& seq, std::size_t bound)
{
    if (seq.size() > bound)
        throw Error(Errc::TooLarge, "sequence length " + std::to_string(seq.size()) +
                                        " exceeds the oracle bound " + std::to_string(bound));
}

void extend(const Sequence& seq, std::size_t size, IndexSet& cur, std::vector<IndexSet>& out)
{
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    const auto n = static_cast<Index>(seq.size());
    const std::size_t missing = size - cur.size();
    const Index first = cur.empty() ? 1 : cur.back() + 1;
    for (Index i = first; i + static_cast<Index>(missing) - 1 <= n; ++i) {
        if (!cur.empty() && seq.rank(cur.back()) > seq.rank(i))
            continue;
        cur.push_back(i);
        extend(seq, size, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IndexSet> enumerate_feasible(const Sequence& seq, std::size_t size, std::size_t bound)
{
    check_bound(seq, bound);
    std::vector<IndexSet> out;
    if (size > seq.size())
        return out;
    IndexSet cur;
    extend(seq, size, cur, out);
    return out;
}

std::optional<int> ReconfGraph::find(std::span<const Index> s) const
{
    IndexSet key = sorted_set(s);
    auto it = std::lower_bound(nodes.begin(), nodes.end(), key);
    if (it == nodes.end() || *it != key)
        return std::nullopt;
    return static_cast<int>(it - nodes.begin());
}

std::vector<int> ReconfGraph::components() const
{
    std::vector<int> comp(nodes.size(), -1);
    int next = 0;
    for (std::size_t root = 0; root < nodes.size(); ++root) {
        if (comp[root] != -1)
            continue;
        comp[root] = next;
        std::vector<int> stack{static_cast<int>(root)};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adjacency[u])
                if (comp[v] == -1) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

std::optional<std::vector<int>> ReconfGraph::shortest_path(int from, int to) const
{
    std::vector<int> parent(nodes.size(), -1);
    parent[from] = from;
    std::queue<int> queue;
    queue.push(from);
    while (!queue.empty() && parent[to] == -1) {
        int u = queue.front();
        queue.pop();
        for (int v : adjacency[u])
            if (parent[v] == -1) {
                parent[v] = u;
                queue.push(v);
            }
    }
    if (parent[to] == -1)
        return std::nullopt;
    std::vector<int> path{to};
    while (path.back() != from)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

ReconfGraph build_reconfig_graph(std::span<const IndexSet> sets)
{
    ReconfGraph g;
    for (const IndexSet& s : sets) {
        if (!g.nodes.empty() && s.size() != g.nodes.front().size())
            throw Error(Errc::SizeMismatch, "reconfiguration graph nodes must share one cardinality");
        g.nodes.push_back(sorted_set(s));
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
    g.adjacency.assign(g.nodes.size(), {});

    std::vector<Index> universe;
    for (const IndexSet& s : g.nodes)
        universe.insert(universe.end(), s.begin(), s.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    for (std::size_t a = 0; a < g.nodes.size(); ++a) {
        const IndexSet& s = g.nodes[a];
        for (Index out : s)
            for (Index in : universe) {
                if (std::binary_search(s.begin(), s.end(), in))
                    continue;
                auto b = g.find(apply_step(s, SwapStep{out, in}));
                if (b && static_cast<std::size_t>(*b) > a)
                    g.edges.emplace_back(static_cast<int>(a), *b);
            }
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (auto [a, b] : g.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    for (auto& nb : g.adjacency)
        std::sort(nb.begin(), nb.end());
    return g;
}

ReconfGraph oracle_graph(const Sequence& seq, std::span<const Index> i, std::span<const Index> j, OracleMode mode,
                         std::size_t bound)
{
    check_bound(seq, bound);
    if (mode == OracleMode::Maximum) {
        require_maximum_pair(seq, lis_length(seq), i, j);
    } else {
        if (i.size() != j.size())
            throw Error(Errc::SizeMismatch,
                        "|I| = " + std::to_string(i.size()) + " differs from |J| = " + std::to_string(j.size()));
        for (auto s : {i, j})
            if (auto bad = find_violation(seq, s))
                throw Error(Errc::Infeasible, format_set(sorted_set(s)) + " is not feasible: indices " +
                                                  std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                                                  " are not increasing");
    }
    auto sets = enumerate_feasible(seq, i.size(), bound);
    return build_reconfig_graph(sets);
}

bool oracle_decide(const Sequence& seq, std::span<const Index> i, std::span<const Index> j, OracleMode mode,
                   std::size_t bound)
{
    ReconfGraph g = oracle_graph(seq, i, j, mode, bound);
    auto comp = g.components();
    return comp[*g.find(i)] == comp[*g.find(j)];
}

SwapStep step_between(std::span<const Index> a, std::span<const Index> b)
{
    SwapStep step{0, 0};
    for (Index x : a)
        if (std::find(b.begin(), b.end(), x) == b.end())
            step.remove = x;
    for (Index x : b)
        if (std::find(a.begin(), a.end(), x) == a.end())
            step.add = x;
    return step;
}

std::optional<ReconfSequence> oracle_shortest(const Sequence& seq, std::span<const Index> i,
                                              std::span<const Index> j, OracleMode mode, std::size_t bound)
{
    ReconfGraph g = oracle_graph(seq, i, j, mode, bound);
    auto path = g.shortest_path(*g.find(i), *g.find(j));
    if (!path)
        return std::nullopt;
    ReconfSequence rs{sorted_set(i), {}};
    for (std::size_t p = 1; p < path->size(); ++p)
        rs.steps.push_back(step_between(g.nodes[(*path)[p - 1]], g.nodes[(*path)[p]]));
    return rs;
}

std::string to_dot(const ReconfGraph& g)
{
    std::ostringstream os;
    os << "graph reconfiguration {\n";
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        os << "  " << v << " [label=\"" << format_set(g.nodes[v]) << "\"];\n";
    for (auto [a, b] : g.edges)
        os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace lisrc
