#pragma once

#include "lisrc/piles.hpp"
#include "lisrc/reconfig.hpp"
#include "lisrc/sequence.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lisrc {

/// Inversion graph of a sequence: {i, j} with i < j is an edge iff a_i > a_j.
/// Vertices are 1..n; independent sets are exactly the feasible sets.
class PermutationGraph {
public:
    PermutationGraph() = default;
    explicit PermutationGraph(std::size_t n) : adjacency_(n + 1) {}

    std::size_t n() const noexcept { return adjacency_.empty() ? 0 : adjacency_.size() - 1; }
    const std::vector<Index>& neighbours(Index v) const { return adjacency_.at(v); }
    bool adjacent(Index u, Index v) const;
    std::size_t edge_count() const;

    /// Edges (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<Index, Index>> edges() const;

    friend PermutationGraph build_graph(const Sequence& seq);

private:
    std::vector<std::vector<Index>> adjacency_;
};

PermutationGraph build_graph(const Sequence& seq);

struct TwoColoring {
    /// side[v] in {0, 1} for v in 1..n (side[0] unused); empty if not bipartite.
    std::optional<std::vector<int>> side;
    /// Odd cycle witnessing non-bipartiteness, starting at its vertex closest
    /// to the search root.
    std::vector<Index> odd_cycle;
};

TwoColoring two_coloring(const PermutationGraph& g);

/// A pile whose I-member and J-member differ.
struct MixedPile {
    int pile;
    Index i_elem;
    Index j_elem;

    bool operator==(const MixedPile&) const = default;
};

std::vector<MixedPile> mixed_piles(const Sequence& seq, const PileSystem& ps, std::span<const Index> i,
                                   std::span<const Index> j);

/// Two mixed piles whose four vertices induce a 4-cycle. Such a pair certifies
/// that I and J are not reconfigurable.
std::optional<std::pair<MixedPile, MixedPile>> find_forbidden_pair(const PermutationGraph& g,
                                                                    std::span<const MixedPile> mixed);

struct ShortestResult {
    enum class Status { Found, NoSequence, NotBipartite };

    Status status;
    std::optional<ReconfSequence> sequence;                        // Found
    std::optional<std::pair<MixedPile, MixedPile>> forbidden_pair; // NoSequence
    std::vector<Index> odd_cycle;                                  // NotBipartite
};

/// Shortest reconfiguration between maximum feasible sets of a sequence whose
/// inversion graph is bipartite. When one exists it has exactly |I \ J| steps.
///
/// The leftmost mixed pile is resolved at each round, either by moving I onto
/// the J-member (preferred) or by moving J onto the I-member; J-side moves are
/// replayed in reverse at the end.
ShortestResult shortest_sequence(const Sequence& seq, std::span<const Index> i, std::span<const Index> j);

/// DOT rendering; vertices labelled "i (a_i)", edges in lexicographic order.
std::string to_dot(const PermutationGraph& g, const Sequence& seq);

} // namespace lisrc
