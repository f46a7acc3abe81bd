#pragma once

#include "lisrc/reconfig.hpp"
#include "lisrc/sequence.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lisrc {

// Exhaustive ground truth for small sequences. Everything here is
// exponential in n and guarded by a size bound.

inline constexpr std::size_t kDefaultOracleBound = 16;

enum class OracleMode {
    Maximum, // I and J must be maximum feasible sets
    General, // any two feasible sets of equal size
};

/// Every feasible set of the given size, in lexicographic order.
/// Throws TooLarge if n exceeds `bound`.
std::vector<IndexSet> enumerate_feasible(const Sequence& seq, std::size_t size,
                                         std::size_t bound = kDefaultOracleBound);

/// Token-jumping graph over equal-size sets: two sets are adjacent iff their
/// symmetric difference has exactly two elements.
struct ReconfGraph {
    std::vector<IndexSet> nodes;
    std::vector<std::pair<int, int>> edges; // (a, b) with a < b, sorted
    std::vector<std::vector<int>> adjacency;

    std::optional<int> find(std::span<const Index> s) const;

    /// Component id per node, numbered in order of first appearance.
    std::vector<int> components() const;

    /// Node ids of a shortest path from `from` to `to`, both inclusive.
    std::optional<std::vector<int>> shortest_path(int from, int to) const;
};

/// Throws SizeMismatch unless all sets share one cardinality.
ReconfGraph build_reconfig_graph(std::span<const IndexSet> sets);

/// Graph over all feasible sets of size |i| (mode General) or all maximum
/// feasible sets (mode Maximum), after validating i and j for that mode.
ReconfGraph oracle_graph(const Sequence& seq, std::span<const Index> i, std::span<const Index> j, OracleMode mode,
                         std::size_t bound = kDefaultOracleBound);

bool oracle_decide(const Sequence& seq, std::span<const Index> i, std::span<const Index> j,
                   OracleMode mode = OracleMode::Maximum, std::size_t bound = kDefaultOracleBound);

std::optional<ReconfSequence> oracle_shortest(const Sequence& seq, std::span<const Index> i,
                                              std::span<const Index> j, OracleMode mode = OracleMode::Maximum,
                                              std::size_t bound = kDefaultOracleBound);

/// The single step turning node a into node b (adjacent nodes only).
SwapStep step_between(std::span<const Index> a, std::span<const Index> b);

std::string to_dot(const ReconfGraph& g);

} // namespace lisrc
