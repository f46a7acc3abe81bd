#pragma once

#include "lisrc/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace lisrc {

class PileSystem;

/// A sequence plus (optionally) the two sets to reconfigure between.
///
/// Text format, one item per line:
///   line 1  sequence values, whitespace separated
///   line 2  I as 1-based indices
///   line 3  J as 1-based indices
/// Blank lines and lines starting with '#' are ignored. Lines 2 and 3 may be
/// omitted together for commands that only look at the sequence.
struct Instance {
    Sequence seq;
    std::optional<IndexSet> i;
    std::optional<IndexSet> j;

    bool has_sets() const noexcept { return i.has_value() && j.has_value(); }
    bool operator==(const Instance&) const = default;
};

/// Throws ParseError (with line and column), DuplicateValue,
/// IndexOutOfRange or Infeasible.
Instance parse_instance(std::string_view text);

std::string format_instance(const Instance& inst);

/// Uniform integer in [0, bound). Implemented on raw engine output so that
/// results are identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random permutation of 1..n (Fisher-Yates on uniform_below).
std::vector<Value> random_permutation(std::size_t n, std::mt19937_64& rng);

/// Random maximum feasible set: a uniform member of the last pile, then
/// uniform predecessors pile by pile. Not uniform over all maximum sets.
IndexSet random_maximum_set(const Sequence& seq, const PileSystem& ps, std::mt19937_64& rng);

struct GenerateOptions {
    std::size_t n = 8;
    std::uint64_t seed = 0;
    bool bipartite = false;
    std::size_t oracle_bound = 16;
    std::size_t max_attempts = 100000;
};

/// Random instance: I is the canonical maximum set; J is uniform over all
/// maximum sets when n fits the oracle bound, else random_maximum_set.
/// With `bipartite`, permutations are rejection-sampled until the inversion
/// graph is 2-colourable (GenerationFailed after max_attempts).
Instance generate(const GenerateOptions& opts);

} // namespace lisrc
