#pragma once

#include "lisrc/piles.hpp"
#include "lisrc/sequence.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lisrc {

/// One reconfiguration move: drop `remove`, insert `add`.
struct SwapStep {
    Index remove;
    Index add;

    bool operator==(const SwapStep&) const = default;
};

struct ReconfSequence {
    IndexSet start;
    std::vector<SwapStep> steps;

    std::size_t length() const noexcept { return steps.size(); }

    /// start, followed by the set after each step.
    std::vector<IndexSet> sets() const;
    IndexSet final_set() const;
};

/// Applies a step to a sorted set. Throws InvalidArgument if `remove` is not
/// a member or `add` already is.
IndexSet apply_step(std::span<const Index> s, SwapStep step);

/// True iff every set along `rs` is a maximum feasible set, each step swaps
/// a member for a non-member, and the walk ends at `target`.
bool is_valid_reconfiguration(const Sequence& seq, const ReconfSequence& rs, std::span<const Index> target);

/// All moves S -> S' with S' ◁ S: replace the member v of some pile by an
/// entry u strictly below it in the same pile, keeping the set feasible.
/// Ordered by ascending pile id, then deepest replacement first.
std::vector<SwapStep> downward_moves(const Sequence& seq, const PileSystem& ps, std::span<const Index> s);

struct MinimalResult {
    IndexSet minimal;
    std::vector<SwapStep> trace;
};

/// Greedy descent to the unique ◁-minimal set below s. Always takes the first
/// move downward_moves would list, so the trace is reproducible.
MinimalResult minimal_set(const Sequence& seq, const PileSystem& ps, std::span<const Index> s);

/// Picks which of the currently available downward moves to apply.
using MoveChooser = std::function<std::size_t(std::span<const SwapStep>)>;

/// Reference descent that recomputes downward_moves at each step and lets
/// `choose` pick one. Quadratic; intended for cross-checking.
MinimalResult minimal_set(const Sequence& seq, const PileSystem& ps, std::span<const Index> s,
                          const MoveChooser& choose);

struct Decision {
    bool reconfigurable;
    MinimalResult from_i;
    MinimalResult from_j;
};

/// Canonicalizes both sets and compares their ◁-minimal representatives.
/// Throws SizeMismatch or NotMaximum when the inputs are unsuitable.
Decision analyze(const Sequence& seq, const PileSystem& ps, std::span<const Index> i, std::span<const Index> j);

bool decide(const Sequence& seq, std::span<const Index> i, std::span<const Index> j);

/// A reconfiguration sequence from i to j, or nullopt if none exists.
/// Follows i's descent until it meets j's descent (at the latest in the
/// shared minimal set), then retraces j's descent in reverse. Not
/// necessarily shortest.
std::optional<ReconfSequence> witness(const Sequence& seq, std::span<const Index> i, std::span<const Index> j);
std::optional<ReconfSequence> witness(const Decision& decision, std::span<const Index> i);

/// Throws SizeMismatch / NotMaximum / Infeasible / IndexOutOfRange as appropriate.
void require_maximum_pair(const Sequence& seq, int lis, std::span<const Index> i, std::span<const Index> j);
void require_maximum(const Sequence& seq, int lis, std::span<const Index> s, const char* name);

} // namespace lisrc
