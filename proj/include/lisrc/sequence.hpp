#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lisrc {

/// 1-based position into a sequence. Index 0 denotes the sentinel a_0 = 0.
using Index = int;

/// Sorted list of distinct indices.
using IndexSet = std::vector<Index>;

using Value = std::int64_t;

/// A sequence of distinct integers together with its rank-normalized form.
/// perm()[i - 1] is the rank (1..n) of raw()[i - 1].
class Sequence {
public:
    Sequence() = default;

    std::size_t size() const noexcept { return raw_.size(); }
    bool empty() const noexcept { return raw_.empty(); }

    const std::vector<Value>& raw() const noexcept { return raw_; }
    const std::vector<int>& perm() const noexcept { return perm_; }

    /// Rank of a_i; rank(0) is the sentinel value 0.
    int rank(Index i) const;
    Value raw_at(Index i) const;

    bool operator==(const Sequence& other) const { return raw_ == other.raw_; }

    friend Sequence normalize(std::span<const Value> raw);

private:
    std::vector<Value> raw_;
    std::vector<int> perm_;
};

/// Throws Error(DuplicateValue) if raw has repeated values.
Sequence normalize(std::span<const Value> raw);

inline Sequence normalize(std::initializer_list<Value> raw)
{
    return normalize(std::span<const Value>(raw.begin(), raw.size()));
}

/// i ≼ j  iff  i == j, or i < j and a_i < a_j. Indices may be 0 (sentinel).
bool precedes(const Sequence& seq, Index i, Index j);

/// First pair (in the sorted order of s) that breaks the increasing property,
/// or a repeated index. Throws IndexOutOfRange for indices outside [1, n].
std::optional<std::pair<Index, Index>> find_violation(const Sequence& seq, std::span<const Index> s);

bool is_feasible(const Sequence& seq, std::span<const Index> s);

/// Length of a longest increasing subsequence, O(n log n).
int lis_length(const Sequence& seq);

bool is_maximum_feasible(const Sequence& seq, std::span<const Index> s);
bool is_maximum_feasible(const Sequence& seq, std::span<const Index> s, int lis);

/// Sorted copy of s.
IndexSet sorted_set(std::span<const Index> s);

std::string format_set(std::span<const Index> s);

} // namespace lisrc
