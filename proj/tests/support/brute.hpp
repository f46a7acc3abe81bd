#pragma once

// Test-only reference computations. These deliberately avoid the library's
// algorithms: everything is done by subset enumeration or pairwise comparison.

#include "lisrc/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace brute {

using lisrc::Index;
using lisrc::IndexSet;
using lisrc::Value;

inline bool increasing(const std::vector<Value>& a, const IndexSet& s)
{
    for (std::size_t k = 1; k < s.size(); ++k)
        if (!(s[k - 1] < s[k] && a[s[k - 1] - 1] < a[s[k] - 1]))
            return false;
    return true;
}

inline IndexSet from_mask(std::uint32_t mask, std::size_t n)
{
    IndexSet s;
    for (std::size_t b = 0; b < n; ++b)
        if (mask >> b & 1u)
            s.push_back(static_cast<Index>(b + 1));
    return s;
}

/// Longest increasing subsequence length over all 2^n subsets.
inline int lis(const std::vector<Value>& a)
{
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
        IndexSet s = from_mask(mask, a.size());
        if (increasing(a, s))
            best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

/// All increasing index sets of the given size, sorted lexicographically.
inline std::vector<IndexSet> increasing_sets(const std::vector<Value>& a, std::size_t size)
{
    std::vector<IndexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
        IndexSet s = from_mask(mask, a.size());
        if (s.size() == size && increasing(a, s))
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Rank of each value: one plus the number of smaller values.
inline std::vector<int> ranks(const std::vector<Value>& a)
{
    std::vector<int> r(a.size(), 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] < a[i])
                ++r[i];
    return r;
}

inline std::vector<Value> random_values(std::size_t n, std::mt19937_64& rng, Value lo = -1000, Value hi = 1000)
{
    std::uniform_int_distribution<Value> dist(lo, hi);
    std::vector<Value> out;
    while (out.size() < n) {
        Value v = dist(rng);
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    }
    return out;
}

inline std::vector<Value> random_perm(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Value> p(n);
    for (std::size_t k = 0; k < n; ++k)
        p[k] = static_cast<Value>(k + 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace brute
