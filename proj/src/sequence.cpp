#include "lisrc/sequence.hpp"

#include "lisrc/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lisrc {

namespace {

void check_index(const Sequence& seq, Index i, bool allow_sentinel)
{
    Index lo = allow_sentinel ? 0 : 1;
    if (i < lo || static_cast<std::size_t>(i) > seq.size())
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(seq.size()) + "]");
}

} // namespace

int Sequence::rank(Index i) const
{
    if (i == 0)
        return 0;
    check_index(*this, i, false);
    return perm_[i - 1];
}

Value Sequence::raw_at(Index i) const
{
    check_index(*this, i, false);
    return raw_[i - 1];
}

Sequence normalize(std::span<const Value> raw)
{
    Sequence seq;
    seq.raw_.assign(raw.begin(), raw.end());

    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return raw[a] < raw[b]; });

    seq.perm_.assign(raw.size(), 0);
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && raw[order[r]] == raw[order[r - 1]])
            throw Error(Errc::DuplicateValue, "duplicate value " + std::to_string(raw[order[r]]) +
                                                  " at positions " + std::to_string(order[r - 1] + 1) +
                                                  " and " + std::to_string(order[r] + 1));
        seq.perm_[order[r]] = static_cast<int>(r) + 1;
    }
    return seq;
}

bool precedes(const Sequence& seq, Index i, Index j)
{
    check_index(seq, i, true);
    check_index(seq, j, true);
    return i == j || (i < j && seq.rank(i) < seq.rank(j));
}

std::optional<std::pair<Index, Index>> find_violation(const Sequence& seq, std::span<const Index> s)
{
    for (Index i : s)
        check_index(seq, i, false);
    IndexSet sorted = sorted_set(s);
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        Index a = sorted[k - 1];
        Index b = sorted[k];
        if (a == b || seq.rank(a) > seq.rank(b))
            return std::pair{a, b};
    }
    return std::nullopt;
}

bool is_feasible(const Sequence& seq, std::span<const Index> s)
{
    return !find_violation(seq, s).has_value();
}

int lis_length(const Sequence& seq)
{
    // tails[l] = smallest possible last value of an increasing subsequence of length l + 1
    std::vector<int> tails;
    for (int v : seq.perm()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

bool is_maximum_feasible(const Sequence& seq, std::span<const Index> s)
{
    return is_maximum_feasible(seq, s, lis_length(seq));
}

bool is_maximum_feasible(const Sequence& seq, std::span<const Index> s, int lis)
{
    return is_feasible(seq, s) && static_cast<int>(s.size()) == lis;
}

IndexSet sorted_set(std::span<const Index> s)
{
    IndexSet out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_set(std::span<const Index> s)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k)
        os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

} // namespace lisrc
