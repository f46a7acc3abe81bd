#include "lisrc/instance.hpp"

#include "lisrc/bipartite.hpp"
#include "lisrc/error.hpp"
#include "lisrc/oracle.hpp"
#include "lisrc/piles.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace lisrc {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& msg)
{
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<Value> parse_integers(const Line& line)
{
    std::vector<Value> out;
    const std::string_view s = line.text;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == ',') {
            ++pos;
            continue;
        }
        Value v = 0;
        auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
        std::size_t stop = static_cast<std::size_t>(end - s.data());
        bool at_separator = stop == s.size() || s[stop] == ' ' || s[stop] == '\t' || s[stop] == '\r' || s[stop] == ',';
        if (ec == std::errc::result_out_of_range)
            parse_error(line.number, pos + 1, "integer out of range");
        if (ec != std::errc() || !at_separator)
            parse_error(line.number, pos + 1, "expected an integer");
        out.push_back(v);
        pos = stop;
    }
    return out;
}

IndexSet parse_set(const Line& line, std::size_t n, const char* name)
{
    IndexSet out;
    for (Value v : parse_integers(line)) {
        if (v < 1 || static_cast<std::uint64_t>(v) > n)
            throw Error(Errc::IndexOutOfRange, std::string(name) + " (line " + std::to_string(line.number) +
                                                   "): index " + std::to_string(v) + " outside [1, " +
                                                   std::to_string(n) + "]");
        out.push_back(static_cast<Index>(v));
    }
    std::sort(out.begin(), out.end());
    if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end())
        parse_error(line.number, 1, std::string(name) + " lists index " + std::to_string(*dup) + " twice");
    return out;
}

void check_feasible(const Sequence& seq, const IndexSet& s, const char* name)
{
    if (auto bad = find_violation(seq, s))
        throw Error(Errc::Infeasible, std::string(name) + " = " + format_set(s) + " is not feasible: a_" +
                                          std::to_string(bad->first) + " = " + std::to_string(seq.raw_at(bad->first)) +
                                          " and a_" + std::to_string(bad->second) + " = " +
                                          std::to_string(seq.raw_at(bad->second)) + " are not increasing");
}

} // namespace

Instance parse_instance(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#')
            lines.push_back(Line{number, line});
        if (nl == std::string_view::npos)
            break;
    }
    if (lines.empty())
        parse_error(1, 1, "missing sequence line");
    if (lines.size() == 2)
        parse_error(lines[1].number + 1, 1, "J line missing (I and J must be given together)");
    if (lines.size() > 3)
        parse_error(lines[3].number, 1, "unexpected extra line");

    Instance inst;
    std::vector<Value> raw = parse_integers(lines[0]);
    inst.seq = normalize(raw);
    if (lines.size() == 3) {
        inst.i = parse_set(lines[1], inst.seq.size(), "I");
        inst.j = parse_set(lines[2], inst.seq.size(), "J");
        check_feasible(inst.seq, *inst.i, "I");
        check_feasible(inst.seq, *inst.j, "J");
    }
    return inst;
}

std::string format_instance(const Instance& inst)
{
    std::ostringstream os;
    auto put = [&](const auto& values) {
        for (std::size_t k = 0; k < values.size(); ++k)
            os << (k ? " " : "") << values[k];
        os << '\n';
    };
    put(inst.seq.raw());
    if (inst.has_sets()) {
        put(*inst.i);
        put(*inst.j);
    }
    return os.str();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw Error(Errc::InvalidArgument, "uniform_below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

std::vector<Value> random_permutation(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Value> perm(n);
    for (std::size_t k = 0; k < n; ++k)
        perm[k] = static_cast<Value>(k) + 1;
    for (std::size_t k = n; k > 1; --k)
        std::swap(perm[k - 1], perm[uniform_below(rng, k)]);
    return perm;
}

IndexSet random_maximum_set(const Sequence& seq, const PileSystem& ps, std::mt19937_64& rng)
{
    IndexSet out;
    if (ps.k() == 0)
        return out;
    const Pile& last = ps.pile(ps.k());
    Index cur = last[uniform_below(rng, last.size())].index;
    out.push_back(cur);
    for (int t = ps.k() - 1; t >= 1; --t) {
        std::vector<Index> candidates;
        for (const PileEntry& e : ps.pile(t))
            if (e.index < cur && e.value < seq.rank(cur))
                candidates.push_back(e.index);
        // the blocker of cur always qualifies
        cur = candidates[uniform_below(rng, candidates.size())];
        out.push_back(cur);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Instance generate(const GenerateOptions& opts)
{
    if (opts.n < 1)
        throw Error(Errc::InvalidArgument, "generate needs n >= 1");
    std::mt19937_64 rng(opts.seed);

    std::vector<Value> perm;
    for (std::size_t attempt = 0;; ++attempt) {
        if (attempt == opts.max_attempts)
            throw Error(Errc::GenerationFailed, "no bipartite permutation of length " + std::to_string(opts.n) +
                                                    " found in " + std::to_string(opts.max_attempts) + " attempts");
        perm = random_permutation(opts.n, rng);
        if (!opts.bipartite || two_coloring(build_graph(normalize(perm))).side)
            break;
    }

    Instance inst;
    inst.seq = normalize(perm);
    const PileSystem ps = build_piles(inst.seq);
    inst.i = extract_canonical_max(ps);
    if (opts.n <= opts.oracle_bound) {
        auto all = enumerate_feasible(inst.seq, static_cast<std::size_t>(ps.k()), opts.oracle_bound);
        inst.j = all[uniform_below(rng, all.size())];
    } else {
        inst.j = random_maximum_set(inst.seq, ps, rng);
    }
    return inst;
}

} // namespace lisrc
