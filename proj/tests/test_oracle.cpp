#include "lisrc/bipartite.hpp"
#include "lisrc/error.hpp"
#include "lisrc/oracle.hpp"
#include "support/brute.hpp"

#include <doctest.h>

using namespace lisrc;

TEST_CASE("enumerate_feasible")
{
    Sequence no = normalize({7, 8, 5, 6});
    CHECK(enumerate_feasible(no, 2) == std::vector<IndexSet>{{1, 2}, {3, 4}});
    CHECK(enumerate_feasible(no, 0) == std::vector<IndexSet>{{}});
    CHECK(enumerate_feasible(no, 5).empty());

    Sequence seven = normalize({15, 11, 16, 13, 17, 12, 14});
    CHECK(enumerate_feasible(seven, 3) ==
          std::vector<IndexSet>{{1, 3, 5}, {2, 3, 5}, {2, 4, 5}, {2, 4, 7}, {2, 6, 7}});

    std::mt19937_64 rng(1);
    try {
        enumerate_feasible(normalize(brute::random_perm(17, rng)), 3);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
    CHECK_NOTHROW(enumerate_feasible(normalize({3, 2, 1}), 1, 3));
    CHECK_THROWS_AS(enumerate_feasible(normalize({4, 3, 2, 1}), 1, 3), Error);
}

TEST_CASE("enumerate_feasible matches subset enumeration")
{
    std::mt19937_64 rng(2);
    for (int round = 0; round < 100; ++round) {
        auto raw = brute::random_values(round % 12, rng);
        Sequence seq = normalize(raw);
        std::size_t size = round % 5;
        CHECK(enumerate_feasible(seq, size) == brute::increasing_sets(raw, size));
    }
}

TEST_CASE("build_reconfig_graph")
{
    Sequence no = normalize({7, 8, 5, 6});
    ReconfGraph g = build_reconfig_graph(enumerate_feasible(no, 2));
    CHECK(g.nodes.size() == 2);
    CHECK(g.edges.empty());

    ReconfGraph single = build_reconfig_graph(std::vector<IndexSet>{{1, 2}});
    CHECK(single.edges.empty());

    Sequence seven = normalize({15, 11, 16, 13, 17, 12, 14});
    ReconfGraph path = build_reconfig_graph(enumerate_feasible(seven, 3));
    CHECK(path.nodes.size() == 5);
    auto comp = path.components();
    CHECK(std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; }));
    auto p = path.shortest_path(*path.find(IndexSet{1, 3, 5}), *path.find(IndexSet{2, 6, 7}));
    REQUIRE(p);
    CHECK(p->size() == 5);

    CHECK_THROWS_AS(build_reconfig_graph(std::vector<IndexSet>{{1}, {1, 2}}), Error);
}

TEST_CASE("build_reconfig_graph edges are exactly symmetric difference two")
{
    std::mt19937_64 rng(4);
    for (int round = 0; round < 60; ++round) {
        Sequence seq = normalize(brute::random_perm(3 + round % 8, rng));
        auto sets = enumerate_feasible(seq, 1 + round % 3);
        ReconfGraph g = build_reconfig_graph(sets);
        for (std::size_t a = 0; a < g.nodes.size(); ++a)
            for (std::size_t b = a + 1; b < g.nodes.size(); ++b) {
                IndexSet diff;
                std::set_symmetric_difference(g.nodes[a].begin(), g.nodes[a].end(), g.nodes[b].begin(),
                                              g.nodes[b].end(), std::back_inserter(diff));
                bool edge = std::binary_search(g.edges.begin(), g.edges.end(),
                                               std::pair<int, int>{static_cast<int>(a), static_cast<int>(b)});
                CHECK(edge == (diff.size() == 2));
            }
    }
}

TEST_CASE("oracle_decide and oracle_shortest")
{
    Sequence no = normalize({7, 8, 5, 6});
    CHECK_FALSE(oracle_decide(no, IndexSet{1, 2}, IndexSet{3, 4}));
    CHECK_FALSE(oracle_decide(no, IndexSet{1, 2}, IndexSet{3, 4}, OracleMode::General));
    CHECK_FALSE(oracle_shortest(no, IndexSet{1, 2}, IndexSet{3, 4}));

    auto same = oracle_shortest(no, IndexSet{1, 2}, IndexSet{1, 2});
    REQUIRE(same);
    CHECK(same->length() == 0);

    Sequence seven = normalize({15, 11, 16, 13, 17, 12, 14});
    CHECK(oracle_decide(seven, IndexSet{1, 3, 5}, IndexSet{2, 6, 7}));
    auto four = oracle_shortest(seven, IndexSet{1, 3, 5}, IndexSet{2, 6, 7});
    REQUIRE(four);
    CHECK(four->length() == 4);
    CHECK(is_valid_reconfiguration(seven, *four, IndexSet{2, 6, 7}));
}

TEST_CASE("oracle modes")
{
    Sequence seq = normalize({1, 3, 2, 4});
    // {1} and {4} are not maximum; in general mode singletons always connect
    CHECK_THROWS_AS(oracle_decide(seq, IndexSet{1}, IndexSet{4}), Error);
    CHECK(oracle_decide(seq, IndexSet{1}, IndexSet{4}, OracleMode::General));
    auto two = oracle_shortest(seq, IndexSet{1, 2}, IndexSet{3, 4}, OracleMode::General);
    REQUIRE(two);
    CHECK(two->length() == 2);

    try {
        oracle_decide(seq, IndexSet{2, 3}, IndexSet{1, 4}, OracleMode::General);
        FAIL("expected Infeasible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Infeasible);
    }
    try {
        oracle_decide(seq, IndexSet{1}, IndexSet{1, 4}, OracleMode::General);
        FAIL("expected SizeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SizeMismatch);
    }
}

TEST_CASE("maximum-set swaps always join adjacent vertices of the permutation graph")
{
    std::mt19937_64 rng(6);
    for (int round = 0; round < 200; ++round) {
        Sequence seq = normalize(brute::random_perm(2 + round % 9, rng));
        PermutationGraph pg = build_graph(seq);
        PileSystem ps = build_piles(seq);
        ReconfGraph g = build_reconfig_graph(enumerate_feasible(seq, static_cast<std::size_t>(ps.k())));
        for (auto [a, b] : g.edges) {
            SwapStep s = step_between(g.nodes[a], g.nodes[b]);
            CHECK(pg.adjacent(s.remove, s.add));
            CHECK(ps.coord(s.remove).pile == ps.coord(s.add).pile);
        }
        for (const IndexSet& s : g.nodes) {
            for (std::size_t t = 1; t <= s.size(); ++t)
                CHECK(ps.coord(s[t - 1]).pile == static_cast<int>(t));
        }
    }
}

TEST_CASE("DOT export of the reconfiguration graph")
{
    Sequence seven = normalize({15, 11, 16, 13, 17, 12, 14});
    std::string dot = to_dot(build_reconfig_graph(enumerate_feasible(seven, 3)));
    CHECK(dot == "graph reconfiguration {\n"
                 "  0 [label=\"{1,3,5}\"];\n"
                 "  1 [label=\"{2,3,5}\"];\n"
                 "  2 [label=\"{2,4,5}\"];\n"
                 "  3 [label=\"{2,4,7}\"];\n"
                 "  4 [label=\"{2,6,7}\"];\n"
                 "  0 -- 1;\n"
                 "  1 -- 2;\n"
                 "  2 -- 3;\n"
                 "  3 -- 4;\n"
                 "}\n");
}
