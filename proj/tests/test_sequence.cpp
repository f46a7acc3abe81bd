#include "lisrc/error.hpp"
#include "lisrc/sequence.hpp"
#include "support/brute.hpp"

#include <doctest.h>

using namespace lisrc;

TEST_CASE("normalize ranks values")
{
    CHECK(normalize({1, 2, 3}).perm() == std::vector<int>{1, 2, 3});
    CHECK(normalize({7, 8, 5, 6}).perm() == std::vector<int>{3, 4, 1, 2});
    CHECK(normalize({15, 11, 16, 13, 17, 12, 14}).perm() == std::vector<int>{5, 1, 6, 3, 7, 2, 4});
    CHECK(normalize({-5, 100, 0}).perm() == std::vector<int>{1, 3, 2});
    CHECK(normalize({}).size() == 0);
}

TEST_CASE("normalize rejects duplicates")
{
    try {
        normalize({3, 1, 3});
        FAIL("expected DuplicateValue");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicateValue);
    }
}

TEST_CASE("normalize agrees with the pairwise-count rank oracle")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        auto raw = brute::random_values(1 + round % 15, rng);
        CHECK(normalize(raw).perm() == brute::ranks(raw));
    }
}

TEST_CASE("precedes")
{
    Sequence s = normalize({7, 8, 5, 6});
    CHECK(precedes(s, 1, 2));
    CHECK_FALSE(precedes(s, 1, 3));
    CHECK_FALSE(precedes(s, 2, 1));
    for (Index k = 0; k <= 4; ++k)
        CHECK(precedes(s, k, k));
    CHECK(precedes(s, 0, 3)); // sentinel precedes everything
    CHECK_THROWS_AS(precedes(s, 1, 5), Error);
    CHECK_THROWS_AS(precedes(s, -1, 2), Error);
}

TEST_CASE("is_feasible")
{
    Sequence s = normalize({7, 8, 5, 6});
    CHECK(is_feasible(s, IndexSet{1, 2}));
    CHECK(is_feasible(s, IndexSet{}));
    CHECK(is_feasible(s, IndexSet{2, 1})); // order of listing is irrelevant
    CHECK_FALSE(is_feasible(s, IndexSet{1, 3}));
    CHECK_FALSE(is_feasible(s, IndexSet{1, 1}));
    CHECK_THROWS_AS(is_feasible(s, IndexSet{0, 1}), Error);
    CHECK_THROWS_AS(is_feasible(s, IndexSet{5}), Error);

    auto bad = find_violation(s, IndexSet{1, 2, 3});
    REQUIRE(bad);
    CHECK(*bad == std::pair<Index, Index>{2, 3});
}

TEST_CASE("lis_length")
{
    CHECK(lis_length(normalize({1, 2, 3, 4, 5})) == 5);
    CHECK(lis_length(normalize({7, 8, 5, 6})) == 2);
    CHECK(lis_length(normalize({15, 11, 16, 13, 17, 12, 14})) == 3);
    CHECK(lis_length(normalize({5, 4, 3, 2, 1})) == 1);
    CHECK(lis_length(Sequence{}) == 0);
}

TEST_CASE("is_maximum_feasible")
{
    Sequence s = normalize({7, 8, 5, 6});
    CHECK(is_maximum_feasible(s, IndexSet{3, 4}));
    CHECK(is_maximum_feasible(s, IndexSet{1, 2}));
    CHECK_FALSE(is_maximum_feasible(s, IndexSet{1}));
    CHECK_FALSE(is_maximum_feasible(s, IndexSet{1, 3}));
    CHECK(is_maximum_feasible(Sequence{}, IndexSet{}));
}

TEST_CASE("properties against subset enumeration")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = round % 13;
        auto raw = brute::random_values(n, rng);
        Sequence seq = normalize(raw);
        Sequence perm_seq = normalize(std::vector<Value>(seq.perm().begin(), seq.perm().end()));

        CHECK(lis_length(seq) == brute::lis(raw));

        for (Index i = 1; i <= static_cast<Index>(n); ++i)
            for (Index j = 1; j <= static_cast<Index>(n); ++j)
                CHECK(precedes(seq, i, j) == precedes(perm_seq, i, j));

        if (n > 0) {
            std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
            IndexSet s = brute::from_mask(mask, n);
            bool pairwise = true;
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b)
                    pairwise = pairwise && precedes(seq, s[a], s[b]);
            CHECK(is_feasible(seq, s) == pairwise);
        }
    }
}
