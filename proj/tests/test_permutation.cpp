#include "oracles.hpp"

#include "avoid/enumerate.hpp"
#include "avoid/error.hpp"
#include "avoid/permutation.hpp"

#include <doctest.h>

#include <map>
#include <set>

using avoid::Permutation;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_SUITE("perm-core") {

TEST_CASE("parse and print") {
    CHECK(P("361542").to_string() == "361542");
    CHECK(P("3,6,1,5,4,2") == P("361542"));
    CHECK(Permutation::identity(10).to_string() == "1,2,3,4,5,6,7,8,9,10");
    CHECK(Permutation::parse("10,9,8,7,6,5,4,3,2,1").at(1) == 10);
    CHECK(P("").size() == 0);
    CHECK_THROWS_AS(P("1224"), avoid::DomainError);
    CHECK_THROWS_AS(P("125"), avoid::DomainError);
    CHECK_THROWS_AS(P("1a3"), avoid::ParseError);
    CHECK_THROWS_AS(P("1,,2"), avoid::ParseError);
    try {
        P("12x");
        FAIL("expected a parse error");
    } catch (const avoid::ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(Permutation({0, 1}), avoid::DomainError);
}

TEST_CASE("contains examples") {
    CHECK_FALSE(avoid::contains(P("361542"), P("1342")));
    CHECK(avoid::contains(P("1342"), P("1342")));
    CHECK_FALSE(avoid::contains(P("1234567"), P("1342")));
    CHECK_FALSE(avoid::contains(P(""), P("1")));
    CHECK(avoid::contains(P("1"), P("1")));
}

TEST_CASE("count_occurrences examples") {
    CHECK(avoid::count_occurrences(P("132"), P("132")) == 1);
    CHECK(avoid::count_occurrences(P("12345"), P("1234")) == 5);
    CHECK(avoid::count_occurrences(P("1432"), P("132")) == 3);
}

TEST_CASE("containment agrees with the subset oracle, exhaustive n <= 6") {
    const std::vector<const char*> patterns = {"1", "12", "21", "132", "231", "1342", "2413", "1234", "4321"};
    for (int n = 0; n <= 6; ++n) {
        for (const auto& p : all_perms(n)) {
            const std::vector<int> pv(p.begin(), p.end());
            for (const char* qs : patterns) {
                const Permutation q = P(qs);
                const std::vector<int> qv(q.begin(), q.end());
                const auto expected = oracle::count_occurrences(pv, qv);
                REQUIRE(avoid::count_occurrences(p, q) == expected);
                REQUIRE(avoid::contains(p, q) == (expected > 0));
            }
        }
    }
}

TEST_CASE("containment agrees with the oracle on random long permutations") {
    std::mt19937 rng(1342);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 40);  // crosses the 32-entry packed limit
        const auto pv = oracle::random_perm(n, rng);
        const int k = 1 + static_cast<int>(rng() % 4);
        const auto qv = oracle::random_perm(k, rng);
        const Permutation p(pv), q(qv);
        const auto expected = oracle::count_occurrences(pv, qv);
        REQUIRE(avoid::count_occurrences(p, q) == expected);
        REQUIRE(avoid::contains(p, q) == (expected > 0));
    }
}

TEST_CASE("left_to_right_minima and same_class") {
    using avoid::Minimum;
    CHECK(avoid::left_to_right_minima(P("34125")) == avoid::ClassSignature{{1, 3}, {3, 1}});
    CHECK(avoid::left_to_right_minima(P("123")) == avoid::ClassSignature{{1, 1}});
    CHECK(avoid::left_to_right_minima(P("321")) == avoid::ClassSignature{{1, 3}, {2, 2}, {3, 1}});
    CHECK(avoid::same_class(P("34125"), P("35124")));
    CHECK_FALSE(avoid::same_class(P("3142"), P("3412")));
    CHECK(avoid::same_class(P("3142"), P("3142")));
    CHECK_FALSE(avoid::same_class(P("12"), P("123")));
}

TEST_CASE("is_indecomposable and decompose") {
    CHECK_FALSE(avoid::is_indecomposable(P("21")));
    CHECK(avoid::is_indecomposable(P("12")));
    CHECK(avoid::is_indecomposable(P("35124")));
    CHECK(avoid::decompose(P("312")) == std::vector<Permutation>{P("1"), P("12")});
    CHECK(avoid::decompose(P("321")) == std::vector<Permutation>{P("1"), P("1"), P("1")});
    CHECK(avoid::decompose(P("123")) == std::vector<Permutation>{P("123")});
    CHECK(avoid::decompose(P("")).empty());
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : all_perms(n)) {
            const std::vector<int> pv(p.begin(), p.end());
            REQUIRE(avoid::is_indecomposable(p) == oracle::indecomposable(pv));
            const auto blocks = avoid::decompose(p);
            for (const auto& b : blocks) REQUIRE(avoid::is_indecomposable(b));
            REQUIRE(avoid::skew_sum(blocks) == p);
        }
    }
}

TEST_CASE("normalize examples") {
    CHECK(avoid::normalize(P("32514")) == P("32415"));
    CHECK(avoid::normalize(P("361542")) == P("341256"));
    CHECK(avoid::normalize(P("321")) == P("321"));
    CHECK(avoid::normalize(P("")) == P(""));
}

TEST_CASE("normalization properties, exhaustive n <= 7") {
    const Permutation p132 = P("132");
    for (int n = 1; n <= 7; ++n) {
        std::map<std::vector<std::pair<int, int>>, std::vector<Permutation>> avoiders_by_class;
        std::set<std::vector<std::pair<int, int>>> classes;
        for (const auto& p : all_perms(n)) {
            const std::vector<int> pv(p.begin(), p.end());
            const auto sig = oracle::minima(pv);
            classes.insert(sig);
            if (!oracle::contains(pv, {1, 3, 2})) avoiders_by_class[sig].push_back(p);

            const Permutation np = avoid::normalize(p);
            REQUIRE(avoid::normalize(np) == np);
            REQUIRE(avoid::same_class(p, np));
            REQUIRE(avoid::avoids(np, p132));
            REQUIRE(avoid::is_indecomposable(p) == avoid::is_indecomposable(np));
            if (avoid::is_indecomposable(p)) REQUIRE(np.at(static_cast<std::size_t>(n)) == n);
        }
        // Exactly one 132-avoider per class, and it is the normalization.
        REQUIRE(avoiders_by_class.size() == classes.size());
        for (const auto& [sig, members] : avoiders_by_class) REQUIRE(members.size() == 1);
    }
}

TEST_CASE("enumerate_avoiders examples and ceiling") {
    const Permutation q = P("1342");
    CHECK(avoid::count_avoiders(4, q) == 23);
    CHECK(avoid::count_avoiders(3, q) == 6);
    CHECK(avoid::count_avoiders(5, q, {avoid::AvoiderFilter::indecomposable}) == 56);
    CHECK(avoid::count_avoiders(0, q) == 1);
    CHECK(avoid::count_avoiders(0, q, {avoid::AvoiderFilter::indecomposable}) == 0);
    CHECK_THROWS_AS(avoid::count_avoiders(13, q), avoid::ResourceError);
    CHECK_THROWS_AS(avoid::count_avoiders(6, q, {avoid::AvoiderFilter::all, 5}), avoid::ResourceError);
    CHECK(avoid::parse_filter("first_entry_is_1") == avoid::AvoiderFilter::first_entry_is_1);
    CHECK_THROWS_AS(avoid::parse_filter("odd"), avoid::DomainError);
}

TEST_CASE("enumeration agrees with the n! filter oracle") {
    const std::vector<const char*> patterns = {"132", "1342", "2413", "1234", "3142"};
    for (int n = 1; n <= 7; ++n) {
        for (const char* qs : patterns) {
            const Permutation q = P(qs);
            const std::vector<int> qv(q.begin(), q.end());
            CAPTURE(n);
            CAPTURE(qs);
            REQUIRE(avoid::count_avoiders(static_cast<std::size_t>(n), q) == oracle::count_avoiders(n, qv));
            REQUIRE(avoid::count_avoiders(static_cast<std::size_t>(n), q, {avoid::AvoiderFilter::indecomposable}) ==
                    oracle::count_avoiders(n, qv, oracle::indecomposable));
            REQUIRE(avoid::count_avoiders(static_cast<std::size_t>(n), q, {avoid::AvoiderFilter::first_entry_is_1}) ==
                    oracle::count_avoiders(n, qv, [](const oracle::Perm& p) { return p[0] == 1; }));
        }
    }
}

TEST_CASE("streaming is lexicographic, duplicate free and partitioned by first entry") {
    const Permutation q = P("1342");
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto list = avoid::list_avoiders(n, q);
        REQUIRE(std::is_sorted(list.begin(), list.end()));
        REQUIRE(std::adjacent_find(list.begin(), list.end()) == list.end());
        std::uint64_t by_first = 0;
        for (int first = 1; first <= static_cast<int>(n); ++first) {
            by_first += avoid::count_avoiders_with_first(n, q, first, {});
        }
        REQUIRE(by_first == list.size());
        REQUIRE(avoid::count_avoiders(n, q, {avoid::AvoiderFilter::all, 12, 3}) == list.size());
    }
}

TEST_CASE("first entry 1 avoiders are counted by Catalan(n-1)") {
    const auto cat = oracle::catalan(10);
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(avoid::count_avoiders(n, P("1342"), {avoid::AvoiderFilter::first_entry_is_1}) == cat[n - 1]);
    }
}

}  // TEST_SUITE
