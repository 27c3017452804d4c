#include "oracles.hpp"

#include "avoid/error.hpp"
#include "avoid/sequences.hpp"

#include <doctest.h>

namespace {

const std::vector<long> kS1342 = {1, 2, 6, 23, 103, 512, 2740, 15485, 91245, 555662};

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("t_n") {
    CHECK(avoid::t_closed(1) == 1);
    CHECK(avoid::t_closed(2) == 3);
    CHECK(avoid::t_closed(4) == 56);
    CHECK(avoid::t_recurrence(1) == 1);
    CHECK(avoid::t_recurrence(2) == 3);
    CHECK_THROWS_AS(avoid::t_closed(0), avoid::DomainError);
    CHECK_THROWS_AS(avoid::t_recurrence(0), avoid::DomainError);
    const auto table = avoid::t_recurrence_table(500);
    for (long n = 1; n <= 500; ++n) REQUIRE(table[static_cast<std::size_t>(n)] == avoid::t_closed(n));
    for (long n = 2; n <= 100; ++n) REQUIRE(avoid::t_closed(n) * (n + 2) == avoid::t_closed(n - 1) * (8 * n - 4));
}

TEST_CASE("Catalan") {
    CHECK(avoid::catalan(0) == 1);
    CHECK(avoid::catalan(3) == 5);
    const auto rec = avoid::catalan_recurrence_table(30);
    const auto small = oracle::catalan(30);
    for (long n = 0; n <= 30; ++n) {
        REQUIRE(avoid::catalan(n) == rec[static_cast<std::size_t>(n)]);
        REQUIRE(rec[static_cast<std::size_t>(n)] == mpz_class(static_cast<unsigned long>(small[static_cast<std::size_t>(n)])));
    }
    for (int n = 1; n <= 8; ++n) CHECK(mpz_class(static_cast<unsigned long>(oracle::count_avoiders(n, {1, 3, 2}))) == avoid::catalan(n));
}

TEST_CASE("S_n(1342) closed form and convolution") {
    for (long n = 1; n <= 10; ++n) CHECK(avoid::s1342_closed(n) == kS1342[static_cast<std::size_t>(n - 1)]);
    CHECK_THROWS_AS(avoid::s1342_closed(0), avoid::DomainError);
    const auto conv = avoid::s1342_convolution(500);
    const auto closed = avoid::s1342_closed_table(500);
    CHECK(conv[0] == 1);
    CHECK(conv[2] == 2);
    CHECK(conv[5] == 103);
    CHECK(conv == closed);
    CHECK(avoid::s1342_closed(137) == closed[137]);
    for (int n = 1; n <= 7; ++n) {
        CHECK(mpz_class(static_cast<unsigned long>(oracle::count_avoiders(n, {1, 3, 4, 2}))) == closed[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("S_n(1234)") {
    CHECK(avoid::s1234_closed(2) == 2);
    CHECK(avoid::s1234_closed(5) == 103);
    CHECK(avoid::s1234_closed(7) == 2761);
    for (int n = 1; n <= 7; ++n) {
        CHECK(mpz_class(static_cast<unsigned long>(oracle::count_avoiders(n, {1, 2, 3, 4}))) == avoid::s1234_closed(n));
    }
}

TEST_CASE("indecomposable counts") {
    CHECK(avoid::indecomposable_count(1) == 1);
    CHECK(avoid::indecomposable_count(3) == 3);
    const auto counts = avoid::indecomposable_counts(100);
    for (long n = 2; n <= 100; ++n) REQUIRE(counts[static_cast<std::size_t>(n)] == avoid::t_closed(n - 1));
    for (int n = 1; n <= 7; ++n) {
        CHECK(mpz_class(static_cast<unsigned long>(oracle::count_avoiders(n, {1, 3, 4, 2}, oracle::indecomposable))) ==
              counts[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("nth root estimate") {
    CHECK(avoid::nth_root_estimate(1) == doctest::Approx(1.0));
    const double r200 = avoid::nth_root_estimate(200);
    const double r50 = avoid::nth_root_estimate(50);
    CHECK(r200 > 7.3);
    CHECK(r200 < 8.0);
    CHECK(r200 > r50);
    // Cross-check the log-domain evaluation against a direct double at small n.
    CHECK(avoid::nth_root_estimate(10) == doctest::Approx(std::pow(555662.0, 0.1)).epsilon(1e-12));
}

TEST_CASE("cross_check") {
    const auto trivial = avoid::cross_check({1, 1});
    CHECK(trivial.consistent());

    avoid::CrossCheckOptions options;
    options.up_to_closed = 100;
    options.up_to_brute = 8;
    const auto full = avoid::cross_check(options);
    CHECK(full.consistent());
    CHECK(full.name == "cross_check");
    bool has_brute = false;
    for (const auto& e : full.entries) has_brute = has_brute || e.method == "s1234.brute";
    CHECK(has_brute);

    options.up_to_brute = 5;
    for (const char* method : {"s1342.closed", "s1342.series_rational", "t.recurrence", "I.trees", "catalan.brute", "s1234.closed"}) {
        CAPTURE(method);
        options.mutation = avoid::Mutation{method, 4, 1};
        const auto bad = avoid::cross_check(options);
        REQUIRE_FALSE(bad.consistent());
        bool named = false;
        for (const auto& d : bad.discrepancies) named = named || d.method_a == method || d.method_b == method;
        REQUIRE(named);
    }

    options.mutation.reset();
    options.up_to_brute = 13;
    CHECK_THROWS_AS(avoid::cross_check(options), avoid::ResourceError);
}

TEST_CASE("bound violations are reported") {
    avoid::CrossCheckOptions options{10, 7};
    options.mutation = avoid::Mutation{"s1234.closed", 7, -1000};
    const auto report = avoid::cross_check(options);
    bool bound = false;
    for (const auto& d : report.discrepancies) bound = bound || (d.method_a == "s1342.closed" && d.method_b == "s1234.closed");
    CHECK(bound);
}

TEST_CASE("report JSON") {
    avoid::CrossCheckOptions options{3, 2};
    options.mutation = avoid::Mutation{"t.closed", 2, 1};
    const auto j = avoid::cross_check(options).to_json();
    CHECK(j["name"] == "cross_check");
    REQUIRE(j["entries"].is_array());
    for (const auto& e : j["entries"]) {
        REQUIRE(e["n"].is_number_integer());
        REQUIRE(e["value"].is_string());
        REQUIRE(e["method"].is_string());
    }
    REQUIRE(j["discrepancies"].size() == 1);
    CHECK(j["discrepancies"][0]["n"] == 2);
}

}  // TEST_SUITE
