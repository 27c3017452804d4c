#include "oracles.hpp"

#include "avoid/bijection.hpp"
#include "avoid/enumerate.hpp"
#include "avoid/error.hpp"
#include "avoid/kernels/window.hpp"
#include "avoid/permutation.hpp"

#include <doctest.h>

namespace k = avoid::kernels;

namespace {

// Restores the process-wide kernel when a test switches it.
struct IsaGuard {
    k::Isa saved = k::active_isa();
    ~IsaGuard() { k::select_isa(saved); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar is always available and is the reference") {
    CHECK(k::isa_supported(k::Isa::scalar));
    CHECK(k::supported_isas().front() == k::Isa::scalar);
    CHECK(k::parse_isa("avx2") == k::Isa::avx2);
    CHECK_THROWS_AS(k::parse_isa("avx512"), avoid::DomainError);
    CHECK(k::range_bits(0, 32) == 0xffffffffu);
    CHECK(k::range_bits(3, 5) == 0x18u);
    CHECK(k::range_bits(5, 5) == 0u);
}

TEST_CASE("pack rejects what the SIMD compares cannot represent") {
    CHECK_THROWS_AS(k::pack(std::vector<int>(33, 1)), avoid::DomainError);
    CHECK_THROWS_AS(k::pack(std::vector<int>{1, 127}), avoid::DomainError);
    CHECK_NOTHROW(k::pack(std::vector<int>{0, 126}));
}

TEST_CASE("every supported kernel matches scalar on random windows") {
    std::mt19937 rng(2024);
    for (k::Isa isa : k::supported_isas()) {
        CAPTURE(k::isa_name(isa));
        const k::WindowMaskFn fn = k::window_mask_for(isa);
        for (int trial = 0; trial < 2000; ++trial) {
            const unsigned n = 1 + rng() % 32;
            std::vector<int> values(n);
            for (auto& v : values) v = static_cast<int>(rng() % 127);
            const k::Packed packed = k::pack(values);
            for (int q = 0; q < 20; ++q) {
                const unsigned begin = rng() % (n + 1);
                const unsigned end = begin + rng() % (n + 2 - begin);
                const unsigned lo = rng() % 140;
                const unsigned hi = rng() % 140;
                REQUIRE(fn(packed, begin, end, lo, hi) == k::window_mask_scalar(packed, begin, end, lo, hi));
            }
        }
        // Edge bounds: empty windows, the full width, extreme values.
        std::vector<int> full(32);
        for (int i = 0; i < 32; ++i) full[static_cast<std::size_t>(i)] = i == 0 ? 0 : 126 - i;
        const k::Packed packed = k::pack(full);
        for (unsigned lo : {0u, 1u, 125u, 126u, 127u, 200u}) {
            for (unsigned hi : {0u, 1u, 126u, 127u, 128u, 1000u}) {
                REQUIRE(fn(packed, 0, 32, lo, hi) == k::window_mask_scalar(packed, 0, 32, lo, hi));
                REQUIRE(fn(packed, 31, 32, lo, hi) == k::window_mask_scalar(packed, 31, 32, lo, hi));
                REQUIRE(fn(packed, 7, 7, lo, hi) == 0u);
            }
        }
    }
}

TEST_CASE("unsupported kernels are refused") {
    for (k::Isa isa : {k::Isa::scalar, k::Isa::sse2, k::Isa::avx2, k::Isa::neon}) {
        if (!k::isa_supported(isa)) CHECK_THROWS_AS(k::window_mask_for(isa), avoid::DomainError);
    }
}

TEST_CASE("containment, enumeration and reach rows agree under every kernel") {
    IsaGuard guard;
    std::mt19937 rng(7);
    std::vector<std::pair<oracle::Perm, oracle::Perm>> cases;
    for (int t = 0; t < 200; ++t) {
        cases.emplace_back(oracle::random_perm(4 + static_cast<int>(rng() % 28), rng),
                           oracle::random_perm(1 + static_cast<int>(rng() % 4), rng));
    }
    for (k::Isa isa : k::supported_isas()) {
        CAPTURE(k::isa_name(isa));
        k::select_isa(isa);
        REQUIRE(k::active_isa() == isa);
        for (const auto& [pv, qv] : cases) {
            const avoid::Permutation p(pv), q(qv);
            REQUIRE(avoid::count_occurrences(p, q) == oracle::count_occurrences(pv, qv));
            const avoid::ReachRelation rel(p);
            const auto reach = oracle::reach_matrix(pv);
            for (std::size_t i = 1; i <= p.size(); ++i)
                for (std::size_t j = 1; j <= p.size(); ++j) {
                    REQUIRE(rel.beats(i, j) == oracle::beats(pv, static_cast<int>(i), static_cast<int>(j)));
                    REQUIRE(rel.reaches(i, j) == reach[i - 1][j - 1]);
                }
        }
        REQUIRE(avoid::count_avoiders(8, avoid::Permutation::parse("1342")) == 15485);
    }
}

}  // TEST_SUITE
