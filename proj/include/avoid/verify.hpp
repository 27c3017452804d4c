#pragma once

// Self-verification suites behind `avoid-cli verify`. Each check appends a
// human-readable line to `failures` for every mismatch it finds.

#include "avoid/sequences.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace avoid {

struct CheckResult {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
    void expect(bool ok, const std::string& what);
    void merge(const CheckResult& other);
};

/// F on indecomposable 1342-avoiders of length n: valid trees, injective, onto
/// all beta(0,1)-trees on n nodes, inverse roundtrip, 132-avoiders map to zero
/// trees, p_1 = 1 maps to paths, shape equals the zero tree of N(p), and f and
/// F agree on permutations starting with 1.
CheckResult check_tree_bijection(std::size_t n, std::size_t max_n = kDefaultMaxBruteN);

/// All single-path beta(0,1)-trees on n nodes: f roundtrip, count Catalan(n-1).
CheckResult check_path_trees(std::size_t n);

/// All zero-label trees on n nodes: roundtrip through 132-avoiders ending in n,
/// count Catalan(n-1).
CheckResult check_zero_trees(std::size_t n);

/// Forest map on all 1342-avoiders of length n: roundtrip, one tree per block.
CheckResult check_forests(std::size_t n, std::size_t max_n = kDefaultMaxBruteN);

/// Series routes to `order`: H by division, rationalized and 1/(1-F) agree,
/// (1-8x)^{3/2} closed equals binomial, F and H integral, the algebraic
/// identity holds, and a one-coefficient perturbation of H breaks it. With
/// `corrupt`, H by division gets one coefficient bumped first.
CheckResult check_series(std::size_t order, bool corrupt = false);

struct VerifyOptions {
    std::string suite = "all";  // bijection | sequences | series | all
    std::size_t max_n = 7;      // brute force and bijection sizes
    long max_closed = 100;
    std::size_t order = 200;
    unsigned workers = 1;
    std::size_t max_brute_n = kDefaultMaxBruteN;
    bool inject_failure = false;  // corrupt one reference value per suite
};

struct SuiteResult {
    std::string name;
    CheckResult result;
    std::optional<SequenceReport> report;  // sequences suite only
};

struct VerifyOutcome {
    std::vector<SuiteResult> suites;

    bool passed() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Throws DomainError for an unknown suite, ResourceError for max_n above the
/// brute-force ceiling.
VerifyOutcome run_verification(const VerifyOptions& options);

}  // namespace avoid
