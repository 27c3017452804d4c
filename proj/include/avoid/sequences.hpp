#pragma once

// Exact counting sequences: bicubic-map numbers t_n, Catalan numbers,
// 1342-avoiders (closed form, two series routes, block convolution),
// 1234-avoiders, indecomposable 1342-avoiders, and a cross-checker that runs
// every method against every other one.

#include "avoid/enumerate.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace avoid {

/// 3 * 2^{n-1} * (2n)! / ((n+2)! n!). DomainError for n < 1.
mpz_class t_closed(long n);
/// t_1 = 1, t_n = (8n-4) t_{n-1} / (n+2). InternalError if a division is inexact.
mpz_class t_recurrence(long n);
/// t_1..t_up_to by the recurrence; index 0 holds 0.
std::vector<mpz_class> t_recurrence_table(long up_to);

/// C(2n, n) / (n+1).
mpz_class catalan(long n);
/// C_0..C_up_to by C_{m+1} = sum C_i C_{m-i}.
std::vector<mpz_class> catalan_recurrence_table(long up_to);

/// S_n(1342) from the alternating closed formula. DomainError for n < 1.
mpz_class s1342_closed(long n);
/// s1342_closed for 1..up_to sharing the per-i terms; index 0 holds 1.
std::vector<mpz_class> s1342_closed_table(long up_to);

/// s_0..s_up_to from s_n = sum_{i=1..n} I_i s_{n-i}, s_0 = 1.
std::vector<mpz_class> s1342_convolution(long up_to);

/// S_n(1234) from its binomial sum. InternalError if the sum is not integral.
mpz_class s1234_closed(long n);

/// I_n = [x^n] F(x), indecomposable 1342-avoiders of length n. DomainError for n < 1.
mpz_class indecomposable_count(long n);
/// I_0..I_up_to (I_0 = 0).
std::vector<mpz_class> indecomposable_counts(long up_to);

/// s_n^{1/n} evaluated in the log domain from the exact convolution value.
double nth_root_estimate(long n);

struct SequenceEntry {
    std::string sequence;  // "s1342", "t", "I", "catalan", "s1234"
    long n = 0;
    mpz_class value;
    std::string method;    // e.g. "s1342.closed"
};

struct Discrepancy {
    std::string sequence;
    long n = 0;
    std::string method_a;
    std::string method_b;
    std::string value_a;
    std::string value_b;
};

struct SequenceReport {
    std::string name;
    std::vector<SequenceEntry> entries;
    std::vector<Discrepancy> discrepancies;

    bool consistent() const noexcept { return discrepancies.empty(); }
    nlohmann::json to_json() const;
};

/// Adds `delta` to the value one method reports at index n. Used to check that
/// the cross-checker actually notices a wrong formula.
struct Mutation {
    std::string method;
    long n = 0;
    long delta = 1;
};

struct CrossCheckOptions {
    long up_to_closed = 100;
    long up_to_brute = 8;
    unsigned workers = 1;
    std::size_t max_brute_n = kDefaultMaxBruteN;
    std::optional<Mutation> mutation;
};

/// Runs all methods for s1342, t, I, catalan and s1234 over their shared
/// ranges, compares every method against the first one available at each n,
/// and checks S_n(1342) < 8^n and S_n(1342) < S_n(1234) (n >= 6). Bound
/// violations are reported as discrepancies against "bound.8^n" or
/// "s1234.*". Throws ResourceError if up_to_brute exceeds max_brute_n.
SequenceReport cross_check(const CrossCheckOptions& options);

}  // namespace avoid
