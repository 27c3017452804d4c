#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace avoid {

/**
 * A permutation of {1..n} in one-line notation. Also used for patterns.
 *
 * Immutable after construction. The constructor checks that the values form
 * a bijection on {1..n} and throws DomainError otherwise. Positions in the
 * public API are 1-based to match the usual notation.
 */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    /// Accepts a digit string ("361542", n <= 9) or a comma list ("3,6,1,5,4,2").
    static Permutation parse(std::string_view text);
    /// Standardizes any sequence of distinct integers to a permutation of {1..n}.
    static Permutation from_distinct(std::span<const int> values);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// Value at 1-based position i.
    int at(std::size_t i) const { return values_.at(i - 1); }
    int operator[](std::size_t index0) const noexcept { return values_[index0]; }

    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    /// Digit form when n <= 9, comma form otherwise.
    std::string to_string() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// A left-to-right minimum: 1-based position and value.
struct Minimum {
    std::size_t position;
    int value;

    bool operator==(const Minimum&) const = default;
};

/// Positions strictly increase, values strictly decrease, first position is 1.
using ClassSignature = std::vector<Minimum>;

/// p contains q iff some subsequence of p is order-isomorphic to q.
bool contains(const Permutation& p, const Permutation& q);
inline bool avoids(const Permutation& p, const Permutation& q) { return !contains(p, q); }

/// Number of position subsets of p that are order-isomorphic to q.
std::uint64_t count_occurrences(const Permutation& p, const Permutation& q);

ClassSignature left_to_right_minima(const Permutation& p);

/// Permutations of different length are never in the same class.
bool same_class(const Permutation& p, const Permutation& q);

bool is_indecomposable(const Permutation& p);

/// Maximal decomposition into indecomposable blocks, each standardized.
/// Block i occupies a higher value range than block i+1.
std::vector<Permutation> decompose(const Permutation& p);

/// Skew sum: concatenates blocks with descending value offsets (inverse of decompose).
Permutation skew_sum(std::span<const Permutation> blocks);

/// N(p): the unique 132-avoiding permutation with p's left-to-right minima.
Permutation normalize(const Permutation& p);

}  // namespace avoid
