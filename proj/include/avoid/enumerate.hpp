#pragma once

#include "avoid/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace avoid {

enum class AvoiderFilter { all, indecomposable, first_entry_is_1 };

AvoiderFilter parse_filter(std::string_view name);

inline constexpr std::size_t kDefaultMaxBruteN = 12;

struct EnumerationOptions {
    AvoiderFilter filter = AvoiderFilter::all;
    std::size_t max_n = kDefaultMaxBruteN;  // larger n throws ResourceError
    unsigned workers = 1;                   // used by count_avoiders only
};

using AvoiderVisitor = std::function<void(const Permutation&)>;

/// Brute-force oracle. Builds permutations left to right in lexicographic
/// order and prunes any prefix that already contains q.
void for_each_avoider(std::size_t n, const Permutation& q, const EnumerationOptions& options,
                      const AvoiderVisitor& visit);

/// Same, restricted to permutations whose first entry is `first`. The sets for
/// first = 1..n partition the full enumeration.
void for_each_avoider_with_first(std::size_t n, const Permutation& q, int first,
                                 const EnumerationOptions& options, const AvoiderVisitor& visit);

std::uint64_t count_avoiders_with_first(std::size_t n, const Permutation& q, int first,
                                        const EnumerationOptions& options);

/// Counts by partitioning on the first entry across `options.workers` threads.
std::uint64_t count_avoiders(std::size_t n, const Permutation& q,
                             const EnumerationOptions& options = {});

std::vector<Permutation> list_avoiders(std::size_t n, const Permutation& q,
                                       const EnumerationOptions& options = {});

}  // namespace avoid
