#pragma once

// Occurrence search over raw sequences of distinct integers. Order isomorphism
// only looks at relative order, so the sequence need not be a permutation of
// {1..n}; the enumerator uses this on prefixes.

#include <cstdint>
#include <span>

namespace avoid {

bool sequence_contains(std::span<const int> seq, std::span<const int> pattern);

std::uint64_t sequence_count_occurrences(std::span<const int> seq, std::span<const int> pattern);

/// True iff some occurrence of `pattern` uses the last element of `seq`.
bool sequence_contains_ending_at_last(std::span<const int> seq, std::span<const int> pattern);

}  // namespace avoid
