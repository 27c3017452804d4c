#pragma once

#include "avoid/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace avoid {

inline constexpr std::size_t kDefaultMaxTreeN = 12;

/// All plane tree shapes on n nodes (labels 0), in canonical order: the root's
/// forest is ordered by first-branch size, then first-branch shape, then the
/// rest of the forest, recursively. There are Catalan(n-1) of them.
std::vector<LabeledPlaneTree> plane_tree_shapes(std::size_t n);

/// Every beta(0,1) labeling of `shape`, in lexicographic order of the postorder
/// label vector. The visitor's argument is reused between calls.
void for_each_beta01_labeling(const PostorderTree& shape,
                              const std::function<void(const PostorderTree&)>& visit);

/// Every beta(0,1)-tree on n nodes exactly once: shapes in canonical order,
/// labelings lexicographically within a shape. n = 0 visits nothing; n above
/// max_n throws ResourceError. Restartable: each call regenerates from scratch.
void for_each_beta01_tree(std::size_t n, const std::function<void(const LabeledPlaneTree&)>& visit,
                          std::size_t max_n = kDefaultMaxTreeN);

std::vector<LabeledPlaneTree> generate_all_beta01(std::size_t n,
                                                  std::size_t max_n = kDefaultMaxTreeN);

/// Count without materializing trees. Per-shape counts sum to the total, so
/// callers may split the shape list across workers.
std::uint64_t count_beta01_labelings(const PostorderTree& shape);
std::uint64_t count_beta01(std::size_t n, std::size_t max_n = kDefaultMaxTreeN);

}  // namespace avoid
