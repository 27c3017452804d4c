#pragma once

// Correspondences between 1342-avoiding permutations and beta(0,1)-trees.
//
//   path trees       <-> 1342-avoiders starting with 1
//   zero-label trees <-> 132-avoiders ending with n
//   beta(0,1)-trees  <-> indecomposable 1342-avoiders
//   beta(0,1)-forests <-> all 1342-avoiders (one tree per indecomposable block)
//
// Tree nodes are matched to permutation positions by postorder (children left
// to right, then the node itself).

#include "avoid/permutation.hpp"
#include "avoid/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace avoid {

/// The pattern 1342.
const Permutation& pattern_1342();

/// Single-path tree of a 1342-avoider with p_1 = 1. Node i (counted from the
/// leaf, i < n) is labeled with the number of entries at or before i that
/// exceed some entry after i; the root copies node n-1.
LabeledPlaneTree path_tree_from_perm(const Permutation& p);
Permutation perm_from_path_tree(const LabeledPlaneTree& tree);

/// Zero-label tree -> 132-avoider ending with n. Branches become value blocks,
/// the leftmost branch taking the largest block; the root takes n.
Permutation zero_tree_to_perm(const LabeledPlaneTree& tree);
LabeledPlaneTree perm_to_zero_tree(const Permutation& p);

/// p_i beats p_j: some p_h with h < i < j has p_h < p_j < p_i. Positions 1-based.
bool beats(const Permutation& p, std::size_t i, std::size_t j);

/// p_i reaches p_k: a chain of beats with increasing positions leads from i to k.
bool reaches(const Permutation& p, std::size_t i, std::size_t k);

/// The whole beats / reaches relation of one permutation as bit rows.
class ReachRelation {
public:
    explicit ReachRelation(const Permutation& p);

    std::size_t size() const noexcept { return n_; }
    bool beats(std::size_t i, std::size_t j) const;    // 1-based
    bool reaches(std::size_t i, std::size_t k) const;  // 1-based
    /// Largest 1-based position reached from i, or 0 if i reaches nothing.
    std::size_t last_reached(std::size_t i) const;

private:
    bool test(const std::vector<std::uint64_t>& rows, std::size_t i, std::size_t j) const;

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> beats_;
    std::vector<std::uint64_t> reaches_;
};

/// Indecomposable 1342-avoider -> beta(0,1)-tree. The shape is that of N(p);
/// non-root node i counts descendants j (i included) reaching some position
/// after i; the root takes the sum of its children.
LabeledPlaneTree perm_to_beta_tree(const Permutation& p);

/// Inverse of perm_to_beta_tree. Throws DomainError on an invalid tree and
/// InternalError if reconstruction ever becomes inconsistent.
Permutation beta_tree_to_perm(const LabeledPlaneTree& tree);

/// Any 1342-avoider -> one beta(0,1)-tree per indecomposable block.
std::vector<LabeledPlaneTree> perm_to_beta_forest(const Permutation& p);
Permutation beta_forest_to_perm(const std::vector<LabeledPlaneTree>& forest);

}  // namespace avoid
