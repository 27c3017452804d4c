#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace avoid {

/**
 * Rooted plane tree with a nonnegative integer label on every node.
 *
 * Child order is significant. Immutable once built; equality is structural.
 *
 * Text form (canonical, bit-exact):
 *
 *     tree  := LABEL | LABEL "(" tree (" " tree)* ")"
 *
 * LABEL is a decimal integer without leading zeros. Siblings are separated by
 * exactly one space and there is no other whitespace.
 */
class LabeledPlaneTree {
public:
    /// A single node labeled 0.
    LabeledPlaneTree() = default;
    explicit LabeledPlaneTree(int label, std::vector<LabeledPlaneTree> children = {});

    static LabeledPlaneTree parse(std::string_view text);
    std::string to_string() const;

    int label() const noexcept { return label_; }
    const std::vector<LabeledPlaneTree>& children() const noexcept { return children_; }
    bool is_leaf() const noexcept { return children_.empty(); }

    /// Number of nodes.
    std::size_t size() const noexcept { return size_; }

    bool operator==(const LabeledPlaneTree& other) const;

private:
    int label_ = 0;
    std::vector<LabeledPlaneTree> children_;
    std::size_t size_ = 1;
};

/**
 * Array form of a tree indexed by postorder position (children left to right,
 * then the node). The subtree of node i occupies [i - subtree_size[i] + 1, i]
 * and the root is the last node. The algorithms in bijection.cpp work on this.
 */
struct PostorderTree {
    std::vector<int> label;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> subtree_size;
    std::vector<std::vector<int>> children;

    std::size_t size() const noexcept { return label.size(); }
    int root() const noexcept { return static_cast<int>(label.size()) - 1; }
    int first_descendant(int i) const { return i - subtree_size[static_cast<std::size_t>(i)] + 1; }
};

PostorderTree flatten(const LabeledPlaneTree& tree);
LabeledPlaneTree unflatten(const PostorderTree& tree);

/// Leaves 0; root equals the sum of its children; other internal nodes at most
/// one more than the sum of their children.
bool validate_beta01(const LabeledPlaneTree& tree);
bool validate_beta01(const PostorderTree& tree);

/// Nodes in postorder. Pointers are into `tree` and share its lifetime.
std::vector<const LabeledPlaneTree*> postorder_positions(const LabeledPlaneTree& tree);

/// Same shape, every label 0.
LabeledPlaneTree normalize_tree(const LabeledPlaneTree& tree);

struct ShapeFlags {
    bool single_path = false;      // every node has at most one child
    bool all_zero_labels = false;
    std::size_t leaves = 0;
    std::size_t root_branches = 0;
};

ShapeFlags classify_shape(const LabeledPlaneTree& tree);

/// Forest text form: tree serializations joined by ','. The empty forest is "".
std::vector<LabeledPlaneTree> parse_forest(std::string_view text);
std::string forest_to_string(const std::vector<LabeledPlaneTree>& forest);

}  // namespace avoid
