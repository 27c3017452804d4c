#include "avoid/bijection.hpp"

#include "avoid/error.hpp"
#include "avoid/kernels/window.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

namespace avoid {

const Permutation& pattern_1342() {
    static const Permutation q{1, 3, 4, 2};
    return q;
}

namespace {

const Permutation& pattern_132() {
    static const Permutation q{1, 3, 2};
    return q;
}

void require_avoids_1342(const Permutation& p) {
    if (contains(p, pattern_1342())) {
        throw DomainError("permutation " + p.to_string() + " contains 1342");
    }
}

std::size_t to_index(int v) { return static_cast<std::size_t>(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Single-path trees

LabeledPlaneTree path_tree_from_perm(const Permutation& p) {
    const std::size_t n = p.size();
    if (n == 0) throw DomainError("empty permutation has no path tree");
    if (p[0] != 1) throw DomainError("permutation " + p.to_string() + " does not start with 1");
    require_avoids_1342(p);

    std::vector<int> suffix_min(n + 1, std::numeric_limits<int>::max());
    for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], p[i]);

    std::vector<int> labels(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        int count = 0;
        for (std::size_t j = 0; j <= i; ++j) count += p[j] > suffix_min[i + 1] ? 1 : 0;
        labels[i] = count;
    }
    if (n > 1) labels[n - 1] = labels[n - 2];

    LabeledPlaneTree tree(labels[0]);
    for (std::size_t i = 1; i < n; ++i) tree = LabeledPlaneTree(labels[i], {std::move(tree)});
    return tree;
}

Permutation perm_from_path_tree(const LabeledPlaneTree& tree) {
    if (!classify_shape(tree).single_path) throw DomainError("tree is not a single path");
    if (!validate_beta01(tree)) throw DomainError("tree is not a beta(0,1)-tree");

    // Labels from leaf to root.
    std::vector<int> labels;
    for (const auto* node : postorder_positions(tree)) labels.push_back(node->label());
    const std::size_t n = labels.size();

    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[i] = i;
    std::vector<int> values(n, 0);

    // The largest remaining value sits at the start of the run of positive
    // labels that ends at the root, or at the root when there is no such run.
    for (int m = static_cast<int>(n); m >= 1; --m) {
        const std::size_t k = labels.size();
        std::size_t at = k - 1;
        if (labels[k - 1] > 0) {
            while (at > 0 && labels[at - 1] > 0) --at;
        }
        values[position[at]] = m;
        position.erase(position.begin() + static_cast<std::ptrdiff_t>(at));
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(at));
        for (std::size_t j = at; j < labels.size(); ++j) {
            if (--labels[j] < 0) throw InternalError("negative label while inverting path tree");
        }
        if (!labels.empty() && at == labels.size()) {
            labels.back() = labels.size() > 1 ? labels[labels.size() - 2] : 0;
        }
    }

    try {
        Permutation p(std::move(values));
        if (path_tree_from_perm(p) != tree) {
            throw InternalError("path tree inversion does not roundtrip for " + tree.to_string());
        }
        return p;
    } catch (const DomainError& e) {
        throw InternalError(std::string("path tree inversion produced an invalid permutation: ") +
                            e.what());
    }
}

// ---------------------------------------------------------------------------
// Zero-label trees

namespace {

std::vector<int> zero_tree_values(const LabeledPlaneTree& t) {
    std::vector<std::size_t> sizes;
    for (const auto& c : t.children()) sizes.push_back(c.size());
    std::size_t remaining = t.size() - 1;
    std::vector<int> out;
    out.reserve(t.size());
    for (std::size_t b = 0; b < t.children().size(); ++b) {
        remaining -= sizes[b];
        for (int v : zero_tree_values(t.children()[b])) out.push_back(v + static_cast<int>(remaining));
    }
    out.push_back(static_cast<int>(t.size()));
    return out;
}

LabeledPlaneTree zero_tree_of(const Permutation& p) {
    const std::size_t n = p.size();
    const Permutation body = Permutation::from_distinct(p.values().first(n - 1));
    std::vector<LabeledPlaneTree> branches;
    for (const auto& block : decompose(body)) branches.push_back(zero_tree_of(block));
    return LabeledPlaneTree(0, std::move(branches));
}

}  // namespace

Permutation zero_tree_to_perm(const LabeledPlaneTree& tree) {
    if (!classify_shape(tree).all_zero_labels) throw DomainError("tree has a nonzero label");
    return Permutation(zero_tree_values(tree));
}

LabeledPlaneTree perm_to_zero_tree(const Permutation& p) {
    if (p.empty()) throw DomainError("empty permutation has no tree");
    if (p[p.size() - 1] != static_cast<int>(p.size())) {
        throw DomainError("permutation " + p.to_string() + " does not end with n");
    }
    if (contains(p, pattern_132())) {
        throw DomainError("permutation " + p.to_string() + " contains 132");
    }
    return zero_tree_of(p);
}

// ---------------------------------------------------------------------------
// beats / reaches

bool beats(const Permutation& p, std::size_t i, std::size_t j) {
    if (i >= j || i < 1 || j > p.size()) return false;
    int prefix_min = std::numeric_limits<int>::max();
    for (std::size_t h = 1; h < i; ++h) prefix_min = std::min(prefix_min, p.at(h));
    return prefix_min < p.at(j) && p.at(j) < p.at(i);
}

bool reaches(const Permutation& p, std::size_t i, std::size_t k) {
    return ReachRelation(p).reaches(i, k);
}

ReachRelation::ReachRelation(const Permutation& p)
    : n_(p.size()), words_((p.size() + 63) / 64), beats_(n_ * words_, 0), reaches_(n_ * words_, 0) {
    // p_i beats p_j iff min(p_1..p_{i-1}) < p_j < p_i: one window query per row.
    const bool packed = n_ <= kernels::kPackedWidth;
    kernels::Packed bytes;
    if (packed) bytes = kernels::pack(p.values());
    const auto mask_fn = kernels::window_mask();

    int prefix_min = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint64_t* row = &beats_[i * words_];
        if (i > 0) {
            if (packed) {
                row[0] = mask_fn(bytes, static_cast<unsigned>(i + 1), static_cast<unsigned>(n_),
                                 static_cast<unsigned>(prefix_min), static_cast<unsigned>(p[i]));
            } else {
                for (std::size_t j = i + 1; j < n_; ++j) {
                    if (prefix_min < p[j] && p[j] < p[i]) row[j / 64] |= std::uint64_t{1} << (j % 64);
                }
            }
        }
        prefix_min = std::min(prefix_min, p[i]);
    }

    // Beats only point rightwards, so rows can be closed right to left.
    for (std::size_t i = n_; i-- > 0;) {
        std::uint64_t* out = &reaches_[i * words_];
        const std::uint64_t* b = &beats_[i * words_];
        std::copy(b, b + words_, out);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = b[w];
            while (bits != 0) {
                const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const std::uint64_t* rj = &reaches_[j * words_];
                for (std::size_t u = 0; u < words_; ++u) out[u] |= rj[u];
            }
        }
    }
}

bool ReachRelation::test(const std::vector<std::uint64_t>& rows, std::size_t i,
                         std::size_t j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    const std::size_t r = i - 1;
    const std::size_t c = j - 1;
    return ((rows[r * words_ + c / 64] >> (c % 64)) & 1u) != 0;
}

bool ReachRelation::beats(std::size_t i, std::size_t j) const { return test(beats_, i, j); }

bool ReachRelation::reaches(std::size_t i, std::size_t k) const { return test(reaches_, i, k); }

std::size_t ReachRelation::last_reached(std::size_t i) const {
    if (i < 1 || i > n_) return 0;
    const std::uint64_t* row = &reaches_[(i - 1) * words_];
    for (std::size_t w = words_; w-- > 0;) {
        if (row[w] != 0) return w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(row[w]))) + 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// beta(0,1)-trees

LabeledPlaneTree perm_to_beta_tree(const Permutation& p) {
    require_avoids_1342(p);
    if (!is_indecomposable(p)) {
        throw DomainError("permutation " + p.to_string() + " is decomposable");
    }
    PostorderTree tree = flatten(perm_to_zero_tree(normalize(p)));
    const ReachRelation rel(p);
    const int root = tree.root();
    for (int i = 0; i < root; ++i) {
        int count = 0;
        for (int j = tree.first_descendant(i); j <= i; ++j) {
            if (rel.last_reached(to_index(j) + 1) > to_index(i) + 1) ++count;
        }
        tree.label[to_index(i)] = count;
    }
    int child_sum = 0;
    for (int c : tree.children[to_index(root)]) child_sum += tree.label[to_index(c)];
    tree.label[to_index(root)] = child_sum;
    return unflatten(tree);
}

namespace {

// Recovers the preimage by placing values from the largest down.
//
// Left-to-right minima are fixed up front: they are the minima of N(p), and N(p)
// is read off the unlabeled tree. Each remaining value m goes to the leftmost
// unassigned non-minimum node whose label, and the labels of all its ancestors
// below the current root, are positive; with no such node it goes to the root.
// The node is then deleted (children move up into its place) and its ancestors
// lose one from their labels.
//
// A deletion can make the remaining entries decomposable. The minima decide
// this: a cut before minimum a is valid iff the remaining values below the
// previous minimum are exactly as many as the positions from a onward. Each
// block is then solved on its own, re-rooted at its last node, with the
// largest values going to the leftmost block.
class BetaTreeInverter {
public:
    explicit BetaTreeInverter(const LabeledPlaneTree& tree)
        : tree_(flatten(tree)),
          label_(tree_.label),
          parent_(tree_.parent),
          value_(tree_.size(), 0),
          is_minimum_(tree_.size(), false) {
        const Permutation normal = zero_tree_to_perm(normalize_tree(tree));
        for (const auto& m : left_to_right_minima(normal)) {
            value_[m.position - 1] = m.value;
            is_minimum_[m.position - 1] = true;
        }
    }

    Permutation run() {
        const int n = static_cast<int>(tree_.size());
        std::vector<int> nodes(tree_.size());
        std::vector<int> values(tree_.size());
        for (int i = 0; i < n; ++i) {
            nodes[to_index(i)] = i;
            values[to_index(i)] = n - i;
        }
        solve(std::move(nodes), std::move(values));
        return Permutation(value_);
    }

private:
    [[noreturn]] static void inconsistent(const std::string& what) {
        throw InternalError("beta tree inversion: " + what);
    }

    // nodes: ascending postorder positions; values: descending.
    void solve(std::vector<int> nodes, std::vector<int> values) {
        while (!nodes.empty()) {
            if (!is_minimum_[to_index(nodes.front())]) inconsistent("block does not start at a minimum");
            if (split_if_decomposable(nodes, values)) return;

            const auto free = std::find_if(values.begin(), values.end(),
                                           [&](int v) { return !minimum_value_in(nodes, v); });
            if (free == values.end()) {
                for (int x : nodes) {
                    if (!is_minimum_[to_index(x)]) inconsistent("unassigned node left over");
                }
                return;
            }
            const int m = *free;
            values.erase(free);
            const int at = locate(nodes);
            value_[to_index(at)] = m;
            remove_node(nodes, at);
        }
    }

    bool minimum_value_in(const std::vector<int>& nodes, int v) const {
        return std::any_of(nodes.begin(), nodes.end(), [&](int x) {
            return is_minimum_[to_index(x)] && value_[to_index(x)] == v;
        });
    }

    int locate(const std::vector<int>& nodes) const {
        const int root = nodes.back();
        for (int i : nodes) {
            if (i == root || is_minimum_[to_index(i)]) continue;
            bool positive = true;
            for (int a = i; a != root; a = parent_[to_index(a)]) {
                if (a < 0) inconsistent("node outside the current tree");
                if (label_[to_index(a)] <= 0) {
                    positive = false;
                    break;
                }
            }
            if (positive) return i;
        }
        if (is_minimum_[to_index(root)]) inconsistent("root is a left-to-right minimum");
        return root;
    }

    void remove_node(std::vector<int>& nodes, int at) {
        const int up = parent_[to_index(at)];
        for (int x : nodes) {
            if (parent_[to_index(x)] == at) parent_[to_index(x)] = up;
        }
        nodes.erase(std::find(nodes.begin(), nodes.end(), at));
        for (int a = up; a >= 0; a = parent_[to_index(a)]) --label_[to_index(a)];
    }

    bool split_if_decomposable(const std::vector<int>& nodes, const std::vector<int>& values) {
        std::vector<std::size_t> cuts;
        int previous_min = -1;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const int x = nodes[k];
            if (!is_minimum_[to_index(x)]) continue;
            if (previous_min >= 0) {
                const auto below = static_cast<std::size_t>(
                    std::count_if(values.begin(), values.end(), [&](int v) { return v < previous_min; }));
                if (below == nodes.size() - k) cuts.push_back(k);
            }
            previous_min = value_[to_index(x)];
        }
        if (cuts.empty()) return false;

        cuts.push_back(nodes.size());
        std::size_t begin = 0;
        std::size_t taken = 0;
        std::vector<bool> in_block(tree_.size(), false);
        for (std::size_t end : cuts) {
            std::vector<int> block(nodes.begin() + static_cast<std::ptrdiff_t>(begin),
                                   nodes.begin() + static_cast<std::ptrdiff_t>(end));
            std::vector<int> block_values(values.begin() + static_cast<std::ptrdiff_t>(taken),
                                          values.begin() + static_cast<std::ptrdiff_t>(taken + block.size()));
            taken += block.size();
            begin = end;

            for (int x : block) in_block[to_index(x)] = true;
            for (int x : block) {
                int a = parent_[to_index(x)];
                while (a >= 0 && !in_block[to_index(a)]) a = parent_[to_index(a)];
                parent_[to_index(x)] = a;
            }
            for (int x : block) {
                const bool top = parent_[to_index(x)] < 0;
                if (top != (x == block.back())) inconsistent("block is not a single tree");
                if (is_minimum_[to_index(x)] &&
                    std::find(block_values.begin(), block_values.end(), value_[to_index(x)]) ==
                        block_values.end()) {
                    inconsistent("minimum outside its block's value range");
                }
            }
            for (int x : block) in_block[to_index(x)] = false;
            solve(std::move(block), std::move(block_values));
        }
        return true;
    }

    PostorderTree tree_;
    std::vector<int> label_;
    std::vector<int> parent_;
    std::vector<int> value_;
    std::vector<bool> is_minimum_;
};

}  // namespace

Permutation beta_tree_to_perm(const LabeledPlaneTree& tree) {
    if (!validate_beta01(tree)) throw DomainError("not a beta(0,1)-tree: " + tree.to_string());
    try {
        Permutation p = BetaTreeInverter(tree).run();
        if (perm_to_beta_tree(p) != tree) {
            throw InternalError("beta tree inversion does not roundtrip for " + tree.to_string());
        }
        return p;
    } catch (const DomainError& e) {
        throw InternalError(std::string("beta tree inversion produced an invalid permutation: ") +
                            e.what());
    }
}

std::vector<LabeledPlaneTree> perm_to_beta_forest(const Permutation& p) {
    require_avoids_1342(p);
    std::vector<LabeledPlaneTree> forest;
    for (const auto& block : decompose(p)) forest.push_back(perm_to_beta_tree(block));
    return forest;
}

Permutation beta_forest_to_perm(const std::vector<LabeledPlaneTree>& forest) {
    std::vector<Permutation> blocks;
    blocks.reserve(forest.size());
    for (const auto& t : forest) blocks.push_back(beta_tree_to_perm(t));
    return skew_sum(blocks);
}

}  // namespace avoid
