#include "avoid/tree_gen.hpp"

#include "avoid/error.hpp"

#include <map>
#include <string>

namespace avoid {

namespace {

void check_ceiling(std::size_t n, std::size_t max_n) {
    if (n > max_n) {
        throw ResourceError("tree generation refused: n=" + std::to_string(n) +
                            " exceeds ceiling " + std::to_string(max_n));
    }
}

class ShapeTable {
public:
    const std::vector<LabeledPlaneTree>& trees(std::size_t n) {
        if (auto it = trees_.find(n); it != trees_.end()) return it->second;
        std::vector<LabeledPlaneTree> out;
        for (const auto& forest : forests(n - 1)) out.emplace_back(0, forest);
        return trees_.emplace(n, std::move(out)).first->second;
    }

    const std::vector<std::vector<LabeledPlaneTree>>& forests(std::size_t m) {
        if (auto it = forests_.find(m); it != forests_.end()) return it->second;
        std::vector<std::vector<LabeledPlaneTree>> out;
        if (m == 0) {
            out.emplace_back();
        } else {
            for (std::size_t first = 1; first <= m; ++first) {
                // std::map references survive the inserts made by recursion.
                const auto& heads = trees(first);
                const auto& tails = forests(m - first);
                for (const auto& head : heads) {
                    for (const auto& tail : tails) {
                        std::vector<LabeledPlaneTree> f;
                        f.reserve(tail.size() + 1);
                        f.push_back(head);
                        f.insert(f.end(), tail.begin(), tail.end());
                        out.push_back(std::move(f));
                    }
                }
            }
        }
        return forests_.emplace(m, std::move(out)).first->second;
    }

private:
    std::map<std::size_t, std::vector<LabeledPlaneTree>> trees_;
    std::map<std::size_t, std::vector<std::vector<LabeledPlaneTree>>> forests_;
};

template <class Leaf>
void label_from(PostorderTree& t, std::size_t i, Leaf& leaf) {
    if (i == t.size()) {
        leaf(t);
        return;
    }
    int child_sum = 0;
    for (int c : t.children[i]) child_sum += t.label[static_cast<std::size_t>(c)];
    if (static_cast<int>(i) == t.root()) {
        t.label[i] = child_sum;
        label_from(t, i + 1, leaf);
        return;
    }
    const int top = t.children[i].empty() ? 0 : child_sum + 1;
    for (int l = 0; l <= top; ++l) {
        t.label[i] = l;
        label_from(t, i + 1, leaf);
    }
}

}  // namespace

std::vector<LabeledPlaneTree> plane_tree_shapes(std::size_t n) {
    if (n == 0) return {};
    ShapeTable table;
    return table.trees(n);
}

void for_each_beta01_labeling(const PostorderTree& shape,
                              const std::function<void(const PostorderTree&)>& visit) {
    PostorderTree work = shape;
    auto leaf = [&](const PostorderTree& t) { visit(t); };
    label_from(work, 0, leaf);
}

void for_each_beta01_tree(std::size_t n, const std::function<void(const LabeledPlaneTree&)>& visit,
                          std::size_t max_n) {
    check_ceiling(n, max_n);
    for (const auto& shape : plane_tree_shapes(n)) {
        for_each_beta01_labeling(flatten(shape),
                                 [&](const PostorderTree& t) { visit(unflatten(t)); });
    }
}

std::vector<LabeledPlaneTree> generate_all_beta01(std::size_t n, std::size_t max_n) {
    std::vector<LabeledPlaneTree> out;
    for_each_beta01_tree(n, [&](const LabeledPlaneTree& t) { out.push_back(t); }, max_n);
    return out;
}

std::uint64_t count_beta01_labelings(const PostorderTree& shape) {
    PostorderTree work = shape;
    std::uint64_t count = 0;
    auto leaf = [&](const PostorderTree&) { ++count; };
    label_from(work, 0, leaf);
    return count;
}

std::uint64_t count_beta01(std::size_t n, std::size_t max_n) {
    check_ceiling(n, max_n);
    std::uint64_t total = 0;
    for (const auto& shape : plane_tree_shapes(n)) total += count_beta01_labelings(flatten(shape));
    return total;
}

}  // namespace avoid
