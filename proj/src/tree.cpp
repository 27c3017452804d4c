#include "avoid/tree.hpp"

#include "avoid/error.hpp"

#include <functional>
#include <limits>

namespace avoid {

LabeledPlaneTree::LabeledPlaneTree(int label, std::vector<LabeledPlaneTree> children)
    : label_(label), children_(std::move(children)) {
    if (label_ < 0) throw DomainError("negative label " + std::to_string(label_));
    for (const auto& c : children_) size_ += c.size();
}

bool LabeledPlaneTree::operator==(const LabeledPlaneTree& other) const {
    return label_ == other.label_ && size_ == other.size_ && children_ == other.children_;
}

namespace {

class TreeParser {
public:
    TreeParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    LabeledPlaneTree parse_whole() {
        auto t = parse_tree();
        if (pos_ != text_.size()) fail("unexpected character");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

    int parse_label() {
        if (pos_ < text_.size() && text_[pos_] == '-') fail("negative label");
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail("expected label");
        if (text_[pos_] == '0' && pos_ + 1 < text_.size() && text_[pos_ + 1] >= '0' &&
            text_[pos_ + 1] <= '9') {
            ++pos_;
            fail("leading zero in label");
        }
        long long value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) fail("label too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    LabeledPlaneTree parse_tree() {
        const int label = parse_label();
        std::vector<LabeledPlaneTree> children;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            children.push_back(parse_tree());
            while (pos_ < text_.size() && text_[pos_] == ' ') {
                ++pos_;
                children.push_back(parse_tree());
            }
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' or ' '");
            ++pos_;
        }
        return LabeledPlaneTree(label, std::move(children));
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

void write_tree(const LabeledPlaneTree& t, std::string& out) {
    out += std::to_string(t.label());
    if (t.is_leaf()) return;
    out.push_back('(');
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i != 0) out.push_back(' ');
        write_tree(t.children()[i], out);
    }
    out.push_back(')');
}

}  // namespace

LabeledPlaneTree LabeledPlaneTree::parse(std::string_view text) {
    return TreeParser(text, 0).parse_whole();
}

std::string LabeledPlaneTree::to_string() const {
    std::string out;
    write_tree(*this, out);
    return out;
}

PostorderTree flatten(const LabeledPlaneTree& tree) {
    PostorderTree out;
    const std::size_t n = tree.size();
    out.label.reserve(n);
    out.parent.assign(n, -1);
    out.subtree_size.reserve(n);
    out.children.reserve(n);
    std::function<int(const LabeledPlaneTree&)> visit = [&](const LabeledPlaneTree& t) -> int {
        std::vector<int> kids;
        kids.reserve(t.children().size());
        for (const auto& c : t.children()) kids.push_back(visit(c));
        const int self = static_cast<int>(out.label.size());
        for (int k : kids) out.parent[static_cast<std::size_t>(k)] = self;
        out.label.push_back(t.label());
        out.subtree_size.push_back(static_cast<int>(t.size()));
        out.children.push_back(std::move(kids));
        return self;
    };
    visit(tree);
    return out;
}

LabeledPlaneTree unflatten(const PostorderTree& tree) {
    std::function<LabeledPlaneTree(int)> build = [&](int i) {
        std::vector<LabeledPlaneTree> kids;
        for (int c : tree.children[static_cast<std::size_t>(i)]) kids.push_back(build(c));
        return LabeledPlaneTree(tree.label[static_cast<std::size_t>(i)], std::move(kids));
    };
    if (tree.size() == 0) throw DomainError("empty tree");
    return build(tree.root());
}

bool validate_beta01(const PostorderTree& tree) {
    const int root = tree.root();
    for (int i = 0; i <= root; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const int label = tree.label[ui];
        if (label < 0) return false;
        long long child_sum = 0;
        for (int c : tree.children[ui]) child_sum += tree.label[static_cast<std::size_t>(c)];
        if (i == root) {
            if (label != child_sum) return false;
        } else if (tree.children[ui].empty()) {
            if (label != 0) return false;
        } else if (label > child_sum + 1) {
            return false;
        }
    }
    return true;
}

bool validate_beta01(const LabeledPlaneTree& tree) { return validate_beta01(flatten(tree)); }

std::vector<const LabeledPlaneTree*> postorder_positions(const LabeledPlaneTree& tree) {
    std::vector<const LabeledPlaneTree*> out;
    out.reserve(tree.size());
    std::function<void(const LabeledPlaneTree&)> visit = [&](const LabeledPlaneTree& t) {
        for (const auto& c : t.children()) visit(c);
        out.push_back(&t);
    };
    visit(tree);
    return out;
}

LabeledPlaneTree normalize_tree(const LabeledPlaneTree& tree) {
    std::vector<LabeledPlaneTree> kids;
    kids.reserve(tree.children().size());
    for (const auto& c : tree.children()) kids.push_back(normalize_tree(c));
    return LabeledPlaneTree(0, std::move(kids));
}

ShapeFlags classify_shape(const LabeledPlaneTree& tree) {
    ShapeFlags flags;
    flags.single_path = true;
    flags.all_zero_labels = true;
    flags.root_branches = tree.children().size();
    for (const auto* node : postorder_positions(tree)) {
        if (node->children().size() > 1) flags.single_path = false;
        if (node->label() != 0) flags.all_zero_labels = false;
        if (node->is_leaf()) ++flags.leaves;
    }
    return flags;
}

std::vector<LabeledPlaneTree> parse_forest(std::string_view text) {
    std::vector<LabeledPlaneTree> forest;
    if (text.empty()) return forest;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        forest.push_back(TreeParser(text.substr(start, end - start), start).parse_whole());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return forest;
}

std::string forest_to_string(const std::vector<LabeledPlaneTree>& forest) {
    std::string out;
    for (std::size_t i = 0; i < forest.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += forest[i].to_string();
    }
    return out;
}

}  // namespace avoid
