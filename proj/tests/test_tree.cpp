#include "oracles.hpp"

#include "avoid/error.hpp"
#include "avoid/series.hpp"
#include "avoid/tree.hpp"
#include "avoid/tree_gen.hpp"

#include <doctest.h>

#include <set>

using avoid::LabeledPlaneTree;

namespace {

LabeledPlaneTree T(const char* s) { return LabeledPlaneTree::parse(s); }

std::vector<std::string> strings(const std::vector<LabeledPlaneTree>& trees) {
    std::vector<std::string> out;
    for (const auto& t : trees) out.push_back(t.to_string());
    return out;
}

}  // namespace

TEST_SUITE("tree-core") {

TEST_CASE("validate_beta01 examples") {
    CHECK(avoid::validate_beta01(T("0(0 0)")));
    CHECK_FALSE(avoid::validate_beta01(T("1(0)")));
    CHECK(avoid::validate_beta01(T("0")));
    CHECK(avoid::validate_beta01(T("3(3(1(0) 1(0)))")));
    CHECK_FALSE(avoid::validate_beta01(T("0(1)")));             // leaf label
    CHECK_FALSE(avoid::validate_beta01(T("2(2(0))")));          // internal > 1 + children
    CHECK(avoid::validate_beta01(T("1(1(0))")));
    CHECK(avoid::validate_beta01(avoid::flatten(T("3(3(1(0) 1(0)))"))));
}

TEST_CASE("parse and serialize") {
    CHECK(T("0").to_string() == "0");
    const auto fig = T("3(3(1(0) 1(0)))");
    CHECK(fig.size() == 6);
    CHECK(fig.label() == 3);
    CHECK(fig.children().size() == 1);
    CHECK(fig.children()[0].children().size() == 2);
    CHECK(T("0(0(0(0) 0(0)))").size() == 6);
    CHECK(T("12(0)").label() == 12);

    for (const char* bad : {"", "(", "0(", "0()", "0(0  0)", "0( 0)", "0(0 )", "01", "0(0)x", "-1", " 0", "a"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(T(bad), avoid::ParseError);
    }
    try {
        T("1(1(0)");
        FAIL("expected parse error");
    } catch (const avoid::ParseError& e) {
        CHECK(e.position() == 6);
    }
    try {
        T("0(0 -2)");
        FAIL("expected parse error");
    } catch (const avoid::ParseError& e) {
        CHECK(std::string(e.what()).find("negative") != std::string::npos);
    }
    CHECK_THROWS_AS(LabeledPlaneTree(-1), avoid::DomainError);
}

TEST_CASE("forest text") {
    CHECK(avoid::forest_to_string({}).empty());
    CHECK(avoid::parse_forest("").empty());
    const auto f = avoid::parse_forest("0,0(0),1(1(0))");
    REQUIRE(f.size() == 3);
    CHECK(avoid::forest_to_string(f) == "0,0(0),1(1(0))");
    CHECK_THROWS_AS(avoid::parse_forest("0,,0"), avoid::ParseError);
}

TEST_CASE("generation examples and ceiling") {
    const auto three = strings(avoid::generate_all_beta01(3));
    CHECK(std::set<std::string>(three.begin(), three.end()) ==
          std::set<std::string>{"0(0(0))", "1(1(0))", "0(0 0)"});
    CHECK(three.size() == 3);
    CHECK(strings(avoid::generate_all_beta01(1)) == std::vector<std::string>{"0"});
    CHECK(avoid::generate_all_beta01(0).empty());
    CHECK(avoid::generate_all_beta01(5).size() == 56);
    CHECK_THROWS_AS(avoid::generate_all_beta01(13), avoid::ResourceError);
    CHECK_THROWS_AS(avoid::count_beta01(6, 5), avoid::ResourceError);
}

TEST_CASE("generation counts match the series and the generator is restartable") {
    const auto f = avoid::indecomposable_series(10);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto trees = avoid::generate_all_beta01(n);
        REQUIRE(mpz_class(static_cast<unsigned long>(trees.size())) == f.integer_coefficient(n));
        REQUIRE(avoid::count_beta01(n) == trees.size());
        const auto names = strings(trees);
        REQUIRE(std::set<std::string>(names.begin(), names.end()).size() == names.size());
        REQUIRE(strings(avoid::generate_all_beta01(n)) == names);
        std::uint64_t by_shape = 0;
        for (const auto& shape : avoid::plane_tree_shapes(n)) by_shape += avoid::count_beta01_labelings(avoid::flatten(shape));
        REQUIRE(by_shape == trees.size());
        for (const auto& t : trees) {
            REQUIRE(avoid::validate_beta01(t));
            REQUIRE(LabeledPlaneTree::parse(t.to_string()) == t);
            REQUIRE(avoid::unflatten(avoid::flatten(t)) == t);
        }
    }
}

TEST_CASE("shape counts are Catalan numbers") {
    const auto cat = oracle::catalan(12);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto shapes = avoid::plane_tree_shapes(n);
        REQUIRE(shapes.size() == cat[n - 1]);
        std::set<std::string> distinct;
        for (const auto& s : shapes) distinct.insert(s.to_string());
        REQUIRE(distinct.size() == shapes.size());
    }
    std::size_t zero = 0;
    for (const auto& t : avoid::generate_all_beta01(4)) zero += avoid::classify_shape(t).all_zero_labels ? 1 : 0;
    CHECK(zero == 5);
}

TEST_CASE("postorder positions") {
    const auto t = T("0(0 0)");
    const auto order = avoid::postorder_positions(t);
    REQUIRE(order.size() == 3);
    CHECK(order[0] == &t.children()[0]);
    CHECK(order[1] == &t.children()[1]);
    CHECK(order[2] == &t);

    // Every subtree is the contiguous range ending at its own position.
    for (const auto& tree : avoid::generate_all_beta01(7)) {
        const auto flat = avoid::flatten(tree);
        REQUIRE(flat.root() == static_cast<int>(flat.size()) - 1);
        for (std::size_t i = 0; i < flat.size(); ++i) {
            const int first = flat.first_descendant(static_cast<int>(i));
            for (int j = 0; j < static_cast<int>(flat.size()); ++j) {
                bool descendant = false;
                for (int a = j; a != -1; a = flat.parent[static_cast<std::size_t>(a)]) {
                    if (a == static_cast<int>(i)) descendant = true;
                }
                REQUIRE(descendant == (first <= j && j <= static_cast<int>(i)));
            }
        }
    }
}

TEST_CASE("normalize_tree and classify_shape") {
    CHECK(avoid::normalize_tree(T("3(3(1(0) 1(0)))")) == T("0(0(0(0) 0(0)))"));
    CHECK(avoid::normalize_tree(T("0")) == T("0"));
    const auto n1 = avoid::normalize_tree(T("2(1(0) 1(0))"));
    CHECK(avoid::normalize_tree(n1) == n1);

    const auto path = avoid::classify_shape(T("0(0(2(1(0))))"));
    CHECK(path.single_path);
    CHECK_FALSE(path.all_zero_labels);
    const auto cherry = avoid::classify_shape(T("0(0 0)"));
    CHECK_FALSE(cherry.single_path);
    CHECK(cherry.all_zero_labels);
    CHECK(cherry.leaves == 2);
    CHECK(cherry.root_branches == 2);
}

TEST_CASE("zero-label and single-path tree counts, n <= 10") {
    const auto cat = oracle::catalan(12);
    for (std::size_t n = 1; n <= 10; ++n) {
        std::uint64_t zero = 0, path = 0;
        avoid::for_each_beta01_tree(n, [&](const LabeledPlaneTree& t) {
            const auto flags = avoid::classify_shape(t);
            zero += flags.all_zero_labels ? 1 : 0;
            path += flags.single_path ? 1 : 0;
        });
        REQUIRE(zero == cat[n - 1]);
        REQUIRE(path == cat[n - 1]);
    }
}

}  // TEST_SUITE
