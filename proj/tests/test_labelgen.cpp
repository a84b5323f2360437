#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "rsst/labelgen.hpp"
#include "testutil.hpp"

using namespace rsst;

TEST_CASE("implicit radical sequence numbers leaves in dfs order") {
    Tree tree = parse_tree_expr("⿰ a:12 ⿱ b:3 c:45");
    auto tokens = radical_sequence(tree, RadicalLabelMode::implicit_order);
    REQUIRE(tokens.size() == 5);
    CHECK(std::get<StructureOp>(tokens[0]) == StructureOp::left_right);
    CHECK(std::get<LeafOrder>(tokens[1]) == LeafOrder{1});
    CHECK(std::get<StructureOp>(tokens[2]) == StructureOp::above_below);
    CHECK(std::get<LeafOrder>(tokens[3]) == LeafOrder{2});
    CHECK(std::get<LeafOrder>(tokens[4]) == LeafOrder{3});
}

TEST_CASE("explicit radical sequence keeps the radical ids") {
    Tree tree = parse_tree_expr("⿰ a:12 ⿱ b:3 c:45");
    auto tokens = radical_sequence(tree, RadicalLabelMode::explicit_radical);
    REQUIRE(tokens.size() == 5);
    CHECK(std::get<ExplicitRadical>(tokens[1]).id == "a");
    CHECK(std::get<ExplicitRadical>(tokens[3]).id == "b");
    CHECK(std::get<ExplicitRadical>(tokens[4]).id == "c");
}

TEST_CASE("explicit mode requires ids on every leaf") {
    Tree tree = parse_tree_expr("⿰ a:1 :2");
    CHECK_THROWS_AS(radical_sequence(tree, RadicalLabelMode::explicit_radical),
                    MissingRadicalIdError);
    CHECK_NOTHROW(radical_sequence(tree, RadicalLabelMode::implicit_order));
}

TEST_CASE("a single leaf yields a one-token sequence") {
    Tree tree = parse_tree_expr("sun:2511");
    auto implicit = radical_sequence(tree, RadicalLabelMode::implicit_order);
    REQUIRE(implicit.size() == 1);
    CHECK(std::get<LeafOrder>(implicit[0]) == LeafOrder{1});
    auto explicit_seq = radical_sequence(tree, RadicalLabelMode::explicit_radical);
    CHECK(std::get<ExplicitRadical>(explicit_seq[0]).id == "sun");
}

TEST_CASE("stroke targets: hand example") {
    // Structure elements get their subtree's concatenation, leaves their own
    // strokes, one entry per DFS element.
    Tree tree = parse_tree_expr("⿰ a:5 ⿱ b:4 c:3");
    StrokeTargets targets = stroke_targets(tree);
    REQUIRE(targets.size() == 5);
    CHECK(targets[0] == testutil::strokes("543"));
    CHECK(targets[1] == testutil::strokes("5"));
    CHECK(targets[2] == testutil::strokes("43"));
    CHECK(targets[3] == testutil::strokes("4"));
    CHECK(targets[4] == testutil::strokes("3"));
}

TEST_CASE("label laws hold on random trees") {
    Rng rng = Rng::stream(21, 0);
    for (int i = 0; i < 300; ++i) {
        Tree tree = testutil::random_tree(rng, 6);
        auto elems = dfs_elements(tree, 0.5);
        StrokeTargets targets = stroke_targets(tree);
        auto tokens = radical_sequence(tree, RadicalLabelMode::implicit_order);

        REQUIRE(targets.size() == elems.size());
        REQUIRE(tokens.size() == elems.size());

        // The root target is the whole tree's stroke concatenation.
        CHECK(targets[0] == leaf_stroke_concat(tree));

        // Implicit orders are exactly 1..leaf_count, in order.
        int expected_order = 1;
        for (const RadicalToken& token : tokens) {
            if (const auto* order = std::get_if<LeafOrder>(&token)) {
                CHECK(order->value == expected_order);
                ++expected_order;
            }
        }
        CHECK(expected_order == leaf_count(tree) + 1);

        // Token kinds line up with the DFS elements; leaf targets are the
        // leaf's own strokes.
        for (std::size_t t = 0; t < elems.size(); ++t) {
            CHECK(elems[t].is_structure() ==
                  std::holds_alternative<StructureOp>(tokens[t]));
            if (!elems[t].is_structure()) CHECK(targets[t] == elems[t].strokes());
        }

        // Subtree law at every internal node, checked independently through
        // the level structure: a structure element's target equals the
        // concatenation of all leaf strokes until its subtree ends.
        for (std::size_t t = 0; t < elems.size(); ++t) {
            if (!elems[t].is_structure()) continue;
            StrokeSeq concat;
            for (std::size_t u = t + 1;
                 u < elems.size() && elems[u].level > elems[t].level; ++u) {
                if (!elems[u].is_structure()) {
                    concat.insert(concat.end(), elems[u].strokes().begin(),
                                  elems[u].strokes().end());
                }
            }
            CHECK(targets[t] == concat);
        }
    }
}

TEST_CASE("shifted_pair brackets the tokens with bos and eos") {
    std::vector<int> tokens{7, 8, 9};
    auto [input, target] = shifted_pair<int>(tokens, -1, -2);
    CHECK(input == std::vector<int>{-1, 7, 8, 9});
    CHECK(target == std::vector<int>{7, 8, 9, -2});

    auto [empty_in, empty_out] = shifted_pair<int>(std::vector<int>{}, -1, -2);
    CHECK(empty_in == std::vector<int>{-1});
    CHECK(empty_out == std::vector<int>{-2});
}

TEST_CASE("shifted_pair works over radical tokens") {
    Tree tree = parse_tree_expr("⿱ x:1 y:2");
    auto tokens = radical_sequence(tree, RadicalLabelMode::implicit_order);
    RadicalToken bos = ExplicitRadical{"<bos>"};
    RadicalToken eos = ExplicitRadical{"<eos>"};
    auto [input, target] = shifted_pair<RadicalToken>(tokens, bos, eos);
    REQUIRE(input.size() == tokens.size() + 1);
    REQUIRE(target.size() == tokens.size() + 1);
    CHECK(input.front() == bos);
    CHECK(target.back() == eos);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        CHECK(input[i + 1] == tokens[i]);
        CHECK(target[i] == tokens[i]);
    }
}

TEST_CASE("radical_token_to_string renders all three variants") {
    CHECK(radical_token_to_string(RadicalToken{StructureOp::left_right}) == "⿰");
    CHECK(radical_token_to_string(RadicalToken{LeafOrder{4}}) == "4");
    CHECK(radical_token_to_string(RadicalToken{ExplicitRadical{"water"}}) ==
          "water");
}
