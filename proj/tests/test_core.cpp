#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsst/core.hpp"
#include "testutil.hpp"

using namespace rsst;

TEST_CASE("stroke digits map 1..35 to 1..9a..z and back") {
    CHECK(stroke_to_char(StrokeSymbol{1}) == '1');
    CHECK(stroke_to_char(StrokeSymbol{9}) == '9');
    CHECK(stroke_to_char(StrokeSymbol{10}) == 'a');
    CHECK(stroke_to_char(StrokeSymbol{35}) == 'z');
    for (int code = 1; code <= kMaxAlphabet; ++code) {
        StrokeSymbol s{static_cast<std::uint8_t>(code)};
        auto back = stroke_code_from_char(stroke_to_char(s));
        REQUIRE(back.has_value());
        CHECK(*back == code);
    }
    CHECK_FALSE(stroke_code_from_char('!').has_value());
    CHECK_FALSE(stroke_code_from_char('A').has_value());
    CHECK_FALSE(stroke_code_from_char(' ').has_value());
    CHECK(stroke_code_from_char('0') == 0);  // a digit, but not a valid code
}

TEST_CASE("operator table: arities and glyph round trip") {
    CHECK(arity(StructureOp::left_middle_right) == 3);
    CHECK(arity(StructureOp::above_middle_below) == 3);
    int binary = 0, ternary = 0;
    for (int i = 0; i < kStructureOpCount; ++i) {
        auto op = static_cast<StructureOp>(i);
        const int a = arity(op);
        CHECK((a == 2 || a == 3));
        (a == 2 ? binary : ternary) += 1;
        auto back = structure_op_from_glyph(glyph(op));
        REQUIRE(back.has_value());
        CHECK(*back == op);
    }
    CHECK(binary == 10);
    CHECK(ternary == 2);
    CHECK(structure_ops_with_arity(2).size() == 10);
    CHECK(structure_ops_with_arity(3).size() == 2);
    CHECK(structure_ops_with_arity(4).empty());
    CHECK_FALSE(structure_op_from_glyph("x").has_value());
    CHECK_FALSE(structure_op_from_glyph("").has_value());
}

TEST_CASE("node factories enforce the invariants") {
    auto l1 = testutil::leaf("1");
    auto l2 = testutil::leaf("2");
    CHECK_THROWS_AS(Node::internal(StructureOp::left_right, {}), ArityError);
    CHECK_THROWS_AS(Node::internal(StructureOp::left_right, {l1}), ArityError);
    CHECK_THROWS_AS(Node::internal(StructureOp::left_middle_right, {l1, l2}),
                    ArityError);
    CHECK_THROWS_AS(Node::leaf("r", {}), EmptyLeafError);
    CHECK_NOTHROW(Node::internal(StructureOp::left_right, {l1, l2}));
}

TEST_CASE("parse and serialize are inverse on a nested expression") {
    const std::string text = "⿰ a:12 ⿱ b:3 c:45";
    Tree tree = parse_tree_expr(text);
    CHECK(serialize(tree) == "⿰ :12 ⿱ :3 :45");
    CHECK(serialize(tree, /*include_radical_ids=*/true) == text);
    CHECK(parse_tree_expr(serialize(tree, true)) == tree);

    const InternalNode& root = tree.root.as_internal();
    CHECK(root.op == StructureOp::left_right);
    REQUIRE(root.children.size() == 2);
    CHECK(root.children[0].as_leaf().radical_id == "a");
    CHECK(root.children[0].as_leaf().strokes == testutil::strokes("12"));
    CHECK(root.children[1].as_internal().op == StructureOp::above_below);
}

TEST_CASE("parse accepts ternary operators and anonymous leaves") {
    Tree tree = parse_tree_expr("⿲ :1 :2 :3");
    const InternalNode& root = tree.root.as_internal();
    CHECK(root.op == StructureOp::left_middle_right);
    CHECK(root.children.size() == 3);
    CHECK(root.children[2].as_leaf().radical_id.empty());
    CHECK(serialize(tree, true) == "⿲ :1 :2 :3");
}

TEST_CASE("parse is whitespace tolerant") {
    Tree a = parse_tree_expr("⿱ x:1 y:2");
    Tree b = parse_tree_expr("  ⿱\t x:1 \n\n y:2\r\n");
    CHECK(a == b);
}

TEST_CASE("a bare leaf expression is a tree") {
    Tree tree = parse_tree_expr("water:4321");
    CHECK(tree.root.is_leaf());
    CHECK(tree.root.as_leaf().radical_id == "water");
    CHECK(serialize(tree) == ":4321");
}

TEST_CASE("parse rejects malformed expressions") {
    CHECK_THROWS_AS(parse_tree_expr(""), SyntaxError);
    CHECK_THROWS_AS(parse_tree_expr("   \t\n"), SyntaxError);
    CHECK_THROWS_AS(parse_tree_expr("hello"), SyntaxError);       // no colon
    CHECK_THROWS_AS(parse_tree_expr("⿰ a:1"), ArityError);       // missing child
    CHECK_THROWS_AS(parse_tree_expr("⿲ a:1 b:2"), ArityError);   // ternary
    CHECK_THROWS_AS(parse_tree_expr("a:1 b:2"), SyntaxError);     // trailing
    CHECK_THROWS_AS(parse_tree_expr("⿰ a:1 b:2 c:3"), SyntaxError);
    CHECK_THROWS_AS(parse_tree_expr("a:"), EmptyLeafError);
    CHECK_THROWS_AS(parse_tree_expr("a:1x2"), AlphabetError);     // 'x' = 33 > 5
    CHECK_THROWS_AS(parse_tree_expr("a:1!2"), SyntaxError);
    CHECK_THROWS_AS(parse_tree_expr("a:190"), AlphabetError);     // 9 > 5, 0 < 1
    CHECK_THROWS_AS(parse_tree_expr("a:0"), AlphabetError);
    CHECK_THROWS_AS(parse_tree_expr(":1", 0), InvalidParameterError);
    CHECK_THROWS_AS(parse_tree_expr(":1", 36), InvalidParameterError);
}

TEST_CASE("larger alphabets use base-36 digits") {
    Tree tree = parse_tree_expr("r:19az", kMaxAlphabet);
    const StrokeSeq& s = tree.root.as_leaf().strokes;
    REQUIRE(s.size() == 4);
    CHECK(s[0].code == 1);
    CHECK(s[1].code == 9);
    CHECK(s[2].code == 10);
    CHECK(s[3].code == 35);
    CHECK(serialize(tree) == ":19az");
    CHECK_THROWS_AS(parse_tree_expr("r:19az", 34), AlphabetError);
}

TEST_CASE("dfs linearization: order, levels, weights, lengths") {
    // ⿰ at level 0; :12 and ⿱ at level 1; :3 and :45 at level 2.
    Tree tree = parse_tree_expr("⿰ a:12 ⿱ b:3 c:45");
    auto elems = dfs_elements(tree, 0.5);
    REQUIRE(elems.size() == 5);

    CHECK(elems[0].is_structure());
    CHECK(elems[0].op() == StructureOp::left_right);
    CHECK_FALSE(elems[1].is_structure());
    CHECK(elems[1].strokes() == testutil::strokes("12"));
    CHECK(elems[2].op() == StructureOp::above_below);
    CHECK(elems[3].strokes() == testutil::strokes("3"));
    CHECK(elems[4].strokes() == testutil::strokes("45"));

    const int levels[] = {0, 1, 1, 2, 2};
    const double weights[] = {1.0, 0.5, 0.5, 0.25, 0.25};
    const std::size_t lens[] = {1, 2, 1, 1, 2};
    for (int i = 0; i < 5; ++i) {
        CHECK(elems[i].level == levels[i]);
        CHECK(elems[i].weight == doctest::Approx(weights[i]).epsilon(1e-12));
        CHECK(elems[i].len() == lens[i]);
    }
}

TEST_CASE("dfs weights follow alpha^level for other alphas") {
    Tree tree = parse_tree_expr("⿱ :1 ⿱ :2 :3");
    auto elems = dfs_elements(tree, 0.3);
    CHECK(elems[0].weight == doctest::Approx(1.0));
    CHECK(elems[1].weight == doctest::Approx(0.3));
    CHECK(elems[3].weight == doctest::Approx(0.09));
    CHECK_THROWS_AS(dfs_elements(tree, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(dfs_elements(tree, 1.5), InvalidParameterError);
    CHECK_NOTHROW(dfs_elements(tree, 1.0));
}

TEST_CASE("leaf_stroke_concat flattens leaves in dfs order") {
    Tree tree = parse_tree_expr("⿰ a:12 ⿱ b:3 c:45");
    CHECK(leaf_stroke_concat(tree) == testutil::strokes("12345"));
    CHECK(leaf_count(tree) == 3);
    CHECK(depth(tree) == 2);

    Tree single = parse_tree_expr(":5");
    CHECK(leaf_stroke_concat(single) == testutil::strokes("5"));
    CHECK(leaf_count(single) == 1);
    CHECK(depth(single) == 0);
}

TEST_CASE("node equality includes radical ids, serialization drops them") {
    Tree named = parse_tree_expr("⿰ a:1 b:2");
    Tree anon = parse_tree_expr("⿰ :1 :2");
    CHECK(named != anon);
    CHECK(serialize(named) == serialize(anon));
    CHECK(serialize(named, true) != serialize(anon, true));
}

TEST_CASE("random trees round-trip through the text format") {
    Rng rng = Rng::stream(7, 0);
    for (int i = 0; i < 200; ++i) {
        Tree tree = testutil::random_tree(rng, 6);
        Tree back = parse_tree_expr(serialize(tree, true));
        CHECK(back == tree);
        CHECK(serialize(back) == serialize(tree));
    }
}
