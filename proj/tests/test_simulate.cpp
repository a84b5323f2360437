#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rsst/simulate.hpp"
#include "testutil.hpp"

using namespace rsst;

namespace {

int count_internal(const Node& node) {
    if (node.is_leaf()) return 0;
    int n = 1;
    for (const Node& c : node.as_internal().children) n += count_internal(c);
    return n;
}

void collect_ops(const Node& node, std::vector<StructureOp>& out) {
    if (node.is_leaf()) return;
    out.push_back(node.as_internal().op);
    for (const Node& c : node.as_internal().children) collect_ops(c, out);
}

}  // namespace

TEST_CASE("perturbation config validates rates and alphabet") {
    PerturbationConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.p_sub = 1.5;
    CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
    cfg.p_sub = -0.1;
    CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
    cfg = PerturbationConfig{};
    cfg.alphabet = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
    cfg.alphabet = 36;
    CHECK_THROWS_AS(cfg.validate(), InvalidParameterError);
}

TEST_CASE("zero rates leave the tree unchanged") {
    Rng rng = Rng::stream(31, 0);
    PerturbationConfig cfg;
    cfg.seed = 7;
    for (int i = 0; i < 50; ++i) {
        Tree tree = testutil::random_tree(rng, 5);
        CHECK(perturb(tree, cfg, i) == tree);
    }
}

TEST_CASE("perturb is deterministic per (seed, trial)") {
    Tree tree = parse_tree_expr("⿰ a:123 ⿱ b:45 c:312");
    PerturbationConfig cfg;
    cfg.p_sub = cfg.p_del = cfg.p_ins = 0.3;
    cfg.p_struct = 0.5;
    cfg.seed = 42;
    Tree first = perturb(tree, cfg, 9);
    CHECK(perturb(tree, cfg, 9) == first);

    // Different trials draw from different streams.
    std::set<std::string> variants;
    for (std::uint64_t t = 0; t < 40; ++t) {
        variants.insert(serialize(perturb(tree, cfg, t), true));
    }
    CHECK(variants.size() > 1);
}

TEST_CASE("p_struct=1 swaps every operator and preserves shape") {
    Rng rng = Rng::stream(33, 0);
    PerturbationConfig cfg;
    cfg.p_struct = 1.0;
    cfg.seed = 5;
    for (int i = 0; i < 40; ++i) {
        Tree tree = testutil::random_tree(rng, 5);
        Tree out = perturb(tree, cfg, i);
        CHECK(leaf_count(out) == leaf_count(tree));
        CHECK(depth(out) == depth(tree));
        CHECK(leaf_stroke_concat(out) == leaf_stroke_concat(tree));
        std::vector<StructureOp> before, after;
        collect_ops(tree.root, before);
        collect_ops(out.root, after);
        REQUIRE(before.size() == after.size());
        for (std::size_t k = 0; k < before.size(); ++k) {
            CHECK(before[k] != after[k]);
            CHECK(arity(before[k]) == arity(after[k]));
        }
    }
}

TEST_CASE("p_sub=1 rewrites every stroke in place") {
    Tree tree = parse_tree_expr("⿰ a:123 b:45");
    PerturbationConfig cfg;
    cfg.p_sub = 1.0;
    cfg.seed = 11;
    Tree out = perturb(tree, cfg, 0);
    StrokeSeq before = leaf_stroke_concat(tree);
    StrokeSeq after = leaf_stroke_concat(out);
    REQUIRE(after.size() == before.size());
    for (std::size_t i = 0; i < before.size(); ++i) CHECK(after[i] != before[i]);
    CHECK(count_internal(out.root) == count_internal(tree.root));
}

TEST_CASE("p_del=1 keeps leaves non-empty via the substitution fallback") {
    Tree tree = parse_tree_expr("⿰ a:12345 ⿱ b:1 c:22");
    PerturbationConfig cfg;
    cfg.p_del = 1.0;
    cfg.seed = 13;
    Tree out = perturb(tree, cfg, 0);
    CHECK(leaf_count(out) == 3);
    // Every leaf collapses to exactly one stroke, never zero.
    std::vector<const Node*> stack{&out.root};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (n->is_leaf()) {
            CHECK(n->as_leaf().strokes.size() == 1);
        } else {
            for (const Node& c : n->as_internal().children) stack.push_back(&c);
        }
    }
}

TEST_CASE("p_ins=1 fills every gap") {
    Tree tree = parse_tree_expr("a:123");
    PerturbationConfig cfg;
    cfg.p_ins = 1.0;
    cfg.seed = 17;
    Tree out = perturb(tree, cfg, 0);
    CHECK(out.root.as_leaf().strokes.size() == 7);  // 3 kept + 4 gaps
    // Original strokes survive at the odd positions.
    const StrokeSeq& s = out.root.as_leaf().strokes;
    CHECK(s[1] == StrokeSymbol{1});
    CHECK(s[3] == StrokeSymbol{2});
    CHECK(s[5] == StrokeSymbol{3});
}

TEST_CASE("perturbed output is always a valid parseable tree") {
    PerturbationConfig cfg;
    cfg.p_sub = cfg.p_del = cfg.p_ins = 0.4;
    cfg.p_struct = 0.4;
    cfg.seed = 19;
    Rng rng = Rng::stream(35, 0);
    for (int i = 0; i < 100; ++i) {
        Tree tree = testutil::random_tree(rng, 5);
        Tree out = perturb(tree, cfg, i);
        CHECK(parse_tree_expr(serialize(out, true)) == out);
    }
}

TEST_CASE("perturb preserves radical ids on surviving leaves") {
    Tree tree = parse_tree_expr("⿰ left:123 right:45");
    PerturbationConfig cfg;
    cfg.p_sub = 1.0;
    cfg.seed = 23;
    Tree out = perturb(tree, cfg, 0);
    CHECK(out.root.as_internal().children[0].as_leaf().radical_id == "left");
    CHECK(out.root.as_internal().children[1].as_leaf().radical_id == "right");
}

TEST_CASE("synth_lexicon is deterministic and validates parameters") {
    Lexicon a = synth_lexicon(60, 4);
    Lexicon b = synth_lexicon(60, 4);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.size() == 60);
    CHECK(synth_lexicon(60, 5).to_text() != a.to_text());
    CHECK_THROWS_AS(synth_lexicon(0, 1), InvalidParameterError);
    CHECK_THROWS_AS(synth_lexicon(-5, 1), InvalidParameterError);
    CHECK_THROWS_AS(synth_lexicon(10, 1, -1), InvalidParameterError);
    CHECK_THROWS_AS(synth_lexicon(10, 1, 3, 0), InvalidParameterError);
}

TEST_CASE("synth_lexicon produces well-formed, bounded trees") {
    Lexicon lex = synth_lexicon(150, 6, 3);
    std::set<std::string> codepoints;
    for (const LexiconRecord& rec : lex.records()) {
        CHECK(codepoints.insert(rec.codepoint).second);
        CHECK(depth(rec.tree) <= 3);
        CHECK(parse_tree_expr(serialize(rec.tree, true)) == rec.tree);
    }
}

TEST_CASE("synth_lexicon seeds stroke-level confusables") {
    // Restructured records share a stroke concatenation with their source, so
    // a lexicon this size reliably contains stroke-level groups.
    Lexicon lex = synth_lexicon(300, 42);
    CHECK(confusable_character_count(confusable_set_stroke_level(lex)) > 0);
    CHECK(confusable_character_count(confusable_set(lex)) <=
          confusable_character_count(confusable_set_stroke_level(lex)));
}

TEST_CASE("evaluate validates its inputs") {
    Lexicon lex = synth_lexicon(20, 8);
    PerturbationConfig cfg;
    CHECK_THROWS_AS(evaluate(lex, cfg, 0), InvalidParameterError);
    CHECK_THROWS_AS(evaluate(Lexicon::from_records({}), cfg, 10),
                    EmptyLexiconError);
    PerturbationConfig bad;
    bad.p_sub = 2.0;
    CHECK_THROWS_AS(evaluate(lex, bad, 10), InvalidParameterError);
    CHECK_THROWS_AS(evaluate(lex, cfg, 10, MetricParams{0.0, 1.0}),
                    InvalidParameterError);
}

TEST_CASE("evaluate under zero noise is perfect") {
    Lexicon lex = synth_lexicon(50, 9);
    PerturbationConfig cfg;
    cfg.seed = 1;
    EvalReport report = evaluate(lex, cfg, 200);
    CHECK(report.trials == 200);
    CHECK(report.top1_combined == 1.0);
    CHECK(report.top1_tree_only == 1.0);
    CHECK(report.top1_stroke_only == 1.0);
    CHECK(report.exact_match_rate == 1.0);
    CHECK(report.mean_distance == 0.0);
}

TEST_CASE("evaluate is bit-identical across runs and thread counts") {
    Lexicon lex = synth_lexicon(60, 10);
    PerturbationConfig cfg;
    cfg.p_sub = cfg.p_del = 0.1;
    cfg.p_struct = 0.1;
    cfg.seed = 42;
    EvalReport one = evaluate(lex, cfg, 400, {}, 1);
    EvalReport again = evaluate(lex, cfg, 400, {}, 1);
    EvalReport four = evaluate(lex, cfg, 400, {}, 4);
    EvalReport many = evaluate(lex, cfg, 400, {}, 13);
    EvalReport hw = evaluate(lex, cfg, 400, {}, 0);  // hardware concurrency
    CHECK(one.to_json() == again.to_json());
    CHECK(one.to_json() == four.to_json());
    CHECK(one.to_json() == many.to_json());
    CHECK(one.to_json() == hw.to_json());
}

TEST_CASE("noisy evaluation stays in range and reacts to noise") {
    Lexicon lex = synth_lexicon(60, 12);
    PerturbationConfig cfg;
    cfg.p_sub = cfg.p_del = 0.05;
    cfg.p_struct = 0.05;
    cfg.seed = 42;
    EvalReport report = evaluate(lex, cfg, 500);
    for (double rate : {report.top1_combined, report.top1_tree_only,
                        report.top1_stroke_only, report.exact_match_rate}) {
        CHECK(rate >= 0.0);
        CHECK(rate <= 1.0);
    }
    CHECK(report.mean_distance >= 0.0);
    CHECK(report.exact_match_rate < 1.0);
    CHECK(report.top1_combined > 0.5);  // mild noise: mostly recoverable
}

TEST_CASE("eval report round-trips through JSON") {
    Lexicon lex = synth_lexicon(30, 14);
    PerturbationConfig cfg;
    cfg.p_sub = 0.1;
    cfg.p_ins = 0.02;
    cfg.seed = 3;
    EvalReport report = evaluate(lex, cfg, 50);
    EvalReport back = EvalReport::from_json(report.to_json());
    CHECK(back.to_json() == report.to_json());
    CHECK(back.trials == report.trials);
    CHECK(back.top1_combined == report.top1_combined);
    CHECK(back.config.p_sub == report.config.p_sub);
    CHECK(back.config.seed == report.config.seed);
    CHECK(back.params.alpha == report.params.alpha);
    CHECK_THROWS_AS(EvalReport::from_json("{}"), FormatError);
    CHECK_THROWS_AS(EvalReport::from_json("not json"), FormatError);
}

TEST_CASE("tree-aware metrics outscore stroke-only on layout confusables") {
    // Three pairs; within each pair the stroke concatenation is identical and
    // only an inner operator differs. Stroke-only rectification cannot tell
    // the members apart and tie-breaks to the earlier one, so draws of the
    // later member are lost whenever the query is perturbed; the tree-aware
    // metrics keep separating them.
    Lexicon lex = Lexicon::from_records({
        LexiconRecord{"P1a", parse_tree_expr("⿱ a:1 ⿰ b:22 c:3")},
        LexiconRecord{"P1b", parse_tree_expr("⿱ a:1 ⿴ b:22 c:3")},
        LexiconRecord{"P2a", parse_tree_expr("⿰ d:44 ⿱ e:5 f:12")},
        LexiconRecord{"P2b", parse_tree_expr("⿰ d:44 ⿺ e:5 f:12")},
        LexiconRecord{"P3a", parse_tree_expr("⿲ g:3 ⿰ h:2 i:1 j:55")},
        LexiconRecord{"P3b", parse_tree_expr("⿲ g:3 ⿻ h:2 i:1 j:55")},
    });
    PerturbationConfig cfg;
    cfg.p_sub = 0.3;  // stroke noise only: concatenations stay pair-ambiguous
    cfg.seed = 5;
    EvalReport report = evaluate(lex, cfg, 2000);
    CHECK(report.top1_stroke_only < report.top1_combined);
    CHECK(report.top1_stroke_only < report.top1_tree_only);
    CHECK(report.top1_combined > 0.9);
}
