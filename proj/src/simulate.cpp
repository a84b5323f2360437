#include "rsst/simulate.hpp"

#include <cstdio>
#include <thread>

#include <json.hpp>

#include "rsst/translator.hpp"

namespace rsst {

namespace {

// Stream ids keep the character-sampling, perturbation, and synthesis draws
// independent of each other for the same (seed, trial) pair.
constexpr std::uint64_t kPickStream = 0;
constexpr std::uint64_t kPerturbStream = 1;
constexpr std::uint64_t kSynthStream = 2;

void check_rate(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidParameterError(std::string(name) + " must be in [0, 1]");
    }
}

}  // namespace

void PerturbationConfig::validate() const {
    check_rate(p_sub, "p_sub");
    check_rate(p_del, "p_del");
    check_rate(p_ins, "p_ins");
    check_rate(p_struct, "p_struct");
    if (alphabet < 1 || alphabet > kMaxAlphabet) {
        throw InvalidParameterError("alphabet size must be in 1.." +
                                    std::to_string(kMaxAlphabet));
    }
}

namespace {

StrokeSymbol random_stroke(Rng& rng, int alphabet) {
    return StrokeSymbol{
        static_cast<std::uint8_t>(1 + rng.below(static_cast<std::uint32_t>(alphabet)))};
}

// Uniform over the alphabet minus `current`; identity is never drawn.
StrokeSymbol random_other_stroke(Rng& rng, int alphabet, StrokeSymbol current) {
    if (alphabet == 1) return current;  // nothing else to draw
    std::uint32_t r = 1 + rng.below(static_cast<std::uint32_t>(alphabet - 1));
    if (r >= current.code) ++r;
    return StrokeSymbol{static_cast<std::uint8_t>(r)};
}

StructureOp random_other_op(Rng& rng, StructureOp current) {
    auto ops = structure_ops_with_arity(arity(current));
    std::uint32_t r = rng.below(static_cast<std::uint32_t>(ops.size() - 1));
    if (ops[r] == current) r = static_cast<std::uint32_t>(ops.size() - 1);
    return ops[r];
}

StrokeSeq perturb_strokes(const StrokeSeq& strokes, const PerturbationConfig& cfg,
                          Rng& rng) {
    // Substitutions first, then deletions, then insertions.
    StrokeSeq current = strokes;
    for (StrokeSymbol& s : current) {
        if (rng.chance(cfg.p_sub)) s = random_other_stroke(rng, cfg.alphabet, s);
    }
    StrokeSeq kept;
    kept.reserve(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
        if (rng.chance(cfg.p_del)) {
            if (kept.empty() && i + 1 == current.size()) {
                // Deleting the last remaining stroke would empty the leaf;
                // the deletion is re-drawn as a substitution.
                kept.push_back(random_other_stroke(rng, cfg.alphabet, current[i]));
            }
            continue;
        }
        kept.push_back(current[i]);
    }
    StrokeSeq out;
    out.reserve(kept.size() + 2);
    for (std::size_t gap = 0; gap <= kept.size(); ++gap) {
        if (rng.chance(cfg.p_ins)) out.push_back(random_stroke(rng, cfg.alphabet));
        if (gap < kept.size()) out.push_back(kept[gap]);
    }
    return out;
}

Node perturb_node(const Node& node, const PerturbationConfig& cfg, Rng& rng) {
    if (node.is_leaf()) {
        const LeafNode& leaf = node.as_leaf();
        return Node::leaf(leaf.radical_id, perturb_strokes(leaf.strokes, cfg, rng));
    }
    const InternalNode& internal = node.as_internal();
    StructureOp op = internal.op;
    if (rng.chance(cfg.p_struct)) op = random_other_op(rng, op);
    std::vector<Node> children;
    children.reserve(internal.children.size());
    for (const Node& child : internal.children) {
        children.push_back(perturb_node(child, cfg, rng));
    }
    return Node::internal(op, std::move(children));
}

}  // namespace

Tree perturb(const Tree& tree, const PerturbationConfig& cfg,
             std::uint64_t trial_index) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, trial_index, kPerturbStream);
    return Tree{perturb_node(tree.root, cfg, rng)};
}

namespace {

constexpr int kRadicalPool = 40;
constexpr int kMaxLeafStrokes = 6;

std::string pool_radical(Rng& rng) {
    // Squared draw skews toward low indices so radical frequencies vary.
    double u = rng.unit();
    int idx = static_cast<int>(u * u * kRadicalPool);
    if (idx >= kRadicalPool) idx = kRadicalPool - 1;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "r%02d", idx);
    return buf;
}

Node synth_leaf(Rng& rng, int alphabet) {
    std::string id = pool_radical(rng);
    StrokeSeq strokes(1 + rng.below(kMaxLeafStrokes));
    for (StrokeSymbol& s : strokes) s = random_stroke(rng, alphabet);
    return Node::leaf(std::move(id), std::move(strokes));
}

Node synth_node(Rng& rng, int depth, int max_depth, int alphabet) {
    double p_internal = depth >= max_depth ? 0.0 : (depth == 0 ? 0.8 : 0.4);
    if (!rng.chance(p_internal)) return synth_leaf(rng, alphabet);
    StructureOp op = static_cast<StructureOp>(rng.below(kStructureOpCount));
    std::vector<Node> children;
    children.reserve(arity(op));
    for (int k = 0; k < arity(op); ++k) {
        children.push_back(synth_node(rng, depth + 1, max_depth, alphabet));
    }
    return Node::internal(op, std::move(children));
}

// A different structure over an existing stroke concatenation: the resulting
// record is stroke-level confusable with its source.
Node restructure_concat(Rng& rng, const StrokeSeq& concat) {
    int len = static_cast<int>(concat.size());
    int parts = (len >= 3 && rng.chance(0.2)) ? 3 : 2;
    auto ops = structure_ops_with_arity(parts);
    StructureOp op = ops[rng.below(static_cast<std::uint32_t>(ops.size()))];
    std::vector<int> cuts;
    if (parts == 2) {
        cuts = {1 + static_cast<int>(rng.below(len - 1))};
    } else {
        int c1 = 1 + static_cast<int>(rng.below(len - 2));
        int c2 = c1 + 1 + static_cast<int>(rng.below(len - 1 - c1));
        cuts = {c1, c2};
    }
    cuts.push_back(len);
    std::vector<Node> children;
    int start = 0;
    for (int cut : cuts) {
        StrokeSeq part(concat.begin() + start, concat.begin() + cut);
        children.push_back(Node::leaf(pool_radical(rng), std::move(part)));
        start = cut;
    }
    return Node::internal(op, std::move(children));
}

}  // namespace

Lexicon synth_lexicon(int count, std::uint64_t seed, int max_depth, int alphabet) {
    if (count <= 0) {
        throw InvalidParameterError("count must be positive");
    }
    if (max_depth < 0) {
        throw InvalidParameterError("max_depth must be >= 0");
    }
    if (alphabet < 1 || alphabet > kMaxAlphabet) {
        throw InvalidParameterError("alphabet size must be in 1.." +
                                    std::to_string(kMaxAlphabet));
    }
    Rng rng = Rng::stream(seed, 0, kSynthStream);
    std::vector<LexiconRecord> records;
    records.reserve(count);
    for (int i = 0; i < count; ++i) {
        Node root = [&] {
            if (i > 0 && rng.chance(0.1)) {
                const Tree& source = records[rng.below(i)].tree;
                StrokeSeq concat = leaf_stroke_concat(source);
                if (concat.size() >= 2) return restructure_concat(rng, concat);
            }
            return synth_node(rng, 0, max_depth, alphabet);
        }();
        char buf[16];
        std::snprintf(buf, sizeof(buf), "S%04d", i + 1);
        records.push_back(LexiconRecord{buf, Tree{std::move(root)}});
    }
    return Lexicon::from_records(std::move(records));
}

namespace {

struct TrialOutcome {
    bool ok_combined = false;
    bool ok_tree = false;
    bool ok_stroke = false;
    bool exact = false;
    double distance = 0.0;
};

}  // namespace

EvalReport evaluate(const Lexicon& lex, const PerturbationConfig& cfg,
                    std::uint64_t trials, const MetricParams& params,
                    int threads) {
    cfg.validate();
    params.validate();
    if (lex.empty()) {
        throw EmptyLexiconError("cannot evaluate on an empty lexicon");
    }
    if (trials == 0) {
        throw InvalidParameterError("trials must be positive");
    }
    Rectifier engine(lex, params);

    std::vector<std::string> truth_keys;
    truth_keys.reserve(lex.size());
    for (const LexiconRecord& rec : lex.records()) {
        truth_keys.push_back(serialize(rec.tree));
    }

    std::vector<TrialOutcome> outcomes(trials);
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            Rng pick = Rng::stream(cfg.seed, t, kPickStream);
            std::size_t idx = pick.below(static_cast<std::uint32_t>(lex.size()));
            Tree corrupted = perturb(lex.record(idx).tree, cfg, t);
            MultiRectifyResult multi = engine.rectify_all(corrupted);
            TrialOutcome& out = outcomes[t];
            const std::string& truth = truth_keys[idx];
            out.ok_combined = serialize(multi.combined.rectified) == truth;
            out.ok_tree = serialize(multi.tree_only.rectified) == truth;
            out.ok_stroke = serialize(multi.stroke_only.rectified) == truth;
            out.exact = multi.combined.exact_match;
            out.distance = multi.combined.distance;
        }
    };

    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    if (threads == 1 || trials < 2) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t n = static_cast<std::uint64_t>(threads);
        for (std::uint64_t k = 0; k < n; ++k) {
            std::uint64_t begin = trials * k / n;
            std::uint64_t end = trials * (k + 1) / n;
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }

    // Sequential reduction over the trial slots keeps the report independent
    // of the thread count.
    std::uint64_t ok_c = 0, ok_t = 0, ok_s = 0, exact = 0;
    double dist_sum = 0.0;
    for (const TrialOutcome& out : outcomes) {
        ok_c += out.ok_combined;
        ok_t += out.ok_tree;
        ok_s += out.ok_stroke;
        exact += out.exact;
        dist_sum += out.distance;
    }
    EvalReport report;
    report.trials = trials;
    report.top1_combined = static_cast<double>(ok_c) / static_cast<double>(trials);
    report.top1_tree_only = static_cast<double>(ok_t) / static_cast<double>(trials);
    report.top1_stroke_only = static_cast<double>(ok_s) / static_cast<double>(trials);
    report.exact_match_rate =
        static_cast<double>(exact) / static_cast<double>(trials);
    report.mean_distance = dist_sum / static_cast<double>(trials);
    report.config = cfg;
    report.params = params;
    return report;
}

std::string EvalReport::to_json() const {
    nlohmann::json j{
        {"trials", trials},
        {"top1_combined", top1_combined},
        {"top1_tree_only", top1_tree_only},
        {"top1_stroke_only", top1_stroke_only},
        {"exact_match_rate", exact_match_rate},
        {"mean_distance", mean_distance},
        {"config",
         {{"p_sub", config.p_sub},
          {"p_del", config.p_del},
          {"p_ins", config.p_ins},
          {"p_struct", config.p_struct},
          {"seed", config.seed},
          {"alphabet", config.alphabet},
          {"noise_model", "synthetic"}}},
        {"params", {{"alpha", params.alpha}, {"beta", params.beta}}},
    };
    return j.dump(2);
}

EvalReport EvalReport::from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        EvalReport r;
        r.trials = j.at("trials").get<std::uint64_t>();
        r.top1_combined = j.at("top1_combined").get<double>();
        r.top1_tree_only = j.at("top1_tree_only").get<double>();
        r.top1_stroke_only = j.at("top1_stroke_only").get<double>();
        r.exact_match_rate = j.at("exact_match_rate").get<double>();
        r.mean_distance = j.at("mean_distance").get<double>();
        const auto& cfg = j.at("config");
        r.config.p_sub = cfg.at("p_sub").get<double>();
        r.config.p_del = cfg.at("p_del").get<double>();
        r.config.p_ins = cfg.at("p_ins").get<double>();
        r.config.p_struct = cfg.at("p_struct").get<double>();
        r.config.seed = cfg.at("seed").get<std::uint64_t>();
        r.config.alphabet = cfg.at("alphabet").get<int>();
        const auto& params = j.at("params");
        r.params.alpha = params.at("alpha").get<double>();
        r.params.beta = params.at("beta").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad evaluation report JSON: ") + e.what());
    }
}

}  // namespace rsst
