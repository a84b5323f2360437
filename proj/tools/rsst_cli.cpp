// Command-line front end for the radical-structured stroke tree library:
// lexicon building, distances, rectification, translation, confusable
// analysis, zero-shot splits, label export, and the perturbation benchmark.
//
// Exit codes: 0 success, 1 usage error, 2 data error. Errors print to stderr
// as "error[<code>]: <message>" with the library's stable code strings.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsst/labelgen.hpp"
#include "rsst/lexicon.hpp"
#include "rsst/metric.hpp"
#include "rsst/simulate.hpp"
#include "rsst/translator.hpp"

namespace {

using nlohmann::json;

struct CliConfig {
    std::string lexicon_path;
    std::string feature_path;
    std::string format = "text";
    double alpha = 0.5;
    double beta = 1.0;
    int alphabet = rsst::kDefaultAlphabet;
    std::uint64_t seed = 0;

    bool json_output() const { return format == "json"; }
    rsst::MetricParams metric_params() const { return {alpha, beta}; }

    rsst::Lexicon load_lexicon() const {
        if (lexicon_path.empty()) {
            throw CLI::RequiredError("--lexicon");
        }
        return rsst::Lexicon::from_file(lexicon_path, alphabet);
    }
};

std::string strokes_to_string(const rsst::StrokeSeq& strokes) {
    std::string out;
    out.reserve(strokes.size());
    for (rsst::StrokeSymbol s : strokes) out += rsst::stroke_to_char(s);
    return out;
}

void cmd_build(const CliConfig& cfg) {
    rsst::Lexicon lex = cfg.load_lexicon();
    const std::size_t confusable =
        rsst::confusable_character_count(rsst::confusable_set(lex));
    if (cfg.json_output()) {
        json records = json::array();
        for (const rsst::LexiconRecord& rec : lex.records()) {
            records.push_back({{"codepoint", rec.codepoint},
                               {"tree", rsst::serialize(rec.tree, true)}});
        }
        std::cout << json{{"records", lex.size()},
                          {"distinct_trees", lex.buckets().size()},
                          {"confusable_characters", confusable},
                          {"lexicon", records}}
                         .dump(2)
                  << "\n";
        return;
    }
    // Canonical lexicon on stdout; stats on stderr so the output stays a
    // valid lexicon file.
    std::cout << lex.to_text();
    std::cerr << "records: " << lex.size()
              << ", distinct trees: " << lex.buckets().size()
              << ", confusable characters: " << confusable << "\n";
}

void cmd_dist(const CliConfig& cfg, const std::string& expr_a,
              const std::string& expr_b) {
    rsst::Tree a = rsst::parse_tree_expr(expr_a, cfg.alphabet);
    rsst::Tree b = rsst::parse_tree_expr(expr_b, cfg.alphabet);
    rsst::MetricParams params = cfg.metric_params();
    params.validate();
    const int ed =
        rsst::edit_distance(rsst::leaf_stroke_concat(a), rsst::leaf_stroke_concat(b));
    const double d_tree = rsst::weighted_edit_distance(a, b, params);
    const int d_stroke = rsst::stroke_distance(a, b);
    const double d_combined = d_tree + params.beta * d_stroke;
    if (cfg.json_output()) {
        std::cout << json{{"edit_distance", ed},
                          {"d_tree", d_tree},
                          {"d_stroke", d_stroke},
                          {"d_combined", d_combined}}
                         .dump(2)
                  << "\n";
        return;
    }
    std::cout << "edit_distance: " << ed << "\n"
              << "d_tree: " << d_tree << "\n"
              << "d_stroke: " << d_stroke << "\n"
              << "d_combined: " << d_combined << "\n";
}

json rectify_result_to_json(const rsst::RectifyResult& res) {
    return json{{"rectified", rsst::serialize(res.rectified)},
                {"distance", res.distance},
                {"candidates", res.candidates},
                {"exact_match", res.exact_match}};
}

void cmd_rectify(const CliConfig& cfg, const std::string& expr) {
    rsst::Lexicon lex = cfg.load_lexicon();
    rsst::Tree query = rsst::parse_tree_expr(expr, cfg.alphabet);
    rsst::RectifyResult res = rsst::rectify(query, lex, cfg.metric_params());
    std::cout << rectify_result_to_json(res).dump(2) << "\n";
}

void cmd_translate(const CliConfig& cfg, const std::string& expr,
                   const std::string& query_feature_text) {
    rsst::Lexicon lex = cfg.load_lexicon();
    rsst::Tree query = rsst::parse_tree_expr(expr, cfg.alphabet);

    std::optional<rsst::FeatureStore> store;
    if (!cfg.feature_path.empty()) {
        store = rsst::FeatureStore::load_binary(cfg.feature_path);
    }
    std::optional<rsst::FeatureVector> feature;
    if (!query_feature_text.empty()) {
        json parsed = json::parse(query_feature_text, nullptr,
                                  /*allow_exceptions=*/false);
        if (parsed.is_discarded() || !parsed.is_array() || parsed.empty()) {
            throw rsst::FormatError(
                "--query-feature must be a non-empty JSON array of numbers");
        }
        rsst::FeatureVector vec;
        for (const auto& part : parsed) {
            if (!part.is_number()) {
                throw rsst::FormatError(
                    "--query-feature must contain only numbers");
            }
            vec.push_back(part.get<float>());
        }
        feature = std::move(vec);
    }

    rsst::TranslateResult res =
        rsst::translate(query, lex, cfg.metric_params(), feature,
                        store ? &*store : nullptr);
    if (cfg.json_output()) {
        std::cout << json{{"codepoint", res.codepoint},
                          {"rectification",
                           rectify_result_to_json(res.rectification)}}
                         .dump(2)
                  << "\n";
        return;
    }
    std::cout << res.codepoint << "\n";
}

void cmd_confusables(const CliConfig& cfg, bool stroke_level) {
    rsst::Lexicon lex = cfg.load_lexicon();
    rsst::ConfusableGroups groups = stroke_level
                                        ? rsst::confusable_set_stroke_level(lex)
                                        : rsst::confusable_set(lex);
    if (cfg.json_output()) {
        std::cout << json{{"level", stroke_level ? "stroke" : "tree"},
                          {"groups", groups},
                          {"characters", rsst::confusable_character_count(groups)}}
                         .dump(2)
                  << "\n";
        return;
    }
    for (const auto& group : groups) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << group[i];
        }
        std::cout << "\n";
    }
}

void cmd_split_char(const CliConfig& cfg, int m, int n_last) {
    rsst::Lexicon lex = cfg.load_lexicon();
    std::vector<std::string> alphabet;
    alphabet.reserve(lex.size());
    for (const rsst::LexiconRecord& rec : lex.records()) {
        alphabet.push_back(rec.codepoint);
    }
    rsst::SplitResult split = rsst::char_zero_shot_split(lex, alphabet, m, n_last);
    if (cfg.json_output()) {
        std::cout << json{{"train", split.train}, {"test", split.test}}.dump(2)
                  << "\n";
        return;
    }
    std::cout << rsst::split_to_text(split);
}

void cmd_split_radical(const CliConfig& cfg, int n) {
    rsst::Lexicon lex = cfg.load_lexicon();
    rsst::SplitResult split = rsst::radical_zero_shot_split(lex, n);
    if (cfg.json_output()) {
        std::cout << json{{"train", split.train}, {"test", split.test}}.dump(2)
                  << "\n";
        return;
    }
    std::cout << rsst::split_to_text(split);
}

void cmd_labels(const CliConfig& cfg, bool explicit_mode) {
    rsst::Lexicon lex = cfg.load_lexicon();
    const rsst::RadicalLabelMode mode = explicit_mode
                                            ? rsst::RadicalLabelMode::explicit_radical
                                            : rsst::RadicalLabelMode::implicit_order;
    // JSON-lines: one object per character.
    for (const rsst::LexiconRecord& rec : lex.records()) {
        json tokens = json::array();
        for (const rsst::RadicalToken& token :
             rsst::radical_sequence(rec.tree, mode)) {
            tokens.push_back(rsst::radical_token_to_string(token));
        }
        json targets = json::array();
        for (const rsst::StrokeSeq& target : rsst::stroke_targets(rec.tree)) {
            targets.push_back(strokes_to_string(target));
        }
        std::cout << json{{"codepoint", rec.codepoint},
                          {"radical_tokens", tokens},
                          {"stroke_targets", targets}}
                         .dump()
                  << "\n";
    }
}

void cmd_eval(const CliConfig& cfg, const rsst::PerturbationConfig& noise,
              std::uint64_t trials, int threads) {
    rsst::Lexicon lex = cfg.load_lexicon();
    rsst::MetricParams params = cfg.metric_params();
    rsst::EvalReport report = rsst::evaluate(lex, noise, trials, params, threads);
    std::cout << report.to_json() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Radical-structured stroke tree toolkit"};
    app.require_subcommand(1);
    CliConfig cfg;
    app.add_option("--lexicon", cfg.lexicon_path,
                   "Lexicon file: <codepoint><TAB><tree-expression> per line");
    app.add_option("--features", cfg.feature_path,
                   "Binary feature store for confusable disambiguation");
    app.add_option("--alpha", cfg.alpha, "Level attenuation factor in (0,1]")
        ->capture_default_str();
    app.add_option("--beta", cfg.beta, "Stroke-distance weight >= 0")
        ->capture_default_str();
    app.add_option("--alphabet", cfg.alphabet, "Stroke alphabet size (1..35)")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* build = app.add_subcommand(
        "build", "Validate a lexicon file and print its canonical form");
    build->callback([&] { cmd_build(cfg); });

    auto* dist = app.add_subcommand(
        "dist", "Distances between two tree expressions");
    auto expr_a = std::make_shared<std::string>();
    auto expr_b = std::make_shared<std::string>();
    dist->add_option("exprA", *expr_a, "First tree expression")->required();
    dist->add_option("exprB", *expr_b, "Second tree expression")->required();
    dist->callback([&, expr_a, expr_b] { cmd_dist(cfg, *expr_a, *expr_b); });

    auto* rectify = app.add_subcommand(
        "rectify", "Rectify a tree expression against the lexicon");
    auto rectify_expr = std::make_shared<std::string>();
    rectify->add_option("expr", *rectify_expr, "Tree expression")->required();
    rectify->callback([&, rectify_expr] { cmd_rectify(cfg, *rectify_expr); });

    auto* translate = app.add_subcommand(
        "translate", "Translate a tree expression to a character");
    auto translate_expr = std::make_shared<std::string>();
    auto query_feature = std::make_shared<std::string>();
    translate->add_option("expr", *translate_expr, "Tree expression")->required();
    translate->add_option("--query-feature", *query_feature,
                          "Query feature vector as a JSON array");
    translate->callback([&, translate_expr, query_feature] {
        cmd_translate(cfg, *translate_expr, *query_feature);
    });

    auto* confusables = app.add_subcommand(
        "confusables", "List confusable character groups");
    auto stroke_level = std::make_shared<bool>(false);
    confusables->add_flag("--stroke-level", *stroke_level,
                          "Group by stroke concatenation instead of tree");
    confusables->callback([&, stroke_level] { cmd_confusables(cfg, *stroke_level); });

    auto* split = app.add_subcommand("split", "Zero-shot train/test splits");
    split->require_subcommand(1);
    auto* split_char = split->add_subcommand(
        "char", "First m classes train, last n-last classes test");
    auto m = std::make_shared<int>(0);
    auto n_last = std::make_shared<int>(0);
    split_char->add_option("--m", *m, "Training class count")->required();
    split_char->add_option("--n-last", *n_last, "Test class count")->required();
    split_char->callback([&, m, n_last] { cmd_split_char(cfg, *m, *n_last); });
    auto* split_radical = split->add_subcommand(
        "radical", "Characters with a radical of frequency <= n test");
    auto n = std::make_shared<int>(0);
    split_radical->add_option("--n", *n, "Radical frequency threshold")->required();
    split_radical->callback([&, n] { cmd_split_radical(cfg, *n); });

    auto* labels = app.add_subcommand(
        "labels", "Export decoder labels as JSON lines");
    auto explicit_mode = std::make_shared<bool>(false);
    auto implicit_mode = std::make_shared<bool>(false);
    auto* explicit_flag = labels->add_flag("--explicit", *explicit_mode,
                                           "Leaves as radical ids");
    labels->add_flag("--implicit", *implicit_mode,
                     "Leaves as DFS orders (default)")
        ->excludes(explicit_flag);
    labels->callback([&, explicit_mode] { cmd_labels(cfg, *explicit_mode); });

    auto* eval = app.add_subcommand(
        "eval", "Perturbation benchmark over the lexicon");
    auto noise = std::make_shared<rsst::PerturbationConfig>();
    auto trials = std::make_shared<std::uint64_t>(1000);
    auto threads = std::make_shared<int>(1);
    eval->add_option("--trials", *trials, "Number of trials")
        ->capture_default_str();
    eval->add_option("--p-sub", noise->p_sub, "Per-stroke substitution rate")
        ->capture_default_str();
    eval->add_option("--p-del", noise->p_del, "Per-stroke deletion rate")
        ->capture_default_str();
    eval->add_option("--p-ins", noise->p_ins, "Per-gap insertion rate")
        ->capture_default_str();
    eval->add_option("--p-struct", noise->p_struct, "Operator swap rate")
        ->capture_default_str();
    eval->add_option("--threads", *threads,
                     "Worker threads (0 = hardware concurrency)")
        ->capture_default_str();
    eval->callback([&, noise, trials, threads] {
        noise->seed = cfg.seed;
        noise->alphabet = cfg.alphabet;
        cmd_eval(cfg, *noise, *trials, *threads);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        std::cerr << "error[usage]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rsst::InvalidParameterError& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const rsst::Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 2;
    }
}
