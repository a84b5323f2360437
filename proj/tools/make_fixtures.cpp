// Regenerates the committed fixtures from the deterministic generators:
//   lexicon_500.tsv        500-tree synthetic lexicon, seed 42
//   lexicon_500.stats.json golden record/bucket/confusable counts
//   golden_eval.json       golden benchmark report for the documented flags
//   features_demo.bin/json support vectors for the first confusable group
//
// Usage: make_fixtures [output-dir]   (default: fixtures)

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "rsst/simulate.hpp"
#include "rsst/translator.hpp"

namespace {

constexpr int kLexiconSize = 500;
constexpr std::uint64_t kSeed = 42;
constexpr std::uint64_t kGoldenTrials = 10000;

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(content.data(),
                           static_cast<std::streamsize>(content.size()))) {
        throw rsst::IoError("cannot write '" + path.string() + "'");
    }
    std::cout << "wrote " << path.string() << " (" << content.size()
              << " bytes)\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path out_dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(out_dir);

    rsst::Lexicon lex = rsst::synth_lexicon(kLexiconSize, kSeed);
    write_file(out_dir / "lexicon_500.tsv", lex.to_text());

    rsst::ConfusableGroups tree_groups = rsst::confusable_set(lex);
    rsst::ConfusableGroups stroke_groups = rsst::confusable_set_stroke_level(lex);
    nlohmann::json stats{
        {"records", lex.size()},
        {"distinct_trees", lex.buckets().size()},
        {"tree_confusable_groups", tree_groups.size()},
        {"tree_confusable_characters",
         rsst::confusable_character_count(tree_groups)},
        {"stroke_confusable_groups", stroke_groups.size()},
        {"stroke_confusable_characters",
         rsst::confusable_character_count(stroke_groups)},
    };
    write_file(out_dir / "lexicon_500.stats.json", stats.dump(2) + "\n");

    rsst::PerturbationConfig noise;
    noise.p_sub = 0.05;
    noise.p_del = 0.05;
    noise.p_struct = 0.05;
    noise.seed = kSeed;
    rsst::EvalReport report = rsst::evaluate(lex, noise, kGoldenTrials);
    write_file(out_dir / "golden_eval.json", report.to_json() + "\n");

    if (!tree_groups.empty()) {
        // Orthogonal support vectors for the first confusable group let the
        // demo and tests disambiguate it exactly.
        const auto& group = tree_groups.front();
        const int dim = 4;
        rsst::FeatureStore store(dim);
        for (std::size_t i = 0; i < group.size(); ++i) {
            rsst::FeatureVector axis(dim, 0.0f);
            axis[i % dim] = 1.0f;
            store.add(group[i], axis);
            rsst::FeatureVector blend(dim, 0.0f);
            blend[i % dim] = 0.9f;
            blend[(i + 1) % dim] = 0.1f;
            store.add(group[i], blend);
        }
        store.save_binary((out_dir / "features_demo.bin").string());
        std::cout << "wrote " << (out_dir / "features_demo.bin").string()
                  << " (" << group.size() << " codepoints)\n";
        write_file(out_dir / "features_demo.json", store.to_json() + "\n");
    } else {
        std::cout << "no tree-level confusable group; skipping feature demo\n";
    }
    return 0;
}
