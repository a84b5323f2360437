#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsst/lexicon.hpp"
#include "rsst/metric.hpp"

namespace rsst {

using FeatureVector = std::vector<float>;

/// Per-character support feature vectors used to disambiguate confusable
/// candidates. All vectors share one dimension. Read-only during queries.
class FeatureStore {
public:
    explicit FeatureStore(int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }

    void add(const std::string& codepoint, FeatureVector vec);
    /// Support vectors for a codepoint, or nullptr if none were stored.
    const std::vector<FeatureVector>* find(const std::string& codepoint) const;

    // Binary format: magic "RSSTFEAT", u32 version = 1, u32 dim, u32 record
    // count; per record a length-prefixed UTF-8 codepoint, u32 vector count,
    // then the vectors as dim * f32. All integers and floats little-endian.
    void save_binary(const std::string& path) const;
    static FeatureStore load_binary(const std::string& path);

    // JSON mirror for fixtures: {"dim": D, "records": [{"codepoint": ...,
    // "vectors": [[...], ...]}, ...]}.
    std::string to_json() const;
    static FeatureStore from_json(const std::string& text);

private:
    int dim_;
    std::vector<std::pair<std::string, std::vector<FeatureVector>>> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Cosine of the angle between two feature vectors, in [-1, 1].
double cosine_similarity(std::span<const float> f, std::span<const float> g);

struct RectifyResult {
    Tree rectified;
    double distance = 0.0;
    std::vector<std::string> candidates;  // codepoints sharing the rectified tree
    bool exact_match = false;
};

enum class DistanceKind {
    combined,     // D_tree + beta * D_stroke
    tree_only,    // D_tree
    stroke_only,  // D_stroke
};

/// All three rectifications of one query, sharing the candidate scan.
struct MultiRectifyResult {
    RectifyResult combined;
    RectifyResult tree_only;
    RectifyResult stroke_only;
};

/// Precomputed candidate data for repeated rectification against one lexicon.
class Rectifier {
public:
    Rectifier(const Lexicon& lex, const MetricParams& params);

    /// Exact-match shortcut when the query serialization is in the lexicon;
    /// otherwise the distance-minimizing distinct tree, ties resolved by
    /// first occurrence in lexicon order.
    RectifyResult rectify(const Tree& query,
                          DistanceKind kind = DistanceKind::combined) const;

    MultiRectifyResult rectify_all(const Tree& query) const;

    const MetricParams& params() const { return params_; }

private:
    struct Candidate {
        std::size_t bucket_index;
        std::vector<DfsElement> elements;
        StrokeSeq concat;
    };

    RectifyResult result_for(std::size_t candidate_index, double distance) const;
    std::optional<RectifyResult> exact_match(const Tree& query,
                                             const std::string& key) const;

    const Lexicon* lex_;
    MetricParams params_;
    std::vector<Candidate> candidates_;  // one per distinct tree, lexicon order
};

RectifyResult rectify(const Tree& query, const Lexicon& lex,
                      const MetricParams& params = {});

/// Final character for a rectification: an unambiguous candidate is returned
/// directly; otherwise the candidate whose best support-sample cosine
/// similarity to the query feature is largest, ties by lexicon order.
std::string match_character(const RectifyResult& res,
                            const std::optional<FeatureVector>& query_feature,
                            const FeatureStore* store);

struct TranslateResult {
    std::string codepoint;
    RectifyResult rectification;
};

/// rectify followed by match_character.
TranslateResult translate(const Tree& query, const Lexicon& lex,
                          const MetricParams& params = {},
                          const std::optional<FeatureVector>& query_feature = {},
                          const FeatureStore* store = nullptr);

}  // namespace rsst
