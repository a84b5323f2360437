#include "rsst/translator.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace rsst {

FeatureStore::FeatureStore(int dim) : dim_(dim) {
    if (dim <= 0) {
        throw InvalidParameterError("feature dimension must be positive");
    }
}

void FeatureStore::add(const std::string& codepoint, FeatureVector vec) {
    if (static_cast<int>(vec.size()) != dim_) {
        throw DimensionMismatchError("vector for '" + codepoint + "' has dim " +
                                     std::to_string(vec.size()) + ", store has " +
                                     std::to_string(dim_));
    }
    auto [it, fresh] = index_.emplace(codepoint, entries_.size());
    if (fresh) entries_.emplace_back(codepoint, std::vector<FeatureVector>{});
    entries_[it->second].second.push_back(std::move(vec));
}

const std::vector<FeatureVector>* FeatureStore::find(
    const std::string& codepoint) const {
    auto it = index_.find(codepoint);
    return it == index_.end() ? nullptr : &entries_[it->second].second;
}

namespace {

constexpr char kFeatureMagic[8] = {'R', 'S', 'S', 'T', 'F', 'E', 'A', 'T'};
constexpr std::uint32_t kFeatureVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    out += static_cast<char>(v & 0xFF);
    out += static_cast<char>((v >> 8) & 0xFF);
    out += static_cast<char>((v >> 16) & 0xFF);
    out += static_cast<char>((v >> 24) & 0xFF);
}

void put_f32(std::string& out, float f) {
    put_u32(out, std::bit_cast<std::uint32_t>(f));
}

struct ByteReader {
    const std::string& data;
    std::size_t pos = 0;

    void require(std::size_t n) const {
        if (pos + n > data.size()) {
            throw FormatError("truncated feature store file");
        }
    }
    std::uint32_t u32() {
        require(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v |= static_cast<std::uint32_t>(
                     static_cast<unsigned char>(data[pos + i]))
                 << (8 * i);
        }
        pos += 4;
        return v;
    }
    float f32() { return std::bit_cast<float>(u32()); }
    std::string bytes(std::size_t n) {
        require(n);
        std::string s = data.substr(pos, n);
        pos += n;
        return s;
    }
};

}  // namespace

void FeatureStore::save_binary(const std::string& path) const {
    std::string out;
    out.append(kFeatureMagic, sizeof(kFeatureMagic));
    put_u32(out, kFeatureVersion);
    put_u32(out, static_cast<std::uint32_t>(dim_));
    put_u32(out, static_cast<std::uint32_t>(entries_.size()));
    for (const auto& [codepoint, vectors] : entries_) {
        put_u32(out, static_cast<std::uint32_t>(codepoint.size()));
        out += codepoint;
        put_u32(out, static_cast<std::uint32_t>(vectors.size()));
        for (const FeatureVector& vec : vectors) {
            for (float f : vec) put_f32(out, f);
        }
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !f.write(out.data(), static_cast<std::streamsize>(out.size()))) {
        throw IoError("cannot write feature store '" + path + "'");
    }
}

FeatureStore FeatureStore::load_binary(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open feature store '" + path + "'");
    }
    std::string data((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    ByteReader r{data};
    if (r.bytes(sizeof(kFeatureMagic)) !=
        std::string(kFeatureMagic, sizeof(kFeatureMagic))) {
        throw FormatError("bad feature store magic");
    }
    if (std::uint32_t v = r.u32(); v != kFeatureVersion) {
        throw FormatError("unsupported feature store version " + std::to_string(v));
    }
    FeatureStore store(static_cast<int>(r.u32()));
    std::uint32_t records = r.u32();
    for (std::uint32_t i = 0; i < records; ++i) {
        std::string codepoint = r.bytes(r.u32());
        std::uint32_t count = r.u32();
        for (std::uint32_t k = 0; k < count; ++k) {
            FeatureVector vec(static_cast<std::size_t>(store.dim()));
            for (float& x : vec) x = r.f32();
            store.add(codepoint, std::move(vec));
        }
    }
    return store;
}

std::string FeatureStore::to_json() const {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [codepoint, vectors] : entries_) {
        records.push_back({{"codepoint", codepoint}, {"vectors", vectors}});
    }
    return nlohmann::json{{"dim", dim_}, {"records", records}}.dump(2);
}

FeatureStore FeatureStore::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        FeatureStore store(j.at("dim").get<int>());
        for (const auto& rec : j.at("records")) {
            auto codepoint = rec.at("codepoint").get<std::string>();
            for (const auto& vec : rec.at("vectors")) {
                store.add(codepoint, vec.get<FeatureVector>());
            }
        }
        return store;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad feature store JSON: ") + e.what());
    }
}

double cosine_similarity(std::span<const float> f, std::span<const float> g) {
    if (f.size() != g.size()) {
        throw DimensionMismatchError("cosine of dims " + std::to_string(f.size()) +
                                     " and " + std::to_string(g.size()));
    }
    double dot = 0, nf = 0, ng = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        dot += static_cast<double>(f[i]) * g[i];
        nf += static_cast<double>(f[i]) * f[i];
        ng += static_cast<double>(g[i]) * g[i];
    }
    if (nf == 0.0 || ng == 0.0) {
        throw ZeroVectorError("cosine similarity of an all-zero vector");
    }
    return dot / (std::sqrt(nf) * std::sqrt(ng));
}

Rectifier::Rectifier(const Lexicon& lex, const MetricParams& params)
    : lex_(&lex), params_(params) {
    params_.validate();
    if (lex.empty()) {
        throw EmptyLexiconError("cannot rectify against an empty lexicon");
    }
    candidates_.reserve(lex.buckets().size());
    for (std::size_t b = 0; b < lex.buckets().size(); ++b) {
        const LexiconRecord& rep = lex.record(lex.buckets()[b].members.front());
        candidates_.push_back(Candidate{b, dfs_elements(rep.tree, params_.alpha),
                                        leaf_stroke_concat(rep.tree)});
    }
}

RectifyResult Rectifier::result_for(std::size_t candidate_index,
                                    double distance) const {
    const Lexicon::Bucket& bucket =
        lex_->buckets()[candidates_[candidate_index].bucket_index];
    RectifyResult res{lex_->record(bucket.members.front()).tree, distance, {}, false};
    for (std::size_t i : bucket.members) {
        res.candidates.push_back(lex_->record(i).codepoint);
    }
    return res;
}

std::optional<RectifyResult> Rectifier::exact_match(const Tree& query,
                                                    const std::string& key) const {
    const Lexicon::Bucket* bucket = lex_->find_bucket(key);
    if (!bucket) return std::nullopt;
    RectifyResult res{query, 0.0, {}, true};
    for (std::size_t i : bucket->members) {
        res.candidates.push_back(lex_->record(i).codepoint);
    }
    return res;
}

RectifyResult Rectifier::rectify(const Tree& query, DistanceKind kind) const {
    if (auto exact = this->exact_match(query, serialize(query))) {
        return *std::move(exact);
    }
    auto query_elements = dfs_elements(query, params_.alpha);
    StrokeSeq query_concat = leaf_stroke_concat(query);
    detail::WedWorkspace ws;

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
        const Candidate& cand = candidates_[c];
        double d;
        switch (kind) {
            case DistanceKind::tree_only:
                d = detail::wed_over_elements(query_elements, cand.elements, ws);
                break;
            case DistanceKind::stroke_only:
                d = detail::levenshtein(query_concat, cand.concat, ws.lev);
                break;
            case DistanceKind::combined:
            default:
                d = detail::wed_over_elements(query_elements, cand.elements, ws) +
                    params_.beta *
                        detail::levenshtein(query_concat, cand.concat, ws.lev);
                break;
        }
        if (d < best - kDistanceTolerance) {
            best = d;
            best_index = c;
        }
    }
    return result_for(best_index, best);
}

MultiRectifyResult Rectifier::rectify_all(const Tree& query) const {
    if (auto exact = this->exact_match(query, serialize(query))) {
        return MultiRectifyResult{*exact, *exact, *std::move(exact)};
    }
    auto query_elements = dfs_elements(query, params_.alpha);
    StrokeSeq query_concat = leaf_stroke_concat(query);
    detail::WedWorkspace ws;

    double best_combined = std::numeric_limits<double>::infinity();
    double best_tree = best_combined, best_stroke = best_combined;
    std::size_t at_combined = 0, at_tree = 0, at_stroke = 0;
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
        const Candidate& cand = candidates_[c];
        double d_tree = detail::wed_over_elements(query_elements, cand.elements, ws);
        double d_stroke = detail::levenshtein(query_concat, cand.concat, ws.lev);
        double d_combined = d_tree + params_.beta * d_stroke;
        if (d_combined < best_combined - kDistanceTolerance) {
            best_combined = d_combined;
            at_combined = c;
        }
        if (d_tree < best_tree - kDistanceTolerance) {
            best_tree = d_tree;
            at_tree = c;
        }
        if (d_stroke < best_stroke - kDistanceTolerance) {
            best_stroke = d_stroke;
            at_stroke = c;
        }
    }
    return MultiRectifyResult{result_for(at_combined, best_combined),
                              result_for(at_tree, best_tree),
                              result_for(at_stroke, best_stroke)};
}

RectifyResult rectify(const Tree& query, const Lexicon& lex,
                      const MetricParams& params) {
    return Rectifier(lex, params).rectify(query);
}

std::string match_character(const RectifyResult& res,
                            const std::optional<FeatureVector>& query_feature,
                            const FeatureStore* store) {
    if (res.candidates.empty()) {
        throw EmptyLexiconError("rectification produced no candidates");
    }
    if (res.candidates.size() == 1) {
        return res.candidates.front();
    }
    if (!query_feature || !store) {
        throw MissingFeatureError(
            "query matches " + std::to_string(res.candidates.size()) +
            " candidates; a query feature and a feature store are required");
    }
    if (static_cast<int>(query_feature->size()) != store->dim()) {
        throw DimensionMismatchError("query feature has dim " +
                                     std::to_string(query_feature->size()) +
                                     ", store has " + std::to_string(store->dim()));
    }
    double best_sim = -std::numeric_limits<double>::infinity();
    std::size_t best = 0;
    for (std::size_t i = 0; i < res.candidates.size(); ++i) {
        const std::string& cp = res.candidates[i];
        const std::vector<FeatureVector>* vectors = store->find(cp);
        if (!vectors || vectors->empty()) {
            throw MissingFeatureError("no support vectors for candidate '" + cp +
                                      "'");
        }
        double sim = -std::numeric_limits<double>::infinity();
        for (const FeatureVector& v : *vectors) {
            sim = std::max(sim, cosine_similarity(*query_feature, v));
        }
        if (sim > best_sim) {
            best_sim = sim;
            best = i;
        }
    }
    return res.candidates[best];
}

TranslateResult translate(const Tree& query, const Lexicon& lex,
                          const MetricParams& params,
                          const std::optional<FeatureVector>& query_feature,
                          const FeatureStore* store) {
    RectifyResult res = rectify(query, lex, params);
    std::string codepoint = match_character(res, query_feature, store);
    return TranslateResult{std::move(codepoint), std::move(res)};
}

}  // namespace rsst
