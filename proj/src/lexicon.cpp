#include "rsst/lexicon.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rsst {

Lexicon Lexicon::from_records(std::vector<LexiconRecord> records) {
    Lexicon lex;
    lex.records_ = std::move(records);
    lex.record_by_codepoint_.reserve(lex.records_.size());
    for (std::size_t i = 0; i < lex.records_.size(); ++i) {
        const LexiconRecord& rec = lex.records_[i];
        if (!lex.record_by_codepoint_.emplace(rec.codepoint, i).second) {
            throw DuplicateCodepointError("duplicate codepoint '" +
                                          rec.codepoint + "'");
        }
        std::string key = serialize(rec.tree);
        auto [it, fresh] = lex.bucket_by_key_.emplace(key, lex.buckets_.size());
        if (fresh) {
            lex.buckets_.push_back(Bucket{std::move(key), {}});
        }
        lex.buckets_[it->second].members.push_back(i);
    }
    return lex;
}

Lexicon Lexicon::from_stream(std::istream& in, int alphabet) {
    std::vector<LexiconRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected '<codepoint><TAB><tree-expression>'");
        }
        std::string codepoint = line.substr(0, tab);
        try {
            records.push_back(
                LexiconRecord{std::move(codepoint),
                              parse_tree_expr(line.substr(tab + 1), alphabet)});
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return from_records(std::move(records));
}

Lexicon Lexicon::from_file(const std::string& path, int alphabet) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open lexicon file '" + path + "'");
    }
    return from_stream(in, alphabet);
}

const Lexicon::Bucket* Lexicon::find_bucket(const std::string& serialization) const {
    auto it = bucket_by_key_.find(serialization);
    return it == bucket_by_key_.end() ? nullptr : &buckets_[it->second];
}

const LexiconRecord* Lexicon::find(const std::string& codepoint) const {
    auto it = record_by_codepoint_.find(codepoint);
    return it == record_by_codepoint_.end() ? nullptr : &records_[it->second];
}

std::string Lexicon::to_text() const {
    std::string out;
    for (const LexiconRecord& rec : records_) {
        out += rec.codepoint;
        out += '\t';
        out += serialize(rec.tree, /*include_radical_ids=*/true);
        out += '\n';
    }
    return out;
}

ConfusableGroups confusable_set(const Lexicon& lex) {
    ConfusableGroups groups;
    for (const Lexicon::Bucket& bucket : lex.buckets()) {
        if (bucket.members.size() < 2) continue;
        std::vector<std::string> group;
        group.reserve(bucket.members.size());
        for (std::size_t i : bucket.members) group.push_back(lex.record(i).codepoint);
        groups.push_back(std::move(group));
    }
    return groups;
}

ConfusableGroups confusable_set_stroke_level(const Lexicon& lex) {
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::vector<std::string>> buckets;
    for (const LexiconRecord& rec : lex.records()) {
        std::string key;
        for (StrokeSymbol s : leaf_stroke_concat(rec.tree)) key += stroke_to_char(s);
        auto [it, fresh] = index.emplace(std::move(key), buckets.size());
        if (fresh) buckets.emplace_back();
        buckets[it->second].push_back(rec.codepoint);
    }
    ConfusableGroups groups;
    for (auto& bucket : buckets) {
        if (bucket.size() >= 2) groups.push_back(std::move(bucket));
    }
    return groups;
}

std::size_t confusable_character_count(const ConfusableGroups& groups) {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    return n;
}

SplitResult char_zero_shot_split(const Lexicon& lex,
                                 const std::vector<std::string>& alphabet,
                                 int m, int n_last) {
    if (m <= 0 || n_last <= 0) {
        throw InvalidParameterError("m and n_last must be positive");
    }
    if (static_cast<std::size_t>(m) + static_cast<std::size_t>(n_last) >
        alphabet.size()) {
        throw OverlapError("m + n_last = " + std::to_string(m + n_last) +
                           " exceeds alphabet size " +
                           std::to_string(alphabet.size()));
    }
    std::set<std::string> seen;
    for (const std::string& cp : alphabet) {
        if (!lex.find(cp)) {
            throw UnknownCodepointError("alphabet entry '" + cp +
                                        "' is not in the lexicon");
        }
        if (!seen.insert(cp).second) {
            throw DuplicateCodepointError("alphabet entry '" + cp +
                                          "' appears twice");
        }
    }
    SplitResult out;
    out.train.assign(alphabet.begin(), alphabet.begin() + m);
    out.test.assign(alphabet.end() - n_last, alphabet.end());
    return out;
}

namespace {

void collect_radical_ids(const Node& node, std::set<std::string>& out) {
    if (node.is_leaf()) {
        const LeafNode& leaf = node.as_leaf();
        if (leaf.radical_id.empty()) {
            throw MissingRadicalIdError("leaf without radical id");
        }
        out.insert(leaf.radical_id);
        return;
    }
    for (const Node& child : node.as_internal().children) {
        collect_radical_ids(child, out);
    }
}

}  // namespace

std::map<std::string, int> radical_frequency(const Lexicon& lex) {
    std::map<std::string, int> freq;
    for (const LexiconRecord& rec : lex.records()) {
        std::set<std::string> ids;
        try {
            collect_radical_ids(rec.tree.root, ids);
        } catch (const MissingRadicalIdError&) {
            throw MissingRadicalIdError("character '" + rec.codepoint +
                                        "' has a leaf without a radical id");
        }
        for (const std::string& id : ids) ++freq[id];
    }
    return freq;
}

SplitResult radical_zero_shot_split(const Lexicon& lex, int n) {
    if (n < 0) {
        throw InvalidParameterError("n must be >= 0");
    }
    auto freq = radical_frequency(lex);
    SplitResult out;
    for (const LexiconRecord& rec : lex.records()) {
        std::set<std::string> ids;
        collect_radical_ids(rec.tree.root, ids);
        bool has_rare = false;
        for (const std::string& id : ids) {
            if (freq.at(id) <= n) {
                has_rare = true;
                break;
            }
        }
        (has_rare ? out.test : out.train).push_back(rec.codepoint);
    }
    return out;
}

std::string split_to_text(const SplitResult& split) {
    std::string out;
    for (const std::string& cp : split.train) {
        out += cp;
        out += "\ttrain\n";
    }
    for (const std::string& cp : split.test) {
        out += cp;
        out += "\ttest\n";
    }
    return out;
}

}  // namespace rsst
