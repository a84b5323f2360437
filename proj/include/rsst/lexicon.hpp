#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsst/core.hpp"

namespace rsst {

struct LexiconRecord {
    std::string codepoint;  // opaque character identifier, unique
    Tree tree;
};

/// The character lexicon: records in input order plus an index from canonical
/// serialization (radical ids excluded) to the records sharing that tree.
/// Immutable after build; queries are read-only.
class Lexicon {
public:
    /// Records sharing one canonical serialization, in first-occurrence order.
    struct Bucket {
        std::string key;                  // canonical serialization
        std::vector<std::size_t> members; // record indices, input order
    };

    static Lexicon from_records(std::vector<LexiconRecord> records);

    /// One record per line: `<codepoint><TAB><tree-expression>`; '#' starts a
    /// comment line, blank lines are ignored.
    static Lexicon from_stream(std::istream& in, int alphabet = kDefaultAlphabet);
    static Lexicon from_file(const std::string& path, int alphabet = kDefaultAlphabet);

    bool empty() const { return records_.empty(); }
    std::size_t size() const { return records_.size(); }
    const std::vector<LexiconRecord>& records() const { return records_; }
    const LexiconRecord& record(std::size_t i) const { return records_[i]; }

    const std::vector<Bucket>& buckets() const { return buckets_; }
    /// Bucket holding the given canonical serialization, or nullptr.
    const Bucket* find_bucket(const std::string& serialization) const;
    /// Record with the given codepoint, or nullptr.
    const LexiconRecord* find(const std::string& codepoint) const;

    /// Canonical text form, one record per line with radical ids included.
    std::string to_text() const;

private:
    std::vector<LexiconRecord> records_;
    std::vector<Bucket> buckets_;
    std::unordered_map<std::string, std::size_t> bucket_by_key_;
    std::unordered_map<std::string, std::size_t> record_by_codepoint_;
};

using ConfusableGroups = std::vector<std::vector<std::string>>;

/// Groups of >= 2 codepoints whose trees serialize identically, in lexicon
/// order.
ConfusableGroups confusable_set(const Lexicon& lex);

/// Groups of >= 2 codepoints whose leaf stroke concatenations are equal,
/// ignoring structure. Never finer than confusable_set.
ConfusableGroups confusable_set_stroke_level(const Lexicon& lex);

std::size_t confusable_character_count(const ConfusableGroups& groups);

struct SplitResult {
    std::vector<std::string> train;
    std::vector<std::string> test;
};

/// First m alphabet classes train, last n_last test. The alphabet must be a
/// duplicate-free subset of the lexicon and m + n_last must not overlap.
SplitResult char_zero_shot_split(const Lexicon& lex,
                                 const std::vector<std::string>& alphabet,
                                 int m, int n_last);

/// Number of lexicon characters containing each radical id at least once
/// (a radical occurring twice in one character counts once).
std::map<std::string, int> radical_frequency(const Lexicon& lex);

/// A character tests iff it contains at least one radical of frequency <= n;
/// otherwise it trains. Train characters therefore never contain a radical a
/// test-only class depends on.
SplitResult radical_zero_shot_split(const Lexicon& lex, int n);

/// Two-column listing `<codepoint><TAB>train|test`, train rows first in split
/// order.
std::string split_to_text(const SplitResult& split);

}  // namespace rsst
