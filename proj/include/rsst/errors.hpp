#pragma once

#include <stdexcept>
#include <string>

namespace rsst {

// Base for all library errors. `code()` is the stable machine-readable
// identifier printed by the CLI; messages are free-form.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define RSST_DEFINE_ERROR(NAME, CODE)                         \
    class NAME : public Error {                               \
    public:                                                   \
        explicit NAME(const std::string& message)             \
            : Error(CODE, message) {}                         \
    }

// Tree-expression parsing.
RSST_DEFINE_ERROR(SyntaxError, "syntax");
RSST_DEFINE_ERROR(ArityError, "arity");
RSST_DEFINE_ERROR(EmptyLeafError, "empty_leaf");
RSST_DEFINE_ERROR(AlphabetError, "alphabet");

// Parameters and metric internals.
RSST_DEFINE_ERROR(InvalidParameterError, "invalid_parameter");
RSST_DEFINE_ERROR(SizeLimitError, "size_limit");

// Lexicon building and splits.
RSST_DEFINE_ERROR(ParseError, "parse");
RSST_DEFINE_ERROR(DuplicateCodepointError, "duplicate_codepoint");
RSST_DEFINE_ERROR(UnknownCodepointError, "unknown_codepoint");
RSST_DEFINE_ERROR(OverlapError, "overlap");
RSST_DEFINE_ERROR(MissingRadicalIdError, "missing_radical_id");
RSST_DEFINE_ERROR(EmptyLexiconError, "empty_lexicon");

// Feature matching.
RSST_DEFINE_ERROR(MissingFeatureError, "missing_feature");
RSST_DEFINE_ERROR(DimensionMismatchError, "dimension_mismatch");
RSST_DEFINE_ERROR(ZeroVectorError, "zero_vector");

// File formats.
RSST_DEFINE_ERROR(FormatError, "format");
RSST_DEFINE_ERROR(IoError, "io");

#undef RSST_DEFINE_ERROR

}  // namespace rsst
