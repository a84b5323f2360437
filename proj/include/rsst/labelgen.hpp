#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rsst/core.hpp"

namespace rsst {

/// 1-based position of a leaf among the tree's leaves in DFS order.
struct LeafOrder {
    int value = 1;
    bool operator==(const LeafOrder&) const = default;
};

struct ExplicitRadical {
    std::string id;
    bool operator==(const ExplicitRadical&) const = default;
};

/// One token of a radical-level label: structure operators are always kept;
/// leaves appear either as their DFS order or as their radical id.
using RadicalToken = std::variant<StructureOp, LeafOrder, ExplicitRadical>;

enum class RadicalLabelMode {
    implicit_order,   // leaves as relative positions
    explicit_radical, // leaves as radical ids
};

/// DFS token stream of the tree at the radical level.
/// Explicit mode requires radical ids on every leaf.
std::vector<RadicalToken> radical_sequence(const Tree& tree, RadicalLabelMode mode);

/// One target stroke sequence per DFS element: a structure element gets the
/// concatenation of its subtree's leaf strokes, a leaf gets its own strokes.
using StrokeTargets = std::vector<StrokeSeq>;
StrokeTargets stroke_targets(const Tree& tree);

/// Teacher-forcing pair: input = [bos] + tokens, target = tokens + [eos].
template <typename T>
std::pair<std::vector<T>, std::vector<T>> shifted_pair(std::span<const T> tokens,
                                                       const T& bos, const T& eos) {
    std::vector<T> input;
    input.reserve(tokens.size() + 1);
    input.push_back(bos);
    input.insert(input.end(), tokens.begin(), tokens.end());
    std::vector<T> target(tokens.begin(), tokens.end());
    target.push_back(eos);
    return {std::move(input), std::move(target)};
}

/// Display form of one radical token: the operator glyph, the decimal order,
/// or the radical id.
std::string radical_token_to_string(const RadicalToken& token);

}  // namespace rsst
