#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rsst/errors.hpp"

namespace rsst {

// Five basic stroke categories: horizontal, vertical, left-falling,
// right-falling, turning. Larger instance-level alphabets are allowed up to
// the base-36 digit limit of the text format.
inline constexpr int kDefaultAlphabet = 5;
inline constexpr int kMaxAlphabet = 35;

/// One stroke, a 1-based code into the configured alphabet.
struct StrokeSymbol {
    std::uint8_t code = 1;
    auto operator<=>(const StrokeSymbol&) const = default;
};

using StrokeSeq = std::vector<StrokeSymbol>;

/// Digit used for a stroke code in the text format ('1'..'9', then 'a'..'z').
char stroke_to_char(StrokeSymbol s);
/// Inverse of stroke_to_char; nullopt for characters that are not stroke digits.
std::optional<int> stroke_code_from_char(char c);

/// The 12 ideographic description operators (U+2FF0..U+2FFB) that describe
/// how sub-components combine spatially.
enum class StructureOp : std::uint8_t {
    left_right,               // U+2FF0
    above_below,              // U+2FF1
    left_middle_right,        // U+2FF2, ternary
    above_middle_below,       // U+2FF3, ternary
    full_surround,            // U+2FF4
    surround_from_above,      // U+2FF5
    surround_from_below,      // U+2FF6
    surround_from_left,       // U+2FF7
    surround_from_upper_left, // U+2FF8
    surround_from_upper_right,// U+2FF9
    surround_from_lower_left, // U+2FFA
    overlaid,                 // U+2FFB
};

inline constexpr int kStructureOpCount = 12;

int arity(StructureOp op);
/// UTF-8 encoding of the operator's codepoint.
std::string_view glyph(StructureOp op);
std::optional<StructureOp> structure_op_from_glyph(std::string_view token);
/// All operators of the given arity, in enum order.
std::vector<StructureOp> structure_ops_with_arity(int arity);

class Node;

struct InternalNode {
    StructureOp op;
    std::vector<Node> children;  // size == arity(op)
    bool operator==(const InternalNode&) const = default;
};

struct LeafNode {
    std::string radical_id;  // optional opaque identifier; "" when absent
    StrokeSeq strokes;       // non-empty
    bool operator==(const LeafNode&) const = default;
};

/// A tree node: either a structure operator with arity-many children or a
/// radical leaf carrying its stroke sequence. Immutable after construction;
/// the factories enforce the arity and non-empty-leaf invariants.
class Node {
public:
    static Node internal(StructureOp op, std::vector<Node> children);
    static Node leaf(std::string radical_id, StrokeSeq strokes);
    static Node leaf(StrokeSeq strokes) { return leaf("", std::move(strokes)); }

    bool is_leaf() const { return std::holds_alternative<LeafNode>(v_); }
    const InternalNode& as_internal() const { return std::get<InternalNode>(v_); }
    const LeafNode& as_leaf() const { return std::get<LeafNode>(v_); }

    bool operator==(const Node&) const = default;

private:
    explicit Node(std::variant<InternalNode, LeafNode> v) : v_(std::move(v)) {}
    std::variant<InternalNode, LeafNode> v_;
};

/// A radical-structured stroke tree.
struct Tree {
    Node root;
    bool operator==(const Tree&) const = default;
};

/// One token of the depth-first linearization. Internal nodes contribute a
/// structure token, leaves contribute their whole stroke sequence.
struct DfsElement {
    std::variant<StructureOp, StrokeSeq> token;
    int level = 0;      // root is level 0
    double weight = 1;  // alpha^level

    bool is_structure() const { return std::holds_alternative<StructureOp>(token); }
    const StrokeSeq& strokes() const { return std::get<StrokeSeq>(token); }
    StructureOp op() const { return std::get<StructureOp>(token); }
    /// Normalization length: 1 for structure tokens, stroke count for leaves.
    std::size_t len() const { return is_structure() ? 1 : strokes().size(); }
};

/// Parses the whitespace-separated prefix form: a structure operator glyph
/// followed by its arity-many child expressions; leaves are written
/// `radicalId:strokes` (the id may be empty, strokes are base-36 digits).
Tree parse_tree_expr(std::string_view text, int alphabet = kDefaultAlphabet);

/// Canonical text form; inverse of parse_tree_expr. Radical ids are excluded
/// by default so that two trees equal up to leaf naming serialize identically.
std::string serialize(const Tree& tree, bool include_radical_ids = false);
std::string serialize(const Node& node, bool include_radical_ids = false);

/// Pre-order linearization with level-attenuated weights alpha^level.
/// Requires 0 < alpha <= 1.
std::vector<DfsElement> dfs_elements(const Tree& tree, double alpha);

/// Concatenation of all leaf stroke sequences in depth-first order.
StrokeSeq leaf_stroke_concat(const Tree& tree);

int leaf_count(const Tree& tree);
/// Depth of the deepest node; a single leaf has depth 0.
int depth(const Tree& tree);

}  // namespace rsst
