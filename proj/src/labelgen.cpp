#include "rsst/labelgen.hpp"

namespace rsst {

namespace {

void collect_tokens(const Node& node, RadicalLabelMode mode, int& next_order,
                    std::vector<RadicalToken>& out) {
    if (node.is_leaf()) {
        if (mode == RadicalLabelMode::implicit_order) {
            out.push_back(LeafOrder{next_order++});
        } else {
            const LeafNode& leaf = node.as_leaf();
            if (leaf.radical_id.empty()) {
                throw MissingRadicalIdError(
                    "explicit radical labels require radical ids on all leaves");
            }
            out.push_back(ExplicitRadical{leaf.radical_id});
        }
        return;
    }
    out.push_back(node.as_internal().op);
    for (const Node& child : node.as_internal().children) {
        collect_tokens(child, mode, next_order, out);
    }
}

// Returns the subtree's concatenated leaf strokes; appends one target per
// DFS element along the way.
StrokeSeq collect_targets(const Node& node, StrokeTargets& out) {
    if (node.is_leaf()) {
        out.push_back(node.as_leaf().strokes);
        return node.as_leaf().strokes;
    }
    std::size_t slot = out.size();
    out.emplace_back();  // placeholder for this structure element
    StrokeSeq concat;
    for (const Node& child : node.as_internal().children) {
        StrokeSeq part = collect_targets(child, out);
        concat.insert(concat.end(), part.begin(), part.end());
    }
    out[slot] = concat;
    return concat;
}

}  // namespace

std::vector<RadicalToken> radical_sequence(const Tree& tree, RadicalLabelMode mode) {
    std::vector<RadicalToken> out;
    int next_order = 1;
    collect_tokens(tree.root, mode, next_order, out);
    return out;
}

StrokeTargets stroke_targets(const Tree& tree) {
    StrokeTargets out;
    collect_targets(tree.root, out);
    return out;
}

std::string radical_token_to_string(const RadicalToken& token) {
    if (const auto* op = std::get_if<StructureOp>(&token)) {
        return std::string(glyph(*op));
    }
    if (const auto* order = std::get_if<LeafOrder>(&token)) {
        return std::to_string(order->value);
    }
    return std::get<ExplicitRadical>(token).id;
}

}  // namespace rsst
