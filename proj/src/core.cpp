#include "rsst/core.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace rsst {

namespace {

struct OpInfo {
    const char* utf8;
    int arity;
};

// U+2FF0..U+2FFB in enum order. Only the row and column compositions are
// ternary; the surrounds and overlays take exactly two parts.
constexpr std::array<OpInfo, kStructureOpCount> kOps = {{
    {"⿰", 2},  // left_right
    {"⿱", 2},  // above_below
    {"⿲", 3},  // left_middle_right
    {"⿳", 3},  // above_middle_below
    {"⿴", 2},  // full_surround
    {"⿵", 2},  // surround_from_above
    {"⿶", 2},  // surround_from_below
    {"⿷", 2},  // surround_from_left
    {"⿸", 2},  // surround_from_upper_left
    {"⿹", 2},  // surround_from_upper_right
    {"⿺", 2},  // surround_from_lower_left
    {"⿻", 2},  // overlaid
}};

}  // namespace

char stroke_to_char(StrokeSymbol s) {
    return s.code <= 9 ? static_cast<char>('0' + s.code)
                       : static_cast<char>('a' + s.code - 10);
}

std::optional<int> stroke_code_from_char(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return std::nullopt;
}

int arity(StructureOp op) { return kOps[static_cast<int>(op)].arity; }

std::string_view glyph(StructureOp op) { return kOps[static_cast<int>(op)].utf8; }

std::optional<StructureOp> structure_op_from_glyph(std::string_view token) {
    for (int i = 0; i < kStructureOpCount; ++i) {
        if (token == kOps[i].utf8) return static_cast<StructureOp>(i);
    }
    return std::nullopt;
}

std::vector<StructureOp> structure_ops_with_arity(int a) {
    std::vector<StructureOp> out;
    for (int i = 0; i < kStructureOpCount; ++i) {
        if (kOps[i].arity == a) out.push_back(static_cast<StructureOp>(i));
    }
    return out;
}

Node Node::internal(StructureOp op, std::vector<Node> children) {
    const int want = rsst::arity(op);
    if (static_cast<int>(children.size()) != want) {
        throw ArityError("operator " + std::string(glyph(op)) + " takes " +
                         std::to_string(want) + " children, got " +
                         std::to_string(children.size()));
    }
    return Node(InternalNode{op, std::move(children)});
}

Node Node::leaf(std::string radical_id, StrokeSeq strokes) {
    if (strokes.empty()) {
        throw EmptyLeafError("leaf '" + radical_id + "' has no strokes");
    }
    return Node(LeafNode{std::move(radical_id), std::move(strokes)});
}

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                                   text[i] == '\n' || text[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
               text[i] != '\n' && text[i] != '\r') {
            ++i;
        }
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

Node parse_leaf_token(std::string_view token, std::size_t colon, int alphabet) {
    std::string id(token.substr(0, colon));
    std::string_view digits = token.substr(colon + 1);
    if (digits.empty()) {
        throw EmptyLeafError("leaf '" + std::string(token) + "' has no strokes");
    }
    StrokeSeq strokes;
    strokes.reserve(digits.size());
    for (char c : digits) {
        auto code = stroke_code_from_char(c);
        if (!code) {
            throw SyntaxError("invalid stroke digit '" + std::string(1, c) +
                              "' in '" + std::string(token) + "'");
        }
        if (*code < 1 || *code > alphabet) {
            throw AlphabetError("stroke code " + std::to_string(*code) +
                                " out of range 1.." + std::to_string(alphabet));
        }
        strokes.push_back(StrokeSymbol{static_cast<std::uint8_t>(*code)});
    }
    return Node::leaf(std::move(id), std::move(strokes));
}

Node parse_expr(std::span<const std::string_view> tokens, std::size_t& pos,
                int alphabet) {
    if (pos >= tokens.size()) {
        throw ArityError("unexpected end of expression");
    }
    std::string_view token = tokens[pos++];
    if (auto op = structure_op_from_glyph(token)) {
        std::vector<Node> children;
        const int want = arity(*op);
        children.reserve(want);
        for (int k = 0; k < want; ++k) {
            if (pos >= tokens.size()) {
                throw ArityError("operator " + std::string(token) + " takes " +
                                 std::to_string(want) + " children, got " +
                                 std::to_string(k));
            }
            children.push_back(parse_expr(tokens, pos, alphabet));
        }
        return Node::internal(*op, std::move(children));
    }
    std::size_t colon = token.find(':');
    if (colon == std::string_view::npos) {
        throw SyntaxError("expected operator or 'radicalId:strokes', got '" +
                          std::string(token) + "'");
    }
    return parse_leaf_token(token, colon, alphabet);
}

}  // namespace

Tree parse_tree_expr(std::string_view text, int alphabet) {
    if (alphabet < 1 || alphabet > kMaxAlphabet) {
        throw InvalidParameterError("alphabet size must be in 1.." +
                                    std::to_string(kMaxAlphabet));
    }
    auto tokens = tokenize(text);
    if (tokens.empty()) {
        throw SyntaxError("empty expression");
    }
    std::size_t pos = 0;
    Node root = parse_expr(tokens, pos, alphabet);
    if (pos != tokens.size()) {
        throw SyntaxError("trailing input starting at '" +
                          std::string(tokens[pos]) + "'");
    }
    return Tree{std::move(root)};
}

namespace {

void serialize_node(const Node& node, bool include_ids, std::string& out) {
    if (node.is_leaf()) {
        const LeafNode& leaf = node.as_leaf();
        if (include_ids) out += leaf.radical_id;
        out += ':';
        for (StrokeSymbol s : leaf.strokes) out += stroke_to_char(s);
        return;
    }
    const InternalNode& internal = node.as_internal();
    out += glyph(internal.op);
    for (const Node& child : internal.children) {
        out += ' ';
        serialize_node(child, include_ids, out);
    }
}

}  // namespace

std::string serialize(const Node& node, bool include_radical_ids) {
    std::string out;
    serialize_node(node, include_radical_ids, out);
    return out;
}

std::string serialize(const Tree& tree, bool include_radical_ids) {
    return serialize(tree.root, include_radical_ids);
}

namespace {

void collect_elements(const Node& node, int level, double alpha,
                      std::vector<DfsElement>& out) {
    DfsElement e;
    e.level = level;
    e.weight = std::pow(alpha, level);
    if (node.is_leaf()) {
        e.token = node.as_leaf().strokes;
        out.push_back(std::move(e));
        return;
    }
    e.token = node.as_internal().op;
    out.push_back(std::move(e));
    for (const Node& child : node.as_internal().children) {
        collect_elements(child, level + 1, alpha, out);
    }
}

void collect_strokes(const Node& node, StrokeSeq& out) {
    if (node.is_leaf()) {
        const StrokeSeq& s = node.as_leaf().strokes;
        out.insert(out.end(), s.begin(), s.end());
        return;
    }
    for (const Node& child : node.as_internal().children) {
        collect_strokes(child, out);
    }
}

}  // namespace

std::vector<DfsElement> dfs_elements(const Tree& tree, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw InvalidParameterError("alpha must be in (0, 1]");
    }
    std::vector<DfsElement> out;
    collect_elements(tree.root, 0, alpha, out);
    return out;
}

StrokeSeq leaf_stroke_concat(const Tree& tree) {
    StrokeSeq out;
    collect_strokes(tree.root, out);
    return out;
}

namespace {

int count_leaves(const Node& node) {
    if (node.is_leaf()) return 1;
    int n = 0;
    for (const Node& child : node.as_internal().children) n += count_leaves(child);
    return n;
}

int node_depth(const Node& node) {
    if (node.is_leaf()) return 0;
    int d = 0;
    for (const Node& child : node.as_internal().children) {
        d = std::max(d, node_depth(child));
    }
    return d + 1;
}

}  // namespace

int leaf_count(const Tree& tree) { return count_leaves(tree.root); }

int depth(const Tree& tree) { return node_depth(tree.root); }

}  // namespace rsst
