#include "treespace/newick.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace treespace {

namespace {

struct Node {
    int label = -1;  // >= 0 for leaves
    std::vector<int> children;
    std::size_t pos = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Tree run() {
        skip_space();
        int root = parse_subtree();
        skip_space();
        expect(';');
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("trailing characters after ';'", pos_);

        // Suppress a unary root: with the implicit root leaf 0 attached, a
        // single-child root is a degree-two vertex.
        while (nodes_[root].label < 0 && nodes_[root].children.size() == 1)
            root = nodes_[root].children[0];
        if (nodes_[root].label >= 0)
            throw ParseError("tree must have at least two leaves", nodes_[root].pos);

        if (seen_ != (all_leaves_mask(max_label_) | 0u) || max_label_ < min_leaves)
            missing_label_error();

        std::vector<Mask> clades;
        collect(root, true, clades);
        return Tree(max_label_, std::move(clades));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<Node> nodes_;
    Mask seen_ = 0;
    int max_label_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    int parse_subtree() {
        skip_space();
        int id;
        if (peek() == '(') {
            const std::size_t open = pos_;
            ++pos_;
            id = static_cast<int>(nodes_.size());
            nodes_.push_back(Node{-1, {}, open});
            std::vector<int> children;
            children.push_back(parse_subtree());
            skip_space();
            while (peek() == ',') {
                ++pos_;
                children.push_back(parse_subtree());
                skip_space();
            }
            expect(')');
            nodes_[id].children = std::move(children);
        } else {
            id = parse_leaf();
        }
        skip_space();
        if (peek() == ':') {
            ++pos_;
            parse_length();
        }
        return id;
    }

    int parse_leaf() {
        const std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a leaf label", pos_);
        int label = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), label);
        if (ec != std::errc{})
            throw ParseError("invalid leaf label", pos_);
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        if (label < 1 || label > max_leaves)
            throw ParseError("leaf label " + std::to_string(label) + " outside 1.." +
                             std::to_string(max_leaves), start);
        const Mask bit = Mask{1} << label;
        if (seen_ & bit)
            throw ParseError("duplicate leaf label " + std::to_string(label), start);
        seen_ |= bit;
        max_label_ = std::max(max_label_, label);
        nodes_.push_back(Node{label, {}, start});
        return static_cast<int>(nodes_.size()) - 1;
    }

    void parse_length() {
        skip_space();
        const std::size_t start = pos_;
        double value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == text_.data() + pos_)
            throw ParseError("invalid branch length", start);
        pos_ = static_cast<std::size_t>(ptr - text_.data());
    }

    [[noreturn]] void missing_label_error() const {
        if (max_label_ < min_leaves)
            throw ParseError("tree needs at least " + std::to_string(min_leaves) + " leaves",
                             text_.size());
        for (int l = 1; l <= max_label_; ++l)
            if (!((seen_ >> l) & 1u))
                throw ParseError("missing leaf label " + std::to_string(l), text_.size());
        throw ParseError("inconsistent leaf labels", text_.size());
    }

    // Returns the leaf set below a node; records clades for multi-child
    // internal nodes strictly below the root.  Unary nodes contribute no
    // clade of their own, which is exactly their suppression.
    Mask collect(int id, bool is_root, std::vector<Mask>& clades) const {
        const Node& node = nodes_[id];
        if (node.label >= 0) return Mask{1} << node.label;
        Mask below = 0;
        for (int child : node.children) below |= collect(child, false, clades);
        if (!is_root && node.children.size() >= 2) clades.push_back(below);
        return below;
    }
};

void render(const TreeStructure& s, const std::vector<Mask>& cl, int vertex, bool is_root,
            std::ostringstream& os) {
    // Children ordered by smallest leaf label; the root leaf 0 stays implicit.
    std::vector<std::pair<int, int>> order;  // (min label, child vertex or ~label)
    for (int child : s.clade_children[vertex])
        order.emplace_back(lowest_label(cl[child - 1]), child);
    Mask leaves = s.leaf_children[vertex];
    if (is_root) leaves &= ~1u;
    for (int l : mask_labels(leaves)) order.emplace_back(l, ~l);
    std::sort(order.begin(), order.end());

    os << '(';
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) os << ',';
        if (order[i].second < 0)
            os << ~order[i].second;
        else
            render(s, cl, order[i].second, false, os);
    }
    os << ')';
}

}  // namespace

Tree parse_newick(std::string_view text) { return Parser(text).run(); }

std::string to_newick(const Tree& t) {
    const TreeStructure s = tree_structure(t);
    std::ostringstream os;
    render(s, t.clade_masks(), 0, true, os);
    os << ';';
    return os.str();
}

}  // namespace treespace
