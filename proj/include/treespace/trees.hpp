#ifndef TREESPACE_TREES_HPP
#define TREESPACE_TREES_HPP

// Rooted labeled trees stored as laminar families of clades.
//
// A tree with leaves {1..n} is rooted at an extra leaf labeled 0, so it is
// equivalently an unrooted tree on {0,...,n}.  Each interior edge is encoded
// by its clade: the set of leaf labels on the side away from the root.  Two
// clades can coexist in one tree exactly when they are nested or disjoint,
// so a tree is any pairwise-compatible clade set, binary when it has the
// maximal n-2 of them.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treespace/errors.hpp"

namespace treespace {

// Bit i of a Mask is leaf label i.  Bit 0 (the root leaf) is clear in every
// clade mask and only appears in caterpillar ground sets.
using Mask = std::uint32_t;

constexpr int min_leaves = 3;
constexpr int max_leaves = 20;

constexpr Mask all_leaves_mask(int n) { return (Mask{1} << (n + 1)) - 2; }

int mask_size(Mask m);
int lowest_label(Mask m);
std::vector<int> mask_labels(Mask m);
Mask labels_to_mask(const std::vector<int>& labels);
std::string labels_string(Mask m);  // "{1,2,5}"

// Nested or disjoint.
inline bool masks_compatible(Mask a, Mask b) {
    const Mask common = a & b;
    return common == 0 || common == a || common == b;
}

class Clade {
public:
    Clade(int n, Mask members);
    static Clade from_labels(int n, const std::vector<int>& labels);

    int leaf_count() const { return n_; }
    Mask members() const { return members_; }
    int size() const { return mask_size(members_); }
    std::vector<int> labels() const { return mask_labels(members_); }
    bool contains(int label) const { return (members_ >> label) & 1u; }

    friend bool operator==(const Clade&, const Clade&) = default;
    friend auto operator<=>(const Clade&, const Clade&) = default;

private:
    int n_;
    Mask members_;
};

bool clades_compatible(const Clade& a, const Clade& b);

class Tree {
public:
    // Validates clade ranges, pairwise compatibility, and cardinality.
    Tree(int n, std::vector<Mask> clades);

    // Caller guarantees a sorted, pairwise-compatible, in-range clade set.
    static Tree unchecked(int n, std::vector<Mask> sorted_clades);

    int leaf_count() const { return n_; }
    const std::vector<Mask>& clade_masks() const { return clades_; }
    std::vector<Clade> clades() const;
    int interior_edges() const { return static_cast<int>(clades_.size()); }
    bool is_binary() const { return interior_edges() == n_ - 2; }
    bool contains_clade(Mask m) const;

    friend bool operator==(const Tree&, const Tree&) = default;
    friend auto operator<=>(const Tree&, const Tree&) = default;

private:
    Tree() = default;

    int n_ = 0;
    std::vector<Mask> clades_;  // ascending mask order
};

Tree validate_tree(int n, const std::vector<Clade>& clades);

// All trees with exactly k interior edges, each once, in lexicographic order
// of their sorted clade-mask sequences.
std::vector<Tree> enumerate_trees(int n, int k);

// The 2(n-2) binary trees reachable by one rotation (NNI move): collapse an
// interior edge, then resolve the degree-four vertex the two other ways.
std::vector<Tree> rotation_neighbors(const Tree& t);

struct OrderedPartition {
    std::vector<Mask> blocks;  // nonempty, pairwise disjoint, union = ground
    Mask ground;
};

// A caterpillar is a tree that becomes a path once all leaves are deleted.
// end_a / end_b are one leaf at each end vertex of that path; the partition
// lists the remaining labels block by block, walking from end_a to end_b.
struct CaterpillarForm {
    int end_a;
    int end_b;
    OrderedPartition partition;
};

// Canonical form when t is a caterpillar: the end leaf at each path end is
// the smallest label attached there, oriented so end_a < end_b.
std::optional<CaterpillarForm> is_caterpillar(const Tree& t);

Tree caterpillar_to_tree(int n, const CaterpillarForm& form);

// Child decomposition of the internal vertices, derived from the clade poset.
// Vertex 0 is the root vertex (the one adjacent to leaf 0); vertex i >= 1 is
// the vertex below the i-th clade of t.clade_masks().
struct TreeStructure {
    std::vector<int> parent;                       // parent[0] = -1
    std::vector<std::vector<int>> clade_children;  // internal children per vertex
    std::vector<Mask> leaf_children;               // leaves attached per vertex;
                                                   // leaf 0 appears at vertex 0
};

TreeStructure tree_structure(const Tree& t);

}  // namespace treespace

#endif
