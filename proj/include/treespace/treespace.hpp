#ifndef TREESPACE_TREESPACE_HPP
#define TREESPACE_TREESPACE_HPP

// The tree-space complex T_n: one vertex per clade, one (k-1)-simplex per
// tree with k interior edges, chambers the (2n-3)!! binary trees.

#include <unordered_map>

#include "treespace/complex.hpp"
#include "treespace/trees.hpp"

namespace treespace {

class TreeSpace {
public:
    static TreeSpace build(int n);

    int n() const { return n_; }
    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<Tree>& chamber_trees() const { return chamber_trees_; }
    std::size_t chamber_count() const { return chamber_trees_.size(); }

    int chamber_id(const Tree& t) const;  // KeyError when t is not a chamber
    const Tree& chamber_tree(int id) const { return chamber_trees_.at(id); }

    // Chamber adjacency through shared codimension-1 faces; equals rotation
    // adjacency of the underlying binary trees.
    std::vector<std::vector<int>> rotation_graph() const;

private:
    struct MaskVecHash {
        std::size_t operator()(const std::vector<Mask>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (Mask m : v) {
                h ^= m;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    TreeSpace(int n, SimplicialComplex complex, std::vector<Tree> chambers);

    int n_;
    SimplicialComplex complex_;
    std::vector<Tree> chamber_trees_;  // canonical order = complex chamber order
    std::unordered_map<std::vector<Mask>, int, MaskVecHash> chamber_ids_;
};

inline TreeSpace build_tree_space(int n) { return TreeSpace::build(n); }

// The vertex shared by every flower petal: clade {1,...,n-1}.
Clade v_star(int n);
// The cherry vertex with clade {i,j}; i and j must avoid the path labels 0, n.
Clade v_ij(int n, int i, int j);

}  // namespace treespace

#endif
