#include "treespace/treespace.hpp"

#include <string>

namespace treespace {

TreeSpace::TreeSpace(int n, SimplicialComplex complex, std::vector<Tree> chambers)
    : n_(n), complex_(std::move(complex)), chamber_trees_(std::move(chambers)) {
    chamber_ids_.reserve(chamber_trees_.size());
    for (std::size_t i = 0; i < chamber_trees_.size(); ++i)
        chamber_ids_.emplace(chamber_trees_[i].clade_masks(), static_cast<int>(i));
}

TreeSpace TreeSpace::build(int n) {
    if (n < min_leaves || n > max_leaves)
        throw RangeError("tree space supports " + std::to_string(min_leaves) + " <= n <= " +
                         std::to_string(max_leaves));

    std::vector<Tree> chambers = enumerate_trees(n, n - 2);
    std::vector<std::vector<VertexKey>> key_sets;
    key_sets.reserve(chambers.size());
    for (const Tree& t : chambers) {
        std::vector<VertexKey> keys(t.clade_masks().begin(), t.clade_masks().end());
        key_sets.push_back(std::move(keys));
    }
    SimplicialComplex complex("tree:" + std::to_string(n), std::move(key_sets));

    // Chamber enumeration order and complex chamber order coincide: both are
    // lexicographic over ascending clade masks.
    return TreeSpace(n, std::move(complex), std::move(chambers));
}

int TreeSpace::chamber_id(const Tree& t) const {
    auto it = chamber_ids_.find(t.clade_masks());
    if (it == chamber_ids_.end())
        throw KeyError("tree is not a chamber of T_" + std::to_string(n_));
    return it->second;
}

std::vector<std::vector<int>> TreeSpace::rotation_graph() const {
    return chamber_adjacency(complex_);
}

Clade v_star(int n) { return Clade(n, all_leaves_mask(n) & ~(Mask{1} << n)); }

Clade v_ij(int n, int i, int j) {
    if (i == j) throw LabelError("v_ij needs two distinct labels");
    for (int l : {i, j})
        if (l <= 0 || l >= n)
            throw LabelError("v_ij label " + std::to_string(l) + " must lie in 1.." +
                             std::to_string(n - 1));
    return Clade(n, (Mask{1} << i) | (Mask{1} << j));
}

}  // namespace treespace
