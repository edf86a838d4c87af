#include "treespace/trees.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace treespace {

int mask_size(Mask m) { return std::popcount(m); }

int lowest_label(Mask m) { return std::countr_zero(m); }

std::vector<int> mask_labels(Mask m) {
    std::vector<int> out;
    for (Mask rest = m; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

Mask labels_to_mask(const std::vector<int>& labels) {
    Mask m = 0;
    for (int l : labels) {
        if (l < 0 || l > max_leaves)
            throw RangeError("leaf label " + std::to_string(l) + " out of range");
        m |= Mask{1} << l;
    }
    return m;
}

std::string labels_string(Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int l : mask_labels(m)) {
        if (!first) os << ',';
        os << l;
        first = false;
    }
    os << '}';
    return os.str();
}

static void check_leaf_count(int n) {
    if (n < min_leaves || n > max_leaves)
        throw RangeError("leaf count " + std::to_string(n) + " outside supported range [" +
                         std::to_string(min_leaves) + "," + std::to_string(max_leaves) + "]");
}

static void check_clade_mask(int n, Mask m) {
    if (m & 1u)
        throw InputError("clade " + labels_string(m) + " contains the root leaf 0");
    if (m & ~all_leaves_mask(n))
        throw InputError("clade " + labels_string(m) + " has labels beyond n=" + std::to_string(n));
    const int size = mask_size(m);
    if (size < 2 || size > n - 1)
        throw InputError("clade " + labels_string(m) + " must have between 2 and n-1 members");
}

Clade::Clade(int n, Mask members) : n_(n), members_(members) {
    check_leaf_count(n);
    check_clade_mask(n, members);
}

Clade Clade::from_labels(int n, const std::vector<int>& labels) {
    return Clade(n, labels_to_mask(labels));
}

bool clades_compatible(const Clade& a, const Clade& b) {
    if (a.leaf_count() != b.leaf_count())
        throw InputError("clades defined over different leaf counts " +
                         std::to_string(a.leaf_count()) + " and " + std::to_string(b.leaf_count()));
    return masks_compatible(a.members(), b.members());
}

Tree::Tree(int n, std::vector<Mask> clades) : n_(n), clades_(std::move(clades)) {
    check_leaf_count(n);
    for (Mask m : clades_) check_clade_mask(n, m);
    std::sort(clades_.begin(), clades_.end());
    if (std::adjacent_find(clades_.begin(), clades_.end()) != clades_.end())
        throw InputError("duplicate clade in tree");
    if (static_cast<int>(clades_.size()) > n - 2)
        throw CardinalityError("a tree on " + std::to_string(n) + " leaves has at most " +
                               std::to_string(n - 2) + " interior edges, got " +
                               std::to_string(clades_.size()));
    for (std::size_t i = 0; i < clades_.size(); ++i)
        for (std::size_t j = i + 1; j < clades_.size(); ++j)
            if (!masks_compatible(clades_[i], clades_[j]))
                throw CompatibilityError("incompatible clades " + labels_string(clades_[i]) +
                                         " and " + labels_string(clades_[j]));
}

Tree Tree::unchecked(int n, std::vector<Mask> sorted_clades) {
    Tree t;
    t.n_ = n;
    t.clades_ = std::move(sorted_clades);
    return t;
}

std::vector<Clade> Tree::clades() const {
    std::vector<Clade> out;
    out.reserve(clades_.size());
    for (Mask m : clades_) out.emplace_back(n_, m);
    return out;
}

bool Tree::contains_clade(Mask m) const {
    return std::binary_search(clades_.begin(), clades_.end(), m);
}

Tree validate_tree(int n, const std::vector<Clade>& clades) {
    std::vector<Mask> masks;
    masks.reserve(clades.size());
    for (const Clade& c : clades) {
        if (c.leaf_count() != n)
            throw InputError("clade " + labels_string(c.members()) + " declared over n=" +
                             std::to_string(c.leaf_count()) + ", tree has n=" + std::to_string(n));
        masks.push_back(c.members());
    }
    return Tree(n, std::move(masks));
}

std::vector<Tree> enumerate_trees(int n, int k) {
    check_leaf_count(n);
    if (k < 1 || k > n - 2)
        throw RangeError("interior edge count " + std::to_string(k) + " outside [1," +
                         std::to_string(n - 2) + "]");

    std::vector<Mask> all;
    for (Mask m = 2; m <= all_leaves_mask(n); m += 2) {
        const int size = mask_size(m);
        if (size >= 2 && size <= n - 1) all.push_back(m);
    }

    std::vector<Tree> out;
    std::vector<Mask> chosen;
    chosen.reserve(k);
    const int total = static_cast<int>(all.size());

    // Ascending masks in ascending start order emits the lexicographic order.
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            out.push_back(Tree::unchecked(n, chosen));
            return;
        }
        const int need = k - static_cast<int>(chosen.size());
        for (int i = start; i + need <= total; ++i) {
            const Mask c = all[i];
            bool ok = true;
            for (Mask d : chosen)
                if (!masks_compatible(c, d)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(c);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

TreeStructure tree_structure(const Tree& t) {
    const auto& cl = t.clade_masks();
    const int k = static_cast<int>(cl.size());
    TreeStructure s;
    s.parent.assign(k + 1, -1);
    s.clade_children.assign(k + 1, {});
    s.leaf_children.assign(k + 1, 0);

    // Parent of clade i = the smallest clade strictly containing it (laminar
    // families make it unique), else the root vertex.
    for (int i = 0; i < k; ++i) {
        int best = -1;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if ((cl[i] & cl[j]) == cl[i] && cl[i] != cl[j]) {
                if (best < 0 || mask_size(cl[j]) < mask_size(cl[best])) best = j;
            }
        }
        const int vertex = i + 1;
        const int parent = best < 0 ? 0 : best + 1;
        s.parent[vertex] = parent;
        s.clade_children[parent].push_back(vertex);
    }

    Mask covered_root = 0;
    for (int i = 0; i < k; ++i) {
        Mask covered = 0;
        for (int child : s.clade_children[i + 1]) covered |= cl[child - 1];
        s.leaf_children[i + 1] = cl[i] & ~covered;
        if (s.parent[i + 1] == 0) covered_root |= cl[i];
    }
    s.leaf_children[0] = (all_leaves_mask(t.leaf_count()) & ~covered_root) | 1u;
    return s;
}

std::vector<Tree> rotation_neighbors(const Tree& t) {
    if (!t.is_binary())
        throw ArityError("rotation moves are defined on binary trees; tree has " +
                         std::to_string(t.interior_edges()) + " of " +
                         std::to_string(t.leaf_count() - 2) + " interior edges");

    const auto& cl = t.clade_masks();
    const TreeStructure s = tree_structure(t);
    const Mask full = all_leaves_mask(t.leaf_count());

    std::vector<Tree> out;
    out.reserve(2 * cl.size());
    for (int i = 0; i < static_cast<int>(cl.size()); ++i) {
        const int vertex = i + 1;
        // The two child subtrees of the collapsed edge, as leaf sets.
        std::vector<Mask> kids;
        for (int child : s.clade_children[vertex]) kids.push_back(cl[child - 1]);
        for (Mask rest = s.leaf_children[vertex]; rest != 0; rest &= rest - 1)
            kids.push_back(rest & ~(rest - 1));
        // Sibling subtree hanging off the parent vertex, away from the root.
        const int parent = s.parent[vertex];
        const Mask parent_members = parent == 0 ? full : cl[parent - 1];
        const Mask sibling = parent_members & ~cl[i];

        for (Mask kid : kids) {
            std::vector<Mask> clades = cl;
            clades[i] = kid | sibling;
            std::sort(clades.begin(), clades.end());
            out.push_back(Tree::unchecked(t.leaf_count(), std::move(clades)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CaterpillarForm> is_caterpillar(const Tree& t) {
    const TreeStructure s = tree_structure(t);
    const int vertices = static_cast<int>(s.parent.size());

    // Internal degree = internal children + parent edge; a caterpillar's
    // internal vertices form a path, so every internal degree is <= 2.
    std::vector<int> degree(vertices, 0);
    for (int v = 1; v < vertices; ++v) {
        ++degree[v];
        ++degree[s.parent[v]];
    }
    for (int v = 0; v < vertices; ++v)
        if (degree[v] > 2) return std::nullopt;

    std::vector<int> path;
    if (vertices == 1) {
        path.push_back(0);
    } else {
        std::vector<std::vector<int>> adj(vertices);
        for (int v = 1; v < vertices; ++v) {
            adj[v].push_back(s.parent[v]);
            adj[s.parent[v]].push_back(v);
        }
        int start = 0;
        for (int v = 0; v < vertices; ++v)
            if (degree[v] == 1) { start = v; break; }
        int prev = -1, cur = start;
        while (true) {
            path.push_back(cur);
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) { next = w; break; }
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
    }

    int end_a, end_b;
    std::vector<Mask> blocks;
    if (path.size() == 1) {
        const Mask leaves = s.leaf_children[0];
        end_a = lowest_label(leaves);
        end_b = lowest_label(leaves & (leaves - 1));
        blocks.push_back(leaves & ~(Mask{1} << end_a) & ~(Mask{1} << end_b));
    } else {
        end_a = lowest_label(s.leaf_children[path.front()]);
        end_b = lowest_label(s.leaf_children[path.back()]);
        if (end_a > end_b) {
            std::swap(end_a, end_b);
            std::reverse(path.begin(), path.end());
        }
        for (int v : path) blocks.push_back(s.leaf_children[v]);
        blocks.front() &= ~(Mask{1} << end_a);
        blocks.back() &= ~(Mask{1} << end_b);
    }

    const Mask ground = (all_leaves_mask(t.leaf_count()) | 1u) & ~(Mask{1} << end_a) &
                        ~(Mask{1} << end_b);
    return CaterpillarForm{end_a, end_b, OrderedPartition{std::move(blocks), ground}};
}

Tree caterpillar_to_tree(int n, const CaterpillarForm& form) {
    check_leaf_count(n);
    const Mask universe = all_leaves_mask(n) | 1u;  // {0,...,n}
    const Mask end_bits = (Mask{1} << form.end_a) | (Mask{1} << form.end_b);
    if (form.end_a == form.end_b || (end_bits & ~universe))
        throw PartitionError("caterpillar ends must be two distinct labels in {0..n}");

    Mask seen = end_bits;
    for (Mask block : form.partition.blocks) {
        if (block == 0) throw PartitionError("empty block in ordered partition");
        if (block & ~universe) throw PartitionError("block " + labels_string(block) +
                                                    " has labels outside {0..n}");
        if (block & seen) throw PartitionError("label reused across blocks or ends");
        seen |= block;
    }
    if (seen != universe)
        throw PartitionError("ends and blocks must cover {0..n} exactly; missing " +
                             labels_string(universe & ~seen));
    if (form.partition.ground != (universe & ~end_bits))
        throw PartitionError("partition ground set must be {0..n} minus the two ends");

    // Walking from end_a, each interior edge cuts off a prefix of blocks; the
    // clade is whichever side avoids the root leaf 0.
    std::vector<Mask> clades;
    Mask side = Mask{1} << form.end_a;
    for (std::size_t i = 0; i + 1 < form.partition.blocks.size(); ++i) {
        side |= form.partition.blocks[i];
        clades.push_back((side & 1u) ? (universe & ~side) : side);
    }
    return Tree(n, std::move(clades));
}

}  // namespace treespace
