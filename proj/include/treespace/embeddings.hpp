#ifndef TREESPACE_EMBEDDINGS_HPP
#define TREESPACE_EMBEDDINGS_HPP

// Embeddings of the dual spheres into T_n, the cover censuses, and the
// flower of (n-1)! associahedron duals around a central permutohedron dual.

#include <vector>

#include "treespace/polytopes.hpp"
#include "treespace/treespace.hpp"
#include "treespace/trees.hpp"

namespace treespace {

// Associahedron dual carried into T_n by a leaf order: interval [i..j] maps
// to the clade {order[i],...,order[j]}.  An order and its reversal have the
// same image; the lexicographically smaller of the two is stored.
class AssocEmbedding {
public:
    AssocEmbedding(int n, std::vector<int> order);

    int n() const { return n_; }
    const std::vector<int>& order() const { return order_; }

    Mask map_interval(int lo, int hi) const;
    const std::vector<Mask>& image_vertices() const { return image_vertices_; }
    const std::vector<Tree>& image_chambers() const { return image_chambers_; }
    bool contains_chamber(const Tree& t) const;
    SimplicialComplex image_complex() const;  // subcomplex of T_n

    friend bool operator==(const AssocEmbedding& a, const AssocEmbedding& b) {
        return a.n_ == b.n_ && a.order_ == b.order_;
    }

private:
    int n_;
    std::vector<int> order_;
    std::vector<Mask> image_vertices_;
    std::vector<Tree> image_chambers_;
};

// Permutohedron dual P_{n-1} carried into T_n by pinning two labels of
// {0..n} at the caterpillar ends.  A proper subset S of the remaining
// labels maps to the clade cut off by the edge separating {a} u S from the
// rest (a = smaller end).
class PermEmbedding {
public:
    PermEmbedding(int n, int end_a, int end_b);

    int n() const { return n_; }
    int end_a() const { return end_a_; }
    int end_b() const { return end_b_; }
    const std::vector<int>& free_labels() const { return free_labels_; }

    Mask map_subset(Mask subset_of_free) const;
    const std::vector<Mask>& image_vertices() const { return image_vertices_; }
    const std::vector<Tree>& image_chambers() const { return image_chambers_; }
    bool contains_chamber(const Tree& t) const;
    SimplicialComplex image_complex() const;

private:
    int n_;
    int end_a_, end_b_;            // end_a < end_b
    std::vector<int> free_labels_; // {0..n} minus the ends, ascending
    std::vector<Mask> image_vertices_;
    std::vector<Tree> image_chambers_;
};

inline AssocEmbedding embed_assoc(int n, std::vector<int> order) {
    return AssocEmbedding(n, std::move(order));
}
inline PermEmbedding embed_perm(int n, int end_a, int end_b) {
    return PermEmbedding(n, end_a, end_b);
}

// All n!/2 distinct associahedron embeddings, sorted by canonical order.
std::vector<AssocEmbedding> all_assoc_embeddings(int n);
// All C(n+1,2) permutohedron embeddings, sorted by end pair.
std::vector<PermEmbedding> all_perm_embeddings(int n);

struct CoverReport {
    std::vector<long long> multiplicity;  // per chamber id of T_n
    std::vector<int> uncovered;           // chamber ids with multiplicity 0
};

CoverReport assoc_cover_report(const TreeSpace& ts);
CoverReport perm_cover_report(const TreeSpace& ts);

// (n-1)! petals with leaf orders (sigma, n) around the center with ends {0,n}.
struct Flower {
    int n;
    std::vector<AssocEmbedding> petals;
    PermEmbedding center;
};

Flower build_flower(int n);

// Number of (petal, petal-chamber) pairs over a chamber of T_n.  Computed by
// petal membership and cross-checked against 2^k, k = interior edges off the
// 0-n path (the clades not containing label n).
long long flower_fiber_size(const Flower& flower, const Tree& chamber);
// Per-chamber fiber sizes for a whole tree space.
std::vector<long long> flower_fibers(const Flower& flower, const TreeSpace& ts);

// The clade {1..n-1}; checks that every petal image contains it.
Clade flower_common_vertex(const Flower& flower);

}  // namespace treespace

#endif
