#ifndef TREESPACE_COMPLEX_HPP
#define TREESPACE_COMPLEX_HPP

// Abstract simplicial complexes stored by their chambers (maximal faces).
// Faces are implicit subsets, expanded on demand; vertices carry opaque
// 64-bit keys plus a universe tag so that set operations across unrelated
// complexes fail loudly instead of silently.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "treespace/errors.hpp"

namespace treespace {

using VertexKey = std::uint64_t;

struct FVector {
    std::vector<long long> counts;  // counts[i] = number of i-dimensional faces
    long long euler() const;
};

class SimplicialComplex {
public:
    // Chambers given as key sets; the vertex list is derived (sorted keys).
    SimplicialComplex(std::string universe, std::vector<std::vector<VertexKey>> chambers);

    const std::string& universe() const { return universe_; }
    int dimension() const { return dimension_; }
    bool pure() const { return pure_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t chamber_count() const { return chambers_.size(); }
    const std::vector<VertexKey>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& chambers() const { return chambers_; }

    VertexKey key_of(int index) const { return vertices_.at(index); }
    int index_of(VertexKey v) const;  // KeyError when absent
    bool has_vertex(VertexKey v) const;
    std::vector<VertexKey> chamber_keys(std::size_t chamber) const;

    // All faces grouped by dimension, each group in lexicographic order.
    std::vector<std::vector<std::vector<int>>> faces_by_dim() const;
    FVector f_vector() const;
    long long euler_characteristic() const;

    SimplicialComplex closed_star(VertexKey v) const;
    SimplicialComplex link(VertexKey v) const;

private:
    std::string universe_;
    std::vector<VertexKey> vertices_;
    std::vector<std::vector<int>> chambers_;  // sorted index sets, lex order
    int dimension_ = -1;
    bool pure_ = true;
};

// Chambers = maximal cliques of the relation graph.  The relation must be
// symmetric and irreflexive over the given vertices.
SimplicialComplex flag_complex(std::string universe, std::vector<VertexKey> vertices,
                               const std::function<bool(VertexKey, VertexKey)>& related);

SimplicialComplex complex_union(std::span<const SimplicialComplex> parts);
SimplicialComplex complex_intersection(std::span<const SimplicialComplex> parts);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// Chambers of c that are not faces of sub, as key sets.
std::vector<std::vector<VertexKey>> complement_chambers(const SimplicialComplex& c,
                                                        const SimplicialComplex& sub);

// 1-skeleton adjacency over vertex indices.
std::vector<std::vector<int>> skeleton_adjacency(const SimplicialComplex& c);
// Chamber adjacency: two chambers sharing a codimension-1 face of both.
std::vector<std::vector<int>> chamber_adjacency(const SimplicialComplex& c);

int graph_girth(const std::vector<std::vector<int>>& adj);  // 0 when acyclic
bool graph_connected(const std::vector<std::vector<int>>& adj);
bool graph_regular(const std::vector<std::vector<int>>& adj, int degree);

}  // namespace treespace

#endif
