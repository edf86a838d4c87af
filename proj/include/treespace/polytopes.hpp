#ifndef TREESPACE_POLYTOPES_HPP
#define TREESPACE_POLYTOPES_HPP

// Dual simplicial spheres of the associahedron and the permutohedron.
//
// The associahedron dual is built over abstract positions 1..n: vertices are
// the proper bracketing intervals, faces the nested-or-disjoint interval
// sets.  The permutohedron dual uses proper subsets of {1..m} as vertices
// and chains under inclusion as faces (an ordered partition into k blocks is
// the chain of its k-1 leading unions).

#include <cstdint>

#include "treespace/complex.hpp"

namespace treespace {

// Vertex keys of assoc_dual: (lo << 8) | hi.
constexpr VertexKey interval_key(int lo, int hi) {
    return (static_cast<VertexKey>(lo) << 8) | static_cast<VertexKey>(hi);
}
constexpr int interval_lo(VertexKey k) { return static_cast<int>(k >> 8); }
constexpr int interval_hi(VertexKey k) { return static_cast<int>(k & 0xff); }

// Simplicial (n-3)-sphere dual to the associahedron on n letters; universe
// "assoc:n".  Chambers have n-2 intervals; there are catalan(n-1) of them.
SimplicialComplex assoc_dual(int n);

// Simplicial (m-2)-sphere dual to the permutohedron on m letters; universe
// "perm:m".  Vertex keys are subset bitmasks over bits 1..m; chambers are
// the m! maximal chains.
SimplicialComplex perm_dual(int m);

// Exact counting; throws ArithmeticError instead of wrapping around.
std::uint64_t factorial(int k);
std::uint64_t catalan(int k);
std::uint64_t double_factorial_odd(int n);  // (2n-3)!!

}  // namespace treespace

#endif
