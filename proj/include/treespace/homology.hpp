#ifndef TREESPACE_HOMOLOGY_HPP
#define TREESPACE_HOMOLOGY_HPP

// Simplicial homology over a prime field via sparse column elimination.
// Signs come from the canonical vertex order; ranks are deterministic
// (columns processed left to right, pivot = largest remaining row index).

#include <iosfwd>

#include "treespace/complex.hpp"
#include "treespace/treespace.hpp"

namespace treespace {

struct BoundaryMatrix {
    int k = 0;           // boundary degree: maps k-faces to (k-1)-faces
    long long p = 2;     // field characteristic
    std::size_t rows = 0;
    std::size_t cols = 0;
    // columns[j] = (row, coefficient mod p), sorted by row
    std::vector<std::vector<std::pair<int, long long>>> columns;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k, long long p);

long long boundary_rank(const BoundaryMatrix& m);

// Coordinate-list dump: "k p rows cols" header, then "row col value" lines.
void write_boundary_matrix(std::ostream& os, const BoundaryMatrix& m);

struct BettiVector {
    long long characteristic = 2;
    std::vector<long long> reduced;  // reduced Betti numbers 0..dim

    // 1 + sum (-1)^i reduced[i]; equals the Euler characteristic.
    long long euler() const;
};

BettiVector betti_numbers(const SimplicialComplex& c, long long p);

// Reduced homology of T_n concentrated in degree n-3 with rank (n-1)!.
bool verify_bouquet(const TreeSpace& ts, long long p);
bool verify_bouquet(int n, long long p);

// The chambers of T_n missed by the union of all closed stars St(v_ij) are
// exactly the central caterpillar chambers (ends 0 and n); also checks that
// every star and every pairwise star intersection contains v_*.
bool verify_star_union_complement(const TreeSpace& ts);
bool verify_star_union_complement(int n);

}  // namespace treespace

#endif
