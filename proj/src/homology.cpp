#include "treespace/homology.hpp"

#include <algorithm>
#include <ostream>

#include "treespace/embeddings.hpp"
#include "treespace/polytopes.hpp"

namespace treespace {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long mod_pow(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

long long mod_inverse(long long a, long long p) { return mod_pow(a, p - 2, p); }

using Column = std::vector<std::pair<int, long long>>;

// dst -= factor * src (mod p), both sorted by row.
Column subtract_scaled(const Column& dst, const Column& src, long long factor, long long p) {
    Column out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            const long long v = (p - factor * src[j].second % p) % p;
            if (v != 0) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            const long long v = ((dst[i].second - factor * src[j].second) % p + p) % p;
            if (v != 0) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

BoundaryMatrix boundary_from_faces(const std::vector<std::vector<int>>& low,
                                   const std::vector<std::vector<int>>& high, int k, long long p) {
    BoundaryMatrix m;
    m.k = k;
    m.p = p;
    m.rows = low.size();
    m.cols = high.size();
    m.columns.resize(high.size());
    for (std::size_t j = 0; j < high.size(); ++j) {
        const auto& face = high[j];
        Column col;
        col.reserve(face.size());
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<int> facet;
            facet.reserve(face.size() - 1);
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop) facet.push_back(face[i]);
            const auto it = std::lower_bound(low.begin(), low.end(), facet);
            const int row = static_cast<int>(it - low.begin());
            const long long sign = (drop % 2 == 0) ? 1 : p - 1;
            col.emplace_back(row, sign % p);
        }
        std::sort(col.begin(), col.end());
        m.columns[j] = std::move(col);
    }
    return m;
}

long long reduce_rank(std::vector<Column> columns, std::size_t rows, long long p) {
    std::vector<int> pivot_owner(rows, -1);
    std::vector<Column> pivots;
    pivots.reserve(columns.size());
    long long rank = 0;
    for (auto& raw : columns) {
        Column col = std::move(raw);
        while (!col.empty()) {
            const int low = col.back().first;
            const long long coef = col.back().second;
            const int owner = pivot_owner[low];
            if (owner < 0) {
                const long long inv = mod_inverse(coef, p);
                for (auto& e : col) e.second = e.second * inv % p;
                pivot_owner[low] = static_cast<int>(pivots.size());
                pivots.push_back(std::move(col));
                ++rank;
                break;
            }
            col = subtract_scaled(col, pivots[owner], coef, p);
        }
    }
    return rank;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k, long long p) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime");
    if (k < 1 || k > c.dimension())
        throw RangeError("boundary degree " + std::to_string(k) + " outside 1.." +
                         std::to_string(c.dimension()));
    const auto faces = c.faces_by_dim();
    return boundary_from_faces(faces[k - 1], faces[k], k, p);
}

long long boundary_rank(const BoundaryMatrix& m) { return reduce_rank(m.columns, m.rows, m.p); }

void write_boundary_matrix(std::ostream& os, const BoundaryMatrix& m) {
    os << m.k << ' ' << m.p << ' ' << m.rows << ' ' << m.cols << '\n';
    for (std::size_t j = 0; j < m.columns.size(); ++j)
        for (const auto& [row, value] : m.columns[j]) os << row << ' ' << j << ' ' << value << '\n';
}

long long BettiVector::euler() const {
    long long chi = 1;
    long long sign = 1;
    for (long long b : reduced) {
        chi += sign * b;
        sign = -sign;
    }
    return chi;
}

BettiVector betti_numbers(const SimplicialComplex& c, long long p) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime");
    BettiVector betti;
    betti.characteristic = p;
    const int dim = c.dimension();
    if (dim < 0) return betti;

    const auto faces = c.faces_by_dim();
    std::vector<long long> rank(dim + 2, 0);
    for (int k = 1; k <= dim; ++k)
        rank[k] = reduce_rank(boundary_from_faces(faces[k - 1], faces[k], k, p).columns,
                              faces[k - 1].size(), p);

    betti.reduced.resize(dim + 1);
    const long long f0 = static_cast<long long>(faces[0].size());
    // Reduced at degree 0: the augmentation has rank 1 on a nonempty complex.
    betti.reduced[0] = f0 - (f0 > 0 ? 1 : 0) - rank[1];
    for (int k = 1; k <= dim; ++k)
        betti.reduced[k] = static_cast<long long>(faces[k].size()) - rank[k] - rank[k + 1];
    return betti;
}

bool verify_bouquet(const TreeSpace& ts, long long p) {
    const BettiVector betti = betti_numbers(ts.complex(), p);
    const long long spheres = static_cast<long long>(factorial(ts.n() - 1));
    for (std::size_t k = 0; k < betti.reduced.size(); ++k) {
        const long long want = (static_cast<int>(k) == ts.n() - 3) ? spheres : 0;
        if (betti.reduced[k] != want) return false;
    }
    return true;
}

bool verify_bouquet(int n, long long p) { return verify_bouquet(build_tree_space(n), p); }

bool verify_star_union_complement(const TreeSpace& ts) {
    const int n = ts.n();
    const Mask star_mask = v_star(n).members();

    std::vector<SimplicialComplex> stars;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            stars.push_back(ts.complex().closed_star(v_ij(n, i, j).members()));

    // Every star, and every pairwise star intersection, contains v_*.
    for (const auto& st : stars)
        if (!st.has_vertex(star_mask)) return false;
    for (std::size_t a = 0; a < stars.size(); ++a)
        for (std::size_t b = a + 1; b < stars.size(); ++b) {
            const SimplicialComplex both = complex_intersection(stars[a], stars[b]);
            if (!both.has_vertex(star_mask)) return false;
        }

    const SimplicialComplex star_union = complex_union(stars);
    const auto missed = complement_chambers(ts.complex(), star_union);

    std::vector<std::vector<VertexKey>> central;
    const PermEmbedding center = embed_perm(n, 0, n);
    for (const Tree& t : center.image_chambers())
        central.emplace_back(t.clade_masks().begin(), t.clade_masks().end());
    std::sort(central.begin(), central.end());

    std::vector<std::vector<VertexKey>> missed_sorted(missed);
    std::sort(missed_sorted.begin(), missed_sorted.end());
    return missed_sorted == central;
}

bool verify_star_union_complement(int n) {
    return verify_star_union_complement(build_tree_space(n));
}

}  // namespace treespace
