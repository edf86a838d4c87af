#include "treespace/complex.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace treespace {

long long FVector::euler() const {
    long long chi = 0;
    long long sign = 1;
    for (long long c : counts) {
        chi += sign * c;
        sign = -sign;
    }
    return chi;
}

SimplicialComplex::SimplicialComplex(std::string universe,
                                     std::vector<std::vector<VertexKey>> chambers)
    : universe_(std::move(universe)) {
    for (auto& ch : chambers) {
        std::sort(ch.begin(), ch.end());
        if (std::adjacent_find(ch.begin(), ch.end()) != ch.end())
            throw InputError("chamber with repeated vertex key");
        if (ch.empty()) throw InputError("empty chamber");
    }
    std::sort(chambers.begin(), chambers.end());
    chambers.erase(std::unique(chambers.begin(), chambers.end()), chambers.end());

    for (const auto& ch : chambers)
        vertices_.insert(vertices_.end(), ch.begin(), ch.end());
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    chambers_.reserve(chambers.size());
    for (const auto& ch : chambers) {
        std::vector<int> idx;
        idx.reserve(ch.size());
        for (VertexKey v : ch)
            idx.push_back(static_cast<int>(
                std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin()));
        chambers_.push_back(std::move(idx));
    }
    std::sort(chambers_.begin(), chambers_.end());

    if (!chambers_.empty()) {
        dimension_ = static_cast<int>(chambers_.front().size()) - 1;
        for (const auto& ch : chambers_) {
            const int d = static_cast<int>(ch.size()) - 1;
            if (d != dimension_) pure_ = false;
            dimension_ = std::max(dimension_, d);
        }
    }
}

int SimplicialComplex::index_of(VertexKey v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw KeyError("vertex key " + std::to_string(v) + " not in complex " + universe_);
    return static_cast<int>(it - vertices_.begin());
}

bool SimplicialComplex::has_vertex(VertexKey v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<VertexKey> SimplicialComplex::chamber_keys(std::size_t chamber) const {
    std::vector<VertexKey> keys;
    for (int i : chambers_.at(chamber)) keys.push_back(vertices_[i]);
    return keys;
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::faces_by_dim() const {
    std::vector<std::vector<std::vector<int>>> faces(dimension_ + 1);
    for (const auto& ch : chambers_) {
        const int m = static_cast<int>(ch.size());
        for (unsigned bits = 1; bits < (1u << m); ++bits) {
            std::vector<int> face;
            for (int i = 0; i < m; ++i)
                if ((bits >> i) & 1u) face.push_back(ch[i]);
            faces[face.size() - 1].push_back(std::move(face));
        }
    }
    for (auto& level : faces) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return faces;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    for (const auto& level : faces_by_dim())
        f.counts.push_back(static_cast<long long>(level.size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const { return f_vector().euler(); }

SimplicialComplex SimplicialComplex::closed_star(VertexKey v) const {
    const int idx = index_of(v);
    std::vector<std::vector<VertexKey>> picked;
    for (std::size_t c = 0; c < chambers_.size(); ++c)
        if (std::binary_search(chambers_[c].begin(), chambers_[c].end(), idx))
            picked.push_back(chamber_keys(c));
    return SimplicialComplex(universe_, std::move(picked));
}

SimplicialComplex SimplicialComplex::link(VertexKey v) const {
    const int idx = index_of(v);
    std::vector<std::vector<VertexKey>> picked;
    for (std::size_t c = 0; c < chambers_.size(); ++c) {
        if (!std::binary_search(chambers_[c].begin(), chambers_[c].end(), idx)) continue;
        std::vector<VertexKey> keys;
        for (int i : chambers_[c])
            if (i != idx) keys.push_back(vertices_[i]);
        if (!keys.empty()) picked.push_back(std::move(keys));
    }
    return SimplicialComplex(universe_, std::move(picked));
}

namespace {

using Bitset = std::vector<std::uint64_t>;

bool bit_test(const Bitset& b, int i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void bit_set(Bitset& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

int bitset_count(const Bitset& b) {
    int c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
}

// Bron-Kerbosch with pivoting; emits maximal cliques (singletons included).
void bron_kerbosch(const std::vector<Bitset>& adj, std::vector<int>& r, Bitset p, Bitset x,
                   std::vector<std::vector<int>>& out) {
    const int words = static_cast<int>(p.size());
    bool p_empty = true, x_empty = true;
    for (int w = 0; w < words; ++w) {
        if (p[w]) p_empty = false;
        if (x[w]) x_empty = false;
    }
    if (p_empty && x_empty) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (int w = 0; w < words; ++w) {
        std::uint64_t both = p[w] | x[w];
        while (both) {
            const int u = (w << 6) + std::countr_zero(both);
            both &= both - 1;
            int cnt = 0;
            for (int k = 0; k < words; ++k) cnt += std::popcount(p[k] & adj[u][k]);
            if (cnt > best) { best = cnt; pivot = u; }
        }
    }
    for (int w = 0; w < words; ++w) {
        std::uint64_t cand = p[w] & ~adj[pivot][w];
        while (cand) {
            const int v = (w << 6) + std::countr_zero(cand);
            cand &= cand - 1;
            Bitset p2(words), x2(words);
            for (int k = 0; k < words; ++k) {
                p2[k] = p[k] & adj[v][k];
                x2[k] = x[k] & adj[v][k];
            }
            r.push_back(v);
            bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
            r.pop_back();
            p[w] &= ~(std::uint64_t{1} << (v & 63));
            bit_set(x, v);
        }
    }
}

}  // namespace

SimplicialComplex flag_complex(std::string universe, std::vector<VertexKey> vertices,
                               const std::function<bool(VertexKey, VertexKey)>& related) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw InputError("duplicate vertex key");

    const int n = static_cast<int>(vertices.size());
    const int words = (n + 63) / 64;
    std::vector<Bitset> adj(n, Bitset(words, 0));
    for (int i = 0; i < n; ++i) {
        if (related(vertices[i], vertices[i]))
            throw InputError("relation must be irreflexive");
        for (int j = i + 1; j < n; ++j) {
            const bool ij = related(vertices[i], vertices[j]);
            if (ij != related(vertices[j], vertices[i]))
                throw InputError("relation must be symmetric");
            if (ij) {
                bit_set(adj[i], j);
                bit_set(adj[j], i);
            }
        }
    }

    std::vector<std::vector<int>> cliques;
    if (n > 0) {
        Bitset p(words, 0), x(words, 0);
        for (int i = 0; i < n; ++i) bit_set(p, i);
        std::vector<int> r;
        bron_kerbosch(adj, r, std::move(p), std::move(x), cliques);
    }

    std::vector<std::vector<VertexKey>> chambers;
    chambers.reserve(cliques.size());
    for (auto& cl : cliques) {
        std::vector<VertexKey> keys;
        keys.reserve(cl.size());
        for (int i : cl) keys.push_back(vertices[i]);
        chambers.push_back(std::move(keys));
    }
    return SimplicialComplex(std::move(universe), std::move(chambers));
}

namespace {

void check_same_universe(std::span<const SimplicialComplex> parts) {
    if (parts.empty()) throw InputError("set operation over zero complexes");
    for (const auto& c : parts)
        if (c.universe() != parts.front().universe())
            throw UniverseError("complexes from universes '" + parts.front().universe() +
                                "' and '" + c.universe() + "'");
}

// Remove any key set contained in another.
void prune_non_maximal(std::vector<std::vector<VertexKey>>& sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<VertexKey>> keep;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < sets.size() && maximal; ++j) {
            if (i == j || sets[j].size() <= sets[i].size()) continue;
            if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
                maximal = false;
        }
        if (maximal) keep.push_back(sets[i]);
    }
    sets = std::move(keep);
}

}  // namespace

SimplicialComplex complex_union(std::span<const SimplicialComplex> parts) {
    check_same_universe(parts);
    std::vector<std::vector<VertexKey>> chambers;
    for (const auto& c : parts)
        for (std::size_t i = 0; i < c.chamber_count(); ++i) chambers.push_back(c.chamber_keys(i));
    prune_non_maximal(chambers);
    return SimplicialComplex(parts.front().universe(), std::move(chambers));
}

SimplicialComplex complex_intersection(std::span<const SimplicialComplex> parts) {
    check_same_universe(parts);
    std::vector<std::vector<VertexKey>> acc;
    for (std::size_t i = 0; i < parts[0].chamber_count(); ++i) acc.push_back(parts[0].chamber_keys(i));
    for (std::size_t p = 1; p < parts.size(); ++p) {
        std::vector<std::vector<VertexKey>> rhs;
        for (std::size_t i = 0; i < parts[p].chamber_count(); ++i)
            rhs.push_back(parts[p].chamber_keys(i));
        std::vector<std::vector<VertexKey>> next;
        for (const auto& a : acc)
            for (const auto& b : rhs) {
                std::vector<VertexKey> common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(common));
                if (!common.empty()) next.push_back(std::move(common));
            }
        prune_non_maximal(next);
        acc = std::move(next);
    }
    return SimplicialComplex(parts.front().universe(), std::move(acc));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    const SimplicialComplex parts[] = {a, b};
    return complex_union(std::span<const SimplicialComplex>(parts));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    const SimplicialComplex parts[] = {a, b};
    return complex_intersection(std::span<const SimplicialComplex>(parts));
}

std::vector<std::vector<VertexKey>> complement_chambers(const SimplicialComplex& c,
                                                        const SimplicialComplex& sub) {
    if (c.universe() != sub.universe())
        throw UniverseError("complexes from universes '" + c.universe() + "' and '" +
                            sub.universe() + "'");
    std::vector<std::vector<VertexKey>> sub_chambers;
    for (std::size_t i = 0; i < sub.chamber_count(); ++i) sub_chambers.push_back(sub.chamber_keys(i));

    std::vector<std::vector<VertexKey>> out;
    for (std::size_t i = 0; i < c.chamber_count(); ++i) {
        auto keys = c.chamber_keys(i);
        bool inside = false;
        for (const auto& s : sub_chambers)
            if (s.size() >= keys.size() &&
                std::includes(s.begin(), s.end(), keys.begin(), keys.end())) {
                inside = true;
                break;
            }
        if (!inside) out.push_back(std::move(keys));
    }
    return out;
}

std::vector<std::vector<int>> skeleton_adjacency(const SimplicialComplex& c) {
    std::vector<std::vector<int>> adj(c.vertex_count());
    const auto faces = c.faces_by_dim();
    if (faces.size() > 1)
        for (const auto& e : faces[1]) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

std::vector<std::vector<int>> chamber_adjacency(const SimplicialComplex& c) {
    // Group chambers by their facets; dimension-0 chambers share the empty
    // facet, making isolated points mutually adjacent as walls degenerate.
    std::vector<std::pair<std::vector<int>, int>> facets;
    const auto& chambers = c.chambers();
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        const auto& ch = chambers[i];
        for (std::size_t drop = 0; drop < ch.size(); ++drop) {
            std::vector<int> facet;
            for (std::size_t j = 0; j < ch.size(); ++j)
                if (j != drop) facet.push_back(ch[j]);
            facets.emplace_back(std::move(facet), static_cast<int>(i));
        }
    }
    std::sort(facets.begin(), facets.end());

    std::vector<std::vector<int>> adj(chambers.size());
    std::size_t i = 0;
    while (i < facets.size()) {
        std::size_t j = i;
        while (j < facets.size() && facets[j].first == facets[i].first) ++j;
        for (std::size_t a = i; a < j; ++a)
            for (std::size_t b = a + 1; b < j; ++b) {
                adj[facets[a].second].push_back(facets[b].second);
                adj[facets[b].second].push_back(facets[a].second);
            }
        i = j;
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

int graph_girth(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    const int cycle = dist[u] + dist[v] + 1;
                    if (best == 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

bool graph_connected(const std::vector<std::vector<int>>& adj) {
    if (adj.empty()) return true;
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    std::size_t reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == adj.size();
}

bool graph_regular(const std::vector<std::vector<int>>& adj, int degree) {
    for (const auto& row : adj)
        if (static_cast<int>(row.size()) != degree) return false;
    return true;
}

}  // namespace treespace
