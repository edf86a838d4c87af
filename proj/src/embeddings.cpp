#include "treespace/embeddings.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace treespace {

namespace {

std::string universe_of(int n) { return "tree:" + std::to_string(n); }

SimplicialComplex subcomplex_from_trees(int n, const std::vector<Tree>& trees) {
    std::vector<std::vector<VertexKey>> chambers;
    chambers.reserve(trees.size());
    for (const Tree& t : trees)
        chambers.emplace_back(t.clade_masks().begin(), t.clade_masks().end());
    return SimplicialComplex(universe_of(n), std::move(chambers));
}

}  // namespace

AssocEmbedding::AssocEmbedding(int n, std::vector<int> order) : n_(n), order_(std::move(order)) {
    if (static_cast<int>(order_.size()) != n)
        throw InputError("leaf order must list all of 1.." + std::to_string(n));
    std::vector<char> seen(n + 1, 0);
    for (int l : order_) {
        if (l < 1 || l > n || seen[l])
            throw InputError("leaf order is not a permutation of 1.." + std::to_string(n));
        seen[l] = 1;
    }

    std::vector<int> reversed(order_.rbegin(), order_.rend());
    if (reversed < order_) order_ = std::move(reversed);

    // Prefix masks make every interval image one xor-free difference.
    std::vector<Mask> prefix(n + 1, 0);
    for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] | (Mask{1} << order_[i - 1]);

    const SimplicialComplex dual = assoc_dual(n);
    for (VertexKey k : dual.vertices())
        image_vertices_.push_back(prefix[interval_hi(k)] & ~prefix[interval_lo(k) - 1]);
    std::sort(image_vertices_.begin(), image_vertices_.end());

    image_chambers_.reserve(dual.chamber_count());
    for (const auto& chamber : dual.chambers()) {
        std::vector<Mask> clades;
        clades.reserve(chamber.size());
        for (int idx : chamber) {
            const VertexKey k = dual.vertices()[idx];
            clades.push_back(prefix[interval_hi(k)] & ~prefix[interval_lo(k) - 1]);
        }
        std::sort(clades.begin(), clades.end());
        image_chambers_.push_back(Tree::unchecked(n, std::move(clades)));
    }
    std::sort(image_chambers_.begin(), image_chambers_.end());
}

Mask AssocEmbedding::map_interval(int lo, int hi) const {
    if (lo < 1 || hi > n_ || lo >= hi || hi - lo + 1 > n_ - 1)
        throw RangeError("not a proper bracketing interval");
    Mask m = 0;
    for (int i = lo; i <= hi; ++i) m |= Mask{1} << order_[i - 1];
    return m;
}

bool AssocEmbedding::contains_chamber(const Tree& t) const {
    return std::binary_search(image_chambers_.begin(), image_chambers_.end(), t);
}

SimplicialComplex AssocEmbedding::image_complex() const {
    return subcomplex_from_trees(n_, image_chambers_);
}

PermEmbedding::PermEmbedding(int n, int end_a, int end_b) : n_(n) {
    if (end_a == end_b || end_a < 0 || end_b < 0 || end_a > n || end_b > n)
        throw InputError("caterpillar ends must be two distinct labels in {0..n}");
    end_a_ = std::min(end_a, end_b);
    end_b_ = std::max(end_a, end_b);
    for (int l = 0; l <= n; ++l)
        if (l != end_a_ && l != end_b_) free_labels_.push_back(l);

    const int m = n - 1;
    const Mask full = ((Mask{1} << m) - 1) << 1;  // subset keys use bits 1..m
    for (Mask s = 2; s < full; s += 2) image_vertices_.push_back(map_subset(s));
    std::sort(image_vertices_.begin(), image_vertices_.end());

    // One caterpillar chamber per permutation of the free labels.
    std::vector<int> perm(free_labels_);
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<Mask> blocks;
        blocks.reserve(perm.size());
        Mask ground = 0;
        for (int l : perm) {
            blocks.push_back(Mask{1} << l);
            ground |= Mask{1} << l;
        }
        image_chambers_.push_back(
            caterpillar_to_tree(n, CaterpillarForm{end_a_, end_b_, {std::move(blocks), ground}}));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(image_chambers_.begin(), image_chambers_.end());
    image_chambers_.erase(std::unique(image_chambers_.begin(), image_chambers_.end()),
                          image_chambers_.end());
}

Mask PermEmbedding::map_subset(Mask subset_of_free) const {
    const int m = n_ - 1;
    const Mask full = ((Mask{1} << m) - 1) << 1;  // same key convention as perm_dual
    if (subset_of_free == 0 || subset_of_free == full || (subset_of_free & ~full))
        throw RangeError("subset key must be a proper nonempty subset over bits 1..m");
    Mask side = Mask{1} << end_a_;
    for (int p = 1; p <= m; ++p)
        if ((subset_of_free >> p) & 1u) side |= Mask{1} << free_labels_[p - 1];
    // The clade is whichever side of the cut avoids the root leaf 0.
    const Mask universe = all_leaves_mask(n_) | 1u;
    return (side & 1u) ? (universe & ~side) : side;
}

bool PermEmbedding::contains_chamber(const Tree& t) const {
    return std::binary_search(image_chambers_.begin(), image_chambers_.end(), t);
}

SimplicialComplex PermEmbedding::image_complex() const {
    return subcomplex_from_trees(n_, image_chambers_);
}

std::vector<AssocEmbedding> all_assoc_embeddings(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::vector<AssocEmbedding> out;
    do {
        std::vector<int> reversed(order.rbegin(), order.rend());
        if (order < reversed) out.emplace_back(n, order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::vector<PermEmbedding> all_perm_embeddings(int n) {
    std::vector<PermEmbedding> out;
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) out.emplace_back(n, a, b);
    return out;
}

namespace {

CoverReport census(const TreeSpace& ts, const std::vector<const std::vector<Tree>*>& images) {
    CoverReport report;
    report.multiplicity.assign(ts.chamber_count(), 0);
    for (const auto* image : images)
        for (const Tree& t : *image) ++report.multiplicity[ts.chamber_id(t)];
    for (std::size_t i = 0; i < report.multiplicity.size(); ++i)
        if (report.multiplicity[i] == 0) report.uncovered.push_back(static_cast<int>(i));
    return report;
}

}  // namespace

CoverReport assoc_cover_report(const TreeSpace& ts) {
    const auto embeddings = all_assoc_embeddings(ts.n());
    std::vector<const std::vector<Tree>*> images;
    images.reserve(embeddings.size());
    for (const auto& e : embeddings) images.push_back(&e.image_chambers());
    return census(ts, images);
}

CoverReport perm_cover_report(const TreeSpace& ts) {
    const auto embeddings = all_perm_embeddings(ts.n());
    std::vector<const std::vector<Tree>*> images;
    images.reserve(embeddings.size());
    for (const auto& e : embeddings) images.push_back(&e.image_chambers());
    return census(ts, images);
}

Flower build_flower(int n) {
    if (n < min_leaves || n > max_leaves) throw RangeError("flower needs 3 <= n <= 20");
    std::vector<int> sigma(n - 1);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<AssocEmbedding> petals;
    do {
        std::vector<int> order(sigma);
        order.push_back(n);
        // (sigma, n) is already canonical: its reversal starts with n.
        petals.emplace_back(n, std::move(order));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return Flower{n, std::move(petals), PermEmbedding(n, 0, n)};
}

long long flower_fiber_size(const Flower& flower, const Tree& chamber) {
    if (!chamber.is_binary())
        throw ArityError("flower fibers are defined over binary chambers");
    long long count = 0;
    for (const auto& petal : flower.petals)
        if (petal.contains_chamber(chamber)) ++count;

    // Interior edges on the 0-n path are exactly the clades containing n.
    int off_path = 0;
    for (Mask c : chamber.clade_masks())
        if (!((c >> flower.n) & 1u)) ++off_path;
    const long long expected = 1ll << off_path;
    if (count != expected)
        throw Error("fiber count " + std::to_string(count) + " disagrees with 2^k = " +
                    std::to_string(expected));
    return count;
}

std::vector<long long> flower_fibers(const Flower& flower, const TreeSpace& ts) {
    std::vector<long long> fibers(ts.chamber_count(), 0);
    for (const auto& petal : flower.petals)
        for (const Tree& t : petal.image_chambers()) ++fibers[ts.chamber_id(t)];
    return fibers;
}

Clade flower_common_vertex(const Flower& flower) {
    const Clade star = v_star(flower.n);
    for (const auto& petal : flower.petals) {
        if (!std::binary_search(petal.image_vertices().begin(), petal.image_vertices().end(),
                                star.members()))
            throw Error("petal missing the common vertex " + labels_string(star.members()));
    }
    return star;
}

}  // namespace treespace
