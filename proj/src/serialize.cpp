#include "treespace/serialize.hpp"

#include <ostream>
#include <sstream>

#include "treespace/polytopes.hpp"

namespace treespace {

using nlohmann::json;

json tree_to_json(const Tree& t) {
    json clades = json::array();
    for (Mask m : t.clade_masks()) clades.push_back(mask_labels(m));
    return json{{"n", t.leaf_count()}, {"clades", std::move(clades)}};
}

Tree tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("clades"))
        throw InputError("tree JSON needs fields 'n' and 'clades'");
    const int n = j.at("n").get<int>();
    std::vector<Mask> masks;
    for (const auto& labels : j.at("clades"))
        masks.push_back(labels_to_mask(labels.get<std::vector<int>>()));
    return Tree(n, std::move(masks));
}

namespace {

json vertex_json(const std::string& universe, VertexKey key) {
    if (universe.starts_with("tree:") || universe.starts_with("perm:"))
        return json(mask_labels(static_cast<Mask>(key)));
    if (universe.starts_with("assoc:"))
        return json::array({interval_lo(key), interval_hi(key)});
    return json(key);
}

}  // namespace

std::string vertex_label(const std::string& universe, VertexKey key) {
    if (universe.starts_with("tree:") || universe.starts_with("perm:"))
        return labels_string(static_cast<Mask>(key));
    if (universe.starts_with("assoc:")) {
        std::ostringstream os;
        os << '[' << interval_lo(key) << ".." << interval_hi(key) << ']';
        return os.str();
    }
    return std::to_string(key);
}

json complex_to_json(const SimplicialComplex& c) {
    json vertices = json::array();
    for (VertexKey v : c.vertices()) vertices.push_back(vertex_json(c.universe(), v));
    json chambers = json::array();
    for (const auto& ch : c.chambers()) chambers.push_back(ch);
    return json{{"universe", c.universe()},
                {"vertices", std::move(vertices)},
                {"chambers", std::move(chambers)}};
}

json assoc_embedding_to_json(const AssocEmbedding& e, const TreeSpace& ts) {
    json vertices = json::array();
    json indices = json::array();
    for (Mask m : e.image_vertices()) {
        vertices.push_back(mask_labels(m));
        indices.push_back(ts.complex().index_of(m));
    }
    return json{{"type", "assoc"},
                {"n", e.n()},
                {"order", e.order()},
                {"image_vertices", std::move(vertices)},
                {"image_vertex_indices", std::move(indices)}};
}

json perm_embedding_to_json(const PermEmbedding& e, const TreeSpace& ts) {
    json vertices = json::array();
    json indices = json::array();
    for (Mask m : e.image_vertices()) {
        vertices.push_back(mask_labels(m));
        indices.push_back(ts.complex().index_of(m));
    }
    return json{{"type", "perm"},
                {"n", e.n()},
                {"ends", json::array({e.end_a(), e.end_b()})},
                {"image_vertices", std::move(vertices)},
                {"image_vertex_indices", std::move(indices)}};
}

std::string skeleton_to_dot(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
        os << "  v" << i << " [label=\"" << vertex_label(c.universe(), c.vertices()[i])
           << "\"];\n";
    const auto faces = c.faces_by_dim();
    if (faces.size() > 1)
        for (const auto& e : faces[1]) os << "  v" << e[0] << " -- v" << e[1] << ";\n";
    os << "}\n";
    return os.str();
}

std::string dual_graph_to_dot(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "graph chambers {\n";
    for (std::size_t i = 0; i < c.chamber_count(); ++i) os << "  c" << i << ";\n";
    const auto adj = chamber_adjacency(c);
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (int j : adj[i])
            if (static_cast<int>(i) < j) os << "  c" << i << " -- c" << j << ";\n";
    os << "}\n";
    return os.str();
}

void write_cover_csv(std::ostream& os, const TreeSpace& ts, const CoverReport& assoc,
                     const CoverReport& perm, const std::vector<long long>& fibers) {
    os << "chamber_id,is_caterpillar,assoc_multiplicity,perm_multiplicity,flower_fiber\n";
    for (std::size_t id = 0; id < ts.chamber_count(); ++id) {
        const bool cat = is_caterpillar(ts.chamber_tree(id)).has_value();
        os << id << ',' << (cat ? 1 : 0) << ',' << assoc.multiplicity.at(id) << ','
           << perm.multiplicity.at(id) << ',' << fibers.at(id) << '\n';
    }
}

}  // namespace treespace
