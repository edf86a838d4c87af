#ifndef TREESPACE_SERIALIZE_HPP
#define TREESPACE_SERIALIZE_HPP

// File formats: JSON for trees, complexes and embeddings, DOT for the
// 1-skeleton and the chamber-adjacency graph, CSV for cover censuses.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "treespace/complex.hpp"
#include "treespace/embeddings.hpp"
#include "treespace/trees.hpp"
#include "treespace/treespace.hpp"

namespace treespace {

nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const SimplicialComplex& c);

nlohmann::json assoc_embedding_to_json(const AssocEmbedding& e, const TreeSpace& ts);
nlohmann::json perm_embedding_to_json(const PermEmbedding& e, const TreeSpace& ts);

std::string skeleton_to_dot(const SimplicialComplex& c);
std::string dual_graph_to_dot(const SimplicialComplex& c);

// chamber_id, is_caterpillar, assoc_multiplicity, perm_multiplicity, flower_fiber
void write_cover_csv(std::ostream& os, const TreeSpace& ts, const CoverReport& assoc,
                     const CoverReport& perm, const std::vector<long long>& fibers);

// Human-readable vertex label for a universe-tagged key, e.g. "{1,2}".
std::string vertex_label(const std::string& universe, VertexKey key);

}  // namespace treespace

#endif
