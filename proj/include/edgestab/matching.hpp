#pragma once

#include "edgestab/graph.hpp"

namespace edgestab {

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm). Free vertices are processed in index order and neighbors in
/// sorted order, so the returned matching is deterministic.
EdgeSet maximum_matching(const Graph& g);

/// Throws GraphError if some edge is not in g.
bool is_matching(const Graph& g, std::span<const Edge> edges);

inline int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

} // namespace edgestab
