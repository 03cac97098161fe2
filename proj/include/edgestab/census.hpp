#pragma once

#include "edgestab/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace edgestab {

constexpr int max_supported_order = 11; // 55 adjacency bits fit in 64

/// graph6 lines, one graph per isomorphism class on n = 1..max_order
/// vertices; entry n holds the n-vertex graphs in increasing canonical code.
///
/// Graphs on n vertices are grown from those on n-1 by adding a vertex of
/// minimum degree, then deduplicated by a canonical code: the largest
/// upper-triangle adjacency string over the leaves of an
/// individualization-refinement search.
std::vector<std::vector<std::string>> enumerate_graph6(int max_order);

/// Number of unlabelled graphs on n vertices, for n <= 11.
std::uint64_t known_graph_count(int n);

} // namespace edgestab
