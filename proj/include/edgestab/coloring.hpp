#pragma once

#include "edgestab/budget.hpp"
#include "edgestab/graph.hpp"

#include <optional>
#include <vector>

namespace edgestab {

/// Color per edge index of the target graph; -1 marks an unassigned edge.
struct EdgeColoring {
    std::vector<int> colors;
    int k = 0;

    int colors_used() const;
};

enum class EdgeClass { class1, class2 };

/// Throws GraphError when some edge of g has no color.
bool is_proper(const Graph& g, const EdgeColoring& coloring);

/// Proper coloring with at most max_degree+1 colors via fan rotation and
/// alternating-path swaps.
EdgeColoring vizing_color(const Graph& g);

/// Exact decision: a proper k-coloring or nullopt. The result is the first
/// solution of the backtracking search, with colors relabelled in order of
/// first use along the canonical edge order.
std::optional<EdgeColoring> k_edge_colorable(const Graph& g, int k, SearchBudget& budget);
std::optional<EdgeColoring> k_edge_colorable(const Graph& g, int k);

/// Chromatic index; 0 for an edgeless graph.
int chromatic_index(const Graph& g, SearchBudget& budget);
int chromatic_index(const Graph& g);

/// Sufficient condition for Class 1: the max-degree core is a forest.
bool fournier_class1(const Graph& g);

EdgeClass classify(const Graph& g, SearchBudget& budget);
EdgeClass classify(const Graph& g);

/// True when some subgraph has more than k * floor(order/2) edges, which
/// rules out any k-edge-coloring. Odd vertex subsets are scanned exhaustively
/// inside components of up to 14 vertices; larger components are only
/// checked as a whole.
bool has_overfull_subgraph(const Graph& g, int k);

} // namespace edgestab
