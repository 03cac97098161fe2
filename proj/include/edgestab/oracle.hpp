#pragma once

// Deliberately naive reference computations used to cross-check the real
// algorithms. They share nothing with them beyond the Graph type.

#include "edgestab/graph.hpp"

namespace edgestab::oracle {

/// Matching number by dynamic programming over vertex subsets; n <= 20.
int matching_number(const Graph& g);

/// Smallest number of matchings partitioning E(g), by dynamic programming
/// over all edge subsets; at most 16 edges.
int chromatic_index(const Graph& g);

/// Minimum number of edges whose removal lowers the chromatic index, read
/// off the same subset table; at most 16 edges.
int stability_index(const Graph& g);

} // namespace edgestab::oracle
