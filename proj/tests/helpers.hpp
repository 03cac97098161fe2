#pragma once

#include "edgestab/census.hpp"
#include "edgestab/generators.hpp"
#include "edgestab/io.hpp"

#include <vector>

namespace testing {

using namespace edgestab;

/// Every graph with at least one edge on 2..max_order vertices.
inline std::vector<Graph> small_graphs(int max_order)
{
    std::vector<Graph> out;
    const auto levels = enumerate_graph6(max_order);
    for (int n = 2; n <= max_order; ++n)
        for (const auto& line : levels[static_cast<std::size_t>(n)]) {
            Graph g = parse_graph6(line);
            if (!g.empty())
                out.push_back(std::move(g));
        }
    return out;
}

/// Seeded G(n, p) sample with n in [lo, hi] and p in {0.2, 0.35, 0.5, 0.65, 0.8}.
inline std::vector<Graph> random_sample(int count, int lo, int hi, std::uint64_t seed)
{
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = lo + i % (hi - lo + 1);
        const double p = 0.2 + 0.15 * (i % 5);
        out.push_back(random_graph(n, p, seed + static_cast<std::uint64_t>(i)));
    }
    return out;
}

inline Graph make(int n, std::initializer_list<std::pair<int, int>> pairs)
{
    std::vector<std::pair<Vertex, Vertex>> v(pairs.begin(), pairs.end());
    return Graph::from_edge_list(n, v);
}

} // namespace testing
