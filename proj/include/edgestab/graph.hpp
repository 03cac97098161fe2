#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgestab {

using Vertex = int;

/// Unordered vertex pair stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Canonical edge for the pair {a, b}. Throws GraphError when a == b.
Edge make_edge(Vertex a, Vertex b);

/// Sorts and deduplicates, canonicalizing every pair.
EdgeSet make_edge_set(std::span<const Edge> edges);

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Edges are kept in lexicographic order; positions in edges() are the
/// edge indices used by colorings and by every "first edge" rule.
class Graph {
public:
    Graph() = default;

    /// Builds from raw pairs. Duplicates (in either orientation) collapse;
    /// self-loops and out-of-range endpoints throw GraphError.
    static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    std::vector<int> degrees() const;
    int max_degree() const { return max_degree_; }

    bool has_edge(Vertex a, Vertex b) const;
    std::optional<int> edge_index(Vertex a, Vertex b) const;
    std::optional<int> edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph(int n, EdgeSet edges);

    int n_ = 0;
    int max_degree_ = 0;
    EdgeSet edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Induced subgraph with dense re-indexing and a map back to the parent.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

struct DegreeProfile {
    int delta = 0;
    std::map<int, int> counts; // degree -> number of vertices with it
    /// Vertices of degree delta-1 having a neighbor of degree >= delta-1.
    int s = 0;

    int t(int degree) const;
};

struct Bipartition {
    std::vector<int> side; // 0 or 1 per vertex
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Subgraph induced by the vertices of maximum degree.
InducedSubgraph core(const Graph& g);

/// Core taken with respect to a fixed degree rather than the current maximum.
InducedSubgraph vertices_of_degree(const Graph& g, int degree);

DegreeProfile degree_profile(const Graph& g);

/// G minus the given edges; the vertex set is unchanged. Every edge must be
/// present in g.
Graph remove_edges(const Graph& g, std::span<const Edge> edges);
Graph add_edges(const Graph& g, std::span<const Edge> edges);

bool is_acyclic(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }
Graph complement(const Graph& g);

/// Edges of one cycle, or nullopt for a forest. The cycle closed by the
/// first non-tree edge of a DFS in vertex order is returned.
std::optional<EdgeSet> find_cycle(const Graph& g);

/// Edges of g spanned by the given edge set, as a graph on g's vertex set.
Graph edge_induced(const Graph& g, std::span<const Edge> edges);

std::string to_string(const Edge& e);

} // namespace edgestab
