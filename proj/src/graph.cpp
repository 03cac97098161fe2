#include "edgestab/graph.hpp"

#include <algorithm>
#include <numeric>

namespace edgestab {

Edge make_edge(Vertex a, Vertex b)
{
    if (a == b)
        throw GraphError("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeSet make_edge_set(std::span<const Edge> edges)
{
    EdgeSet out;
    out.reserve(edges.size());
    for (const auto& e : edges)
        out.push_back(make_edge(e.u, e.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph::Graph(int n, EdgeSet edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n))
{
    for (const auto& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
    }
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs)
{
    std::vector<Edge> raw;
    raw.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        raw.push_back(Edge{a, b});
    return from_edges(n, raw);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError("vertex index out of range in edge " + to_string(e)
                + " for n=" + std::to_string(n));
    }
    return Graph(n, make_edge_set(edges));
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v)
        out[static_cast<std::size_t>(v)] = degree(v);
    return out;
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    return edge_index(a, b).has_value();
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const
{
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
        return std::nullopt;
    const Edge key = a < b ? Edge{a, b} : Edge{b, a};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

int DegreeProfile::t(int degree) const
{
    auto it = counts.find(degree);
    return it == counts.end() ? 0 : it->second;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> to_parent(vertices.begin(), vertices.end());
    std::sort(to_parent.begin(), to_parent.end());
    to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());

    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        if (to_parent[i] < 0 || to_parent[i] >= g.order())
            throw GraphError("vertex index out of range in induced_subgraph");
        local[static_cast<std::size_t>(to_parent[i])] = static_cast<int>(i);
    }

    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const int a = local[static_cast<std::size_t>(e.u)];
        const int b = local[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0)
            edges.push_back(Edge{a, b});
    }
    return {Graph::from_edges(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

InducedSubgraph vertices_of_degree(const Graph& g, int degree)
{
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == degree)
            chosen.push_back(v);
    return induced_subgraph(g, chosen);
}

InducedSubgraph core(const Graph& g)
{
    return vertices_of_degree(g, g.max_degree());
}

DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    p.delta = g.max_degree();
    for (Vertex v = 0; v < g.order(); ++v)
        ++p.counts[g.degree(v)];
    if (p.delta >= 1) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) != p.delta - 1)
                continue;
            const auto nbrs = g.neighbors(v);
            if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return g.degree(w) >= p.delta - 1; }))
                ++p.s;
        }
    }
    return p;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges)
{
    std::vector<char> drop(static_cast<std::size_t>(g.size()), 0);
    for (const auto& e : edges) {
        auto idx = g.edge_index(e);
        if (!idx)
            throw GraphError("edge " + to_string(e) + " is not in the graph");
        drop[static_cast<std::size_t>(*idx)] = 1;
    }
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (int i = 0; i < g.size(); ++i)
        if (!drop[static_cast<std::size_t>(i)])
            kept.push_back(g.edge(i));
    return Graph::from_edges(g.order(), kept);
}

Graph add_edges(const Graph& g, std::span<const Edge> edges)
{
    std::vector<Edge> all(g.edges().begin(), g.edges().end());
    all.insert(all.end(), edges.begin(), edges.end());
    return Graph::from_edges(g.order(), all);
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

} // namespace

bool is_acyclic(const Graph& g)
{
    UnionFind uf(g.order());
    for (const auto& e : g.edges())
        if (!uf.unite(e.u, e.v))
            return false;
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex start = 0; start < g.order(); ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{start};
        comp[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    Bipartition b;
    b.side.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (b.side[static_cast<std::size_t>(start)] >= 0)
            continue;
        b.side[static_cast<std::size_t>(start)] = 0;
        std::vector<Vertex> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                auto& sw = b.side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - b.side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (sw == b.side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return b;
}

Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (!g.has_edge(a, b))
                edges.push_back(Edge{a, b});
    return Graph::from_edges(g.order(), edges);
}

std::optional<EdgeSet> find_cycle(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> parent(n, -1);
    std::vector<int> depth(n, -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (depth[static_cast<std::size_t>(root)] >= 0)
            continue;
        depth[static_cast<std::size_t>(root)] = 0;
        // Iterative DFS keeping a per-vertex cursor into its neighbor list.
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, cursor] = stack.back();
            const auto nbrs = g.neighbors(v);
            if (cursor == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            const Vertex w = nbrs[cursor++];
            if (w == parent[static_cast<std::size_t>(v)])
                continue;
            if (depth[static_cast<std::size_t>(w)] < 0) {
                parent[static_cast<std::size_t>(w)] = v;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                stack.emplace_back(w, 0);
                continue;
            }
            if (depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(v)]) {
                // Back edge v-w closes a cycle along the tree path w..v.
                EdgeSet cycle{make_edge(v, w)};
                for (Vertex x = v; x != w; x = parent[static_cast<std::size_t>(x)])
                    cycle.push_back(make_edge(x, parent[static_cast<std::size_t>(x)]));
                std::sort(cycle.begin(), cycle.end());
                return cycle;
            }
        }
    }
    return std::nullopt;
}

Graph edge_induced(const Graph& g, std::span<const Edge> edges)
{
    for (const auto& e : edges)
        if (!g.has_edge(e.u, e.v))
            throw GraphError("edge " + to_string(e) + " is not in the graph");
    return Graph::from_edges(g.order(), edges);
}

std::string to_string(const Edge& e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace edgestab
