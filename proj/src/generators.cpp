#include "edgestab/generators.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace edgestab {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

void require_params(const FamilySpec& spec, std::size_t count)
{
    require(spec.params.size() == count,
        to_string(spec.family) + " takes " + std::to_string(count) + " integer parameter(s)");
}

constexpr std::array<std::pair<int, int>, 15> petersen_pairs{{
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
    {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
}};

// Appends g shifted by `offset` to edges.
void append_shifted(std::vector<Edge>& edges, const Graph& g, int offset)
{
    for (const auto& e : g.edges())
        edges.push_back(Edge{e.u + offset, e.v + offset});
}

// Uniform double in [0, 1) from the top 53 bits; stable across platforms.
double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::string to_string(Family family)
{
    switch (family) {
    case Family::petersen: return "petersen";
    case Family::complete: return "complete";
    case Family::complete_minus_matching: return "complete_minus_matching";
    case Family::remark5: return "remark5";
    case Family::q_graph: return "q_graph";
    case Family::q_chain: return "q_chain";
    case Family::remark8_union: return "remark8_union";
    case Family::prop_counterexample: return "prop_counterexample";
    case Family::star: return "star";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::cycle: return "cycle";
    case Family::random: return "random";
    case Family::random_bipartite: return "random_bipartite";
    }
    return "unknown";
}

Family family_from_string(const std::string& name)
{
    for (int i = 0; i <= static_cast<int>(Family::random_bipartite); ++i) {
        const auto f = static_cast<Family>(i);
        if (to_string(f) == name)
            return f;
    }
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

Graph petersen()
{
    return Graph::from_edge_list(10, petersen_pairs);
}

EdgeSet petersen_figure_pair()
{
    return {Edge{5, 8}, Edge{7, 9}};
}

Graph complete_graph(int n)
{
    require(n >= 2, "complete graph needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            edges.push_back(Edge{a, b});
    return Graph::from_edges(n, edges);
}

Graph complete_minus_matching(int n, int s)
{
    require(n >= 1, "complete_minus_matching needs n >= 1");
    require(s >= 0 && s <= n - 1, "complete_minus_matching needs 0 <= s <= n-1");
    std::vector<Edge> missing;
    for (int i = 0; i < s; ++i)
        missing.push_back(Edge{2 * i, 2 * i + 1});
    return remove_edges(complete_graph(2 * n + 1), missing);
}

Graph remark5_graph(int k)
{
    require(k >= 1, "remark5 needs k >= 1");
    const int core = 2 * k + 1;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < core; ++a)
        for (Vertex b = a + 1; b < core; ++b)
            if (!(a == 0 && b == 1))
                edges.push_back(Edge{a, b});
    edges.push_back(Edge{0, core});
    return Graph::from_edges(core + 1, edges);
}

Graph q_graph()
{
    const Edge cut{5, 7};
    return remove_edges(petersen(), std::span<const Edge>(&cut, 1));
}

Graph q_chain(int copies)
{
    require(copies >= 1, "q_chain needs at least one copy of Q");
    const Graph q = q_graph();
    std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}};
    for (int j = 0; j < copies; ++j) {
        const int offset = 4 + 10 * j;
        append_shifted(edges, q, offset);
        const Vertex entry = offset + 5;
        edges.push_back(j == 0 ? Edge{0, entry} : Edge{offset - 10 + 7, entry});
    }
    return Graph::from_edges(4 + 10 * copies, edges);
}

Graph remark8_union(int t, int s)
{
    require(t >= 1, "remark8_union needs t >= 1");
    require(s >= 0, "remark8_union needs s >= 0");
    std::vector<Edge> edges;
    int order = 0;
    int star_degree = 3;
    if (s >= 3) {
        const Graph h1 = s % 2 == 1 ? complete_graph(s) : remark5_graph(s / 2);
        append_shifted(edges, h1, 0);
        order = h1.order();
        star_degree = h1.max_degree() + 1;
    }
    for (int i = 0; i < t; ++i) {
        for (int leaf = 1; leaf <= star_degree; ++leaf)
            edges.push_back(Edge{order, order + leaf});
        order += star_degree + 1;
    }
    if (s >= 1 && s <= 2) {
        // Degree star_degree-1 = 2 centers that need no removal.
        for (int i = 0; i < s; ++i) {
            edges.push_back(Edge{order, order + 1});
            edges.push_back(Edge{order, order + 2});
            order += 3;
        }
    }
    return Graph::from_edges(order, edges);
}

Graph star(int leaves)
{
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back(Edge{0, i});
    return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1, "complete_bipartite needs both sides non-empty");
    std::vector<Edge> edges;
    for (Vertex x = 0; x < a; ++x)
        for (Vertex y = a; y < a + b; ++y)
            edges.push_back(Edge{x, y});
    return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back(make_edge(i, (i + 1) % n));
    return Graph::from_edges(n, edges);
}

PropLayout prop_layout(int k)
{
    require(k >= 2, "prop_counterexample needs k >= 2");
    PropLayout layout;
    layout.u = 0;
    for (int i = 0; i < k; ++i)
        layout.a.push_back(1 + i);
    for (int i = 0; i < 2 * k - 1; ++i)
        layout.b.push_back(k + 1 + i);
    for (int i = 0; i < k; ++i)
        layout.c.push_back(3 * k + i);
    layout.v = 4 * k;
    return layout;
}

namespace {

std::vector<Edge> prop_base_edges(const PropLayout& l)
{
    std::vector<Edge> edges;
    for (Vertex a : l.a)
        edges.push_back(Edge{l.u, a});
    for (Vertex a : l.a)
        for (Vertex b : l.b)
            edges.push_back(Edge{a, b});
    for (Vertex b : l.b)
        for (Vertex c : l.c)
            edges.push_back(Edge{b, c});
    for (Vertex c : l.c)
        edges.push_back(Edge{c, l.v});
    return edges;
}

} // namespace

std::vector<Edge> prop_admissible_pairs(int k)
{
    const auto layout = prop_layout(k);
    const Graph base = Graph::from_edges(4 * k + 1, prop_base_edges(layout));
    std::vector<Edge> pairs;
    for (Vertex x = 1; x < layout.v; ++x)
        for (Vertex y = x + 1; y < layout.v; ++y)
            if (!base.has_edge(x, y))
                pairs.push_back(Edge{x, y});
    return pairs;
}

Graph prop_counterexample(int k, int xy_choice)
{
    const auto layout = prop_layout(k);
    const auto pairs = prop_admissible_pairs(k);
    require(xy_choice >= 0 && xy_choice < static_cast<int>(pairs.size()),
        "xy_choice must be in [0, " + std::to_string(pairs.size()) + ")");
    auto edges = prop_base_edges(layout);
    edges.push_back(Edge{layout.u, layout.v});
    edges.push_back(pairs[static_cast<std::size_t>(xy_choice)]);
    return Graph::from_edges(4 * k + 1, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    require(n >= 2, "random graph needs n >= 2");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (unit(rng) < p)
                edges.push_back(Edge{a, b});
    if (edges.empty())
        edges.push_back(Edge{0, 1});
    return Graph::from_edges(n, edges);
}

Graph random_bipartite(int n1, int n2, double p, std::uint64_t seed)
{
    require(n1 >= 1 && n2 >= 1, "random bipartite graph needs both sides non-empty");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n1; ++a)
        for (Vertex b = n1; b < n1 + n2; ++b)
            if (unit(rng) < p)
                edges.push_back(Edge{a, b});
    if (edges.empty())
        edges.push_back(Edge{0, n1});
    return Graph::from_edges(n1 + n2, edges);
}

Graph generate(const FamilySpec& spec)
{
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::petersen:
        require_params(spec, 0);
        return petersen();
    case Family::complete:
        require_params(spec, 1);
        return complete_graph(p[0]);
    case Family::complete_minus_matching:
        require_params(spec, 2);
        return complete_minus_matching(p[0], p[1]);
    case Family::remark5:
        require_params(spec, 1);
        return remark5_graph(p[0]);
    case Family::q_graph:
        require_params(spec, 0);
        return q_graph();
    case Family::q_chain:
        require_params(spec, 1);
        return q_chain(p[0]);
    case Family::remark8_union:
        require_params(spec, 2);
        return remark8_union(p[0], p[1]);
    case Family::prop_counterexample:
        require_params(spec, 2);
        return prop_counterexample(p[0], p[1]);
    case Family::star:
        require_params(spec, 1);
        return star(p[0]);
    case Family::complete_bipartite:
        require_params(spec, 2);
        return complete_bipartite(p[0], p[1]);
    case Family::cycle:
        require_params(spec, 1);
        return cycle_graph(p[0]);
    case Family::random:
        require_params(spec, 1);
        return random_graph(p[0], spec.probability, spec.seed);
    case Family::random_bipartite:
        require_params(spec, 2);
        return random_bipartite(p[0], p[1], spec.probability, spec.seed);
    }
    throw std::invalid_argument("unknown family");
}

} // namespace edgestab
