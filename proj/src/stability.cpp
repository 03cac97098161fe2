#include "edgestab/stability.hpp"

#include "edgestab/matching.hpp"

#include <algorithm>

namespace edgestab {

namespace {

int floor_half(int x)
{
    return x >= 0 ? x / 2 : -((-x + 1) / 2);
}

MitigatingSet finish(const Graph& g, EdgeSet edges, const Graph& remainder, SearchBudget& budget)
{
    std::sort(edges.begin(), edges.end());
    MitigatingSet out{std::move(edges), chromatic_index(g, budget), chromatic_index(remainder, budget)};
    if (out.chi_after >= out.chi_before)
        throw std::logic_error("constructed edge set is not mitigating");
    return out;
}

} // namespace

std::string to_string(StabilityMethod method)
{
    switch (method) {
    case StabilityMethod::exact:
        return "exact";
    case StabilityMethod::class2_bound:
        return "class2_bound";
    case StabilityMethod::general_bound:
        return "general_bound";
    case StabilityMethod::bipartite_formula:
        return "bipartite_formula";
    }
    return "unknown";
}

StabilityMethod stability_method_from_string(const std::string& name)
{
    for (auto m : {StabilityMethod::exact, StabilityMethod::class2_bound, StabilityMethod::general_bound,
             StabilityMethod::bipartite_formula})
        if (to_string(m) == name)
            return m;
    throw std::invalid_argument("unknown stability method '" + name + "'");
}

bool meets_high_degree(const Graph& g, const Edge& e)
{
    return std::max(g.degree(e.u), g.degree(e.v)) >= g.max_degree() - 1;
}

MitigatingSet evaluate_set(const Graph& g, std::span<const Edge> edges, SearchBudget& budget)
{
    EdgeSet set = make_edge_set(edges);
    const Graph rest = remove_edges(g, set);
    return MitigatingSet{std::move(set), chromatic_index(g, budget), chromatic_index(rest, budget)};
}

bool is_mitigating(const Graph& g, std::span<const Edge> edges, SearchBudget& budget)
{
    const auto m = evaluate_set(g, edges, budget);
    return m.chi_after < m.chi_before;
}

bool is_mitigating(const Graph& g, std::span<const Edge> edges)
{
    SearchBudget budget;
    return is_mitigating(g, edges, budget);
}

int class2_bound(const DegreeProfile& profile)
{
    return floor_half(profile.t(profile.delta) - 1);
}

int general_bound(const Graph& g)
{
    const auto p = degree_profile(g);
    const int t = p.t(p.delta);
    const int below = p.t(p.delta - 1);
    if (below >= 1)
        return t + floor_half(below - 1);
    return core(g).graph.empty() ? t : t - 1;
}

int general_bound_guarantee(const Graph& g)
{
    const auto p = degree_profile(g);
    const int t = p.t(p.delta);
    if (p.s == 0 && core(g).graph.empty())
        return t;
    return t + floor_half(p.s - 1);
}

int applicable_bound(const Graph& g, SearchBudget& budget)
{
    if (is_bipartite(g)) {
        const auto p = degree_profile(g);
        return p.t(p.delta) - matching_number(core(g).graph);
    }
    if (classify(g, budget) == EdgeClass::class2)
        return class2_bound(degree_profile(g));
    return general_bound(g);
}

MitigatingSet class2_bound_set(const Graph& g, SearchBudget& budget)
{
    if (g.empty() || classify(g, budget) != EdgeClass::class2)
        throw PreconditionError("class2_bound_set requires a Class 2 graph");
    const int delta = g.max_degree();
    Graph current = g;
    EdgeSet removed;
    while (current.max_degree() == delta) {
        const auto sub = vertices_of_degree(current, delta);
        const auto cycle = find_cycle(sub.graph);
        if (!cycle)
            break;
        // to_parent is increasing, so the local minimum maps to the parent minimum.
        const Edge local = cycle->front();
        const Edge e = make_edge(sub.to_parent[static_cast<std::size_t>(local.u)],
            sub.to_parent[static_cast<std::size_t>(local.v)]);
        removed.push_back(e);
        current = remove_edges(current, std::span<const Edge>(&e, 1));
    }
    return finish(g, std::move(removed), current, budget);
}

MitigatingSet class2_bound_set(const Graph& g)
{
    SearchBudget budget;
    return class2_bound_set(g, budget);
}

MitigatingSet general_bound_set(const Graph& g, SearchBudget& budget)
{
    if (g.empty())
        throw GraphError("general_bound_set requires at least one edge");
    const int d = g.max_degree();
    Graph current = g;
    EdgeSet removed;
    auto drop = [&](const Edge& e) {
        removed.push_back(e);
        current = remove_edges(current, std::span<const Edge>(&e, 1));
    };

    for (;;) {
        Vertex w = -1;
        for (Vertex v = 0; v < current.order() && w < 0; ++v)
            if (current.degree(v) == d)
                w = v;
        if (w < 0)
            break;

        const auto edges = current.edges();
        auto both = std::find_if(edges.begin(), edges.end(),
            [&](const Edge& e) { return current.degree(e.u) == d && current.degree(e.v) == d; });
        if (both != edges.end()) {
            drop(*both);
            continue;
        }
        const auto nbrs = current.neighbors(w);
        auto lower = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex x) { return current.degree(x) == d - 1; });
        drop(make_edge(w, lower != nbrs.end() ? *lower : nbrs.front()));
    }

    // Break edges among degree d-1 vertices until at most one remains.
    for (;;) {
        const auto edges = current.edges();
        std::vector<Edge> inner;
        for (const auto& e : edges)
            if (current.degree(e.u) == d - 1 && current.degree(e.v) == d - 1)
                inner.push_back(e);
        if (inner.size() <= 1)
            break;
        drop(inner.front());
    }
    return finish(g, std::move(removed), current, budget);
}

MitigatingSet general_bound_set(const Graph& g)
{
    SearchBudget budget;
    return general_bound_set(g, budget);
}

StabilityReport bipartite_es_set(const Graph& g, SearchBudget& budget)
{
    if (g.empty())
        throw GraphError("bipartite_es_set requires at least one edge");
    if (!is_bipartite(g))
        throw PreconditionError("bipartite_es_set requires a bipartite graph");
    const int delta = g.max_degree();
    const auto sub = core(g);
    const auto matching = maximum_matching(sub.graph);

    EdgeSet witness;
    std::vector<char> saturated(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : matching) {
        const Vertex a = sub.to_parent[static_cast<std::size_t>(e.u)];
        const Vertex b = sub.to_parent[static_cast<std::size_t>(e.v)];
        witness.push_back(make_edge(a, b));
        saturated[static_cast<std::size_t>(a)] = saturated[static_cast<std::size_t>(b)] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == delta && !saturated[static_cast<std::size_t>(v)])
            witness.push_back(make_edge(v, g.neighbors(v).front()));

    const int t = static_cast<int>(sub.to_parent.size());
    const int formula = t - static_cast<int>(matching.size());
    const Graph rest = remove_edges(g, make_edge_set(witness));
    auto set = finish(g, make_edge_set(witness), rest, budget);
    if (set.size() != formula)
        throw std::logic_error("bipartite witness size differs from the formula");
    return StabilityReport{formula, std::move(set), StabilityMethod::bipartite_formula, formula};
}

StabilityReport bipartite_es_set(const Graph& g)
{
    SearchBudget budget;
    return bipartite_es_set(g, budget);
}

CompleteMinusMatching recognize_k2n1_minus_matching(const Graph& g)
{
    const int order = g.order();
    if (order < 3 || order % 2 == 0)
        return {};
    const int n = (order - 1) / 2;
    const Graph missing = complement(g);
    const int s = missing.size();
    if (s > n - 1 || !is_matching(missing, missing.edges()))
        return {};
    return {true, n, s};
}

bool recognize_core3_class2(const Graph& g)
{
    if (g.empty() || !is_connected(g))
        throw PreconditionError("recognize_core3_class2 requires a connected graph");
    if (core(g).graph.order() != 3)
        throw PreconditionError("recognize_core3_class2 requires a core of exactly three vertices");
    const auto r = recognize_k2n1_minus_matching(g);
    return r.matches && r.s == r.n - 1;
}

} // namespace edgestab
