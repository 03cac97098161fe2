#include "edgestab/stability.hpp"

#include <algorithm>

namespace edgestab {

namespace {

// A k-edge-coloring of G' = G - S with per-vertex color lookup.
class ColorTable {
public:
    ColorTable(const Graph& graph, const EdgeColoring& coloring)
        : graph_(graph)
        , k_(coloring.k)
        , at_(static_cast<std::size_t>(graph.order()), std::vector<Vertex>(static_cast<std::size_t>(coloring.k), -1))
    {
        for (int i = 0; i < graph.size(); ++i) {
            const Edge& e = graph.edge(i);
            const int c = coloring.colors[static_cast<std::size_t>(i)];
            at_[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(c)] = e.v;
            at_[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(c)] = e.u;
        }
    }

    int k() const { return k_; }
    Vertex along(Vertex x, int c) const { return at_[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]; }
    bool is_free(Vertex x, int c) const { return along(x, c) < 0; }

    int smallest_free(Vertex x) const
    {
        for (int c = 0; c < k_; ++c)
            if (is_free(x, c))
                return c;
        return -1;
    }

    /// Edges of the maximal path from x alternating first/second, starting
    /// with a `first`-colored edge.
    std::vector<Edge> alternating_path(Vertex x, int first, int second) const
    {
        std::vector<Edge> path;
        int follow = first;
        while (!is_free(x, follow)) {
            const Vertex y = along(x, follow);
            path.push_back(make_edge(x, y));
            x = y;
            follow = follow == first ? second : first;
        }
        return path;
    }

    std::map<Edge, int> assignment() const
    {
        std::map<Edge, int> out;
        for (Vertex x = 0; x < graph_.order(); ++x)
            for (int c = 0; c < k_; ++c)
                if (along(x, c) > x)
                    out[Edge{x, along(x, c)}] = c;
        return out;
    }

private:
    const Graph& graph_;
    int k_;
    std::vector<std::vector<Vertex>> at_;
};

// Colors G' + uv with k colors after a fan condition fails at step i; the
// resulting coloring certifies that the input set was not minimum.
EdgeColoring recolor_after_failure(const Graph& extended, const ColorTable& table, Vertex u,
    const std::vector<Vertex>& fan, const std::vector<int>& fan_colors, int c, int ci)
{
    auto colors = table.assignment();
    const std::size_t i = fan.size() - 1;
    const Vertex vi = fan.back();

    int last = -1;
    if (table.is_free(u, ci)) {
        last = ci;
    } else if (table.is_free(vi, c)) {
        last = c;
    } else {
        // No c/ci path joins u to v_i: swap the path at u so ci is free there.
        for (const Edge& e : table.alternating_path(u, ci, c)) {
            auto& col = colors[e];
            col = col == ci ? c : ci;
        }
        last = ci;
    }
    for (std::size_t j = 0; j < i; ++j)
        colors[make_edge(u, fan[j])] = fan_colors[j];
    colors[make_edge(u, vi)] = last;

    EdgeColoring out{std::vector<int>(static_cast<std::size_t>(extended.size()), -1), table.k()};
    for (const auto& [e, col] : colors)
        out.colors[static_cast<std::size_t>(*extended.edge_index(e))] = col;
    return out;
}

} // namespace

NormalizationResult normalize_min_mitigating(const Graph& g, std::span<const Edge> edges, SearchBudget& budget)
{
    EdgeSet set = make_edge_set(edges);
    for (const auto& e : set)
        if (!g.has_edge(e.u, e.v))
            throw GraphError("edge " + to_string(e) + " is not in the graph");
    const int chi = chromatic_index(g, budget);
    if (!is_mitigating(g, set, budget))
        throw PreconditionError("input edge set is not mitigating");

    NormalizationTrace trace;
    for (;;) {
        auto bad = std::find_if(set.begin(), set.end(), [&](const Edge& e) { return !meets_high_degree(g, e); });
        if (bad == set.end())
            break;
        const Edge removed = *bad;
        const Vertex u = removed.u;

        const Graph rest = remove_edges(g, set);
        const int k = chromatic_index(rest, budget);
        const auto coloring = k_edge_colorable(rest, k, budget);
        const ColorTable table(rest, *coloring);

        const int c = table.smallest_free(u);
        std::vector<Vertex> fan{removed.v};
        std::vector<int> fan_colors;
        std::vector<char> in_fan(static_cast<std::size_t>(g.order()), 0);
        in_fan[static_cast<std::size_t>(removed.v)] = 1;

        while (rest.degree(fan.back()) < k) {
            const Vertex vi = fan.back();
            const int ci = table.smallest_free(vi);
            const auto path = table.alternating_path(u, ci, c);
            const bool joined = !path.empty() && (path.back().u == vi || path.back().v == vi)
                && table.is_free(vi, ci) && !table.is_free(u, ci);
            if (table.is_free(u, ci) || table.is_free(vi, c) || !joined) {
                EdgeSet smaller = set;
                smaller.erase(std::find(smaller.begin(), smaller.end(), removed));
                const Graph extended = add_edges(rest, std::span<const Edge>(&removed, 1));
                const auto certificate = recolor_after_failure(extended, table, u, fan, fan_colors, c, ci);
                if (!is_proper(extended, certificate))
                    throw std::logic_error("fan recoloring produced an improper coloring");
                throw NotMinimumError(evaluate_set(g, smaller, budget));
            }
            const Vertex next = table.along(u, ci);
            if (in_fan[static_cast<std::size_t>(next)])
                throw std::logic_error("fan revisited a vertex");
            fan_colors.push_back(ci);
            fan.push_back(next);
            in_fan[static_cast<std::size_t>(next)] = 1;
        }

        const Edge inserted = make_edge(u, fan.back());
        EdgeSet next_set = set;
        next_set.erase(std::find(next_set.begin(), next_set.end(), removed));
        next_set.push_back(inserted);
        std::sort(next_set.begin(), next_set.end());
        if (!is_mitigating(g, next_set, budget))
            throw std::logic_error("fan replacement lost the mitigating property");

        trace.replacements.push_back(FanReplacement{removed, inserted, u, fan, c, fan_colors});
        set = std::move(next_set);
    }
    auto result = evaluate_set(g, set, budget);
    if (result.chi_before != chi)
        throw std::logic_error("chromatic index changed during normalization");
    return NormalizationResult{std::move(result), std::move(trace)};
}

NormalizationResult normalize_min_mitigating(const Graph& g, std::span<const Edge> edges)
{
    SearchBudget budget;
    return normalize_min_mitigating(g, edges, budget);
}

} // namespace edgestab
