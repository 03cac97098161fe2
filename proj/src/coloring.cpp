#include "edgestab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace edgestab {

int EdgeColoring::colors_used() const
{
    std::vector<int> seen;
    for (int c : colors)
        if (c >= 0)
            seen.push_back(c);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

bool is_proper(const Graph& g, const EdgeColoring& coloring)
{
    if (coloring.colors.size() != static_cast<std::size_t>(g.size()))
        throw GraphError("coloring does not cover the edge set");
    std::vector<std::vector<int>> at(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.size(); ++i) {
        const int c = coloring.colors[static_cast<std::size_t>(i)];
        if (c < 0)
            throw GraphError("edge " + to_string(g.edge(i)) + " has no color");
        if (c >= coloring.k)
            return false;
        at[static_cast<std::size_t>(g.edge(i).u)].push_back(c);
        at[static_cast<std::size_t>(g.edge(i).v)].push_back(c);
    }
    for (auto& list : at) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            return false;
    }
    return true;
}

namespace {

void canonicalize(EdgeColoring& coloring)
{
    std::vector<int> relabel(static_cast<std::size_t>(std::max(coloring.k, 0)), -1);
    int next = 0;
    for (int& c : coloring.colors) {
        auto& slot = relabel[static_cast<std::size_t>(c)];
        if (slot < 0)
            slot = next++;
        c = slot;
    }
}

// Misra-Gries style constructive proof of Vizing's bound.
class VizingColorer {
public:
    explicit VizingColorer(const Graph& g)
        : g_(g)
        , palette_(g.max_degree() + 1)
        , at_(static_cast<std::size_t>(g.order()), std::vector<Vertex>(static_cast<std::size_t>(palette_), -1))
        , color_(static_cast<std::size_t>(g.size()), -1)
    {
    }

    EdgeColoring run()
    {
        for (int i = 0; i < g_.size(); ++i)
            color_edge(g_.edge(i).u, g_.edge(i).v);
        return EdgeColoring{color_, palette_};
    }

private:
    int free_color(Vertex x) const
    {
        const auto& row = at_[static_cast<std::size_t>(x)];
        for (int c = 0; c < palette_; ++c)
            if (row[static_cast<std::size_t>(c)] < 0)
                return c;
        return -1;
    }

    bool is_free(Vertex x, int c) const { return at_[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] < 0; }

    int color_of(Vertex a, Vertex b) const { return color_[static_cast<std::size_t>(*g_.edge_index(a, b))]; }

    void set(Vertex a, Vertex b, int c)
    {
        color_[static_cast<std::size_t>(*g_.edge_index(a, b))] = c;
        at_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = b;
        at_[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = a;
    }

    void unset(Vertex a, Vertex b)
    {
        auto& slot = color_[static_cast<std::size_t>(*g_.edge_index(a, b))];
        if (slot < 0)
            return;
        at_[static_cast<std::size_t>(a)][static_cast<std::size_t>(slot)] = -1;
        at_[static_cast<std::size_t>(b)][static_cast<std::size_t>(slot)] = -1;
        slot = -1;
    }

    void color_edge(Vertex u, Vertex v0)
    {
        // Maximal fan at u: color(u, fan[i+1]) is free on fan[i].
        std::vector<Vertex> fan{v0};
        std::vector<char> in_fan(static_cast<std::size_t>(g_.order()), 0);
        in_fan[static_cast<std::size_t>(v0)] = 1;
        for (;;) {
            const Vertex last = fan.back();
            Vertex next = -1;
            for (int c = 0; c < palette_ && next < 0; ++c) {
                if (!is_free(last, c))
                    continue;
                const Vertex w = at_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
                if (w >= 0 && !in_fan[static_cast<std::size_t>(w)])
                    next = w;
            }
            if (next < 0)
                break;
            fan.push_back(next);
            in_fan[static_cast<std::size_t>(next)] = 1;
        }

        const int c = free_color(u);
        const int d = free_color(fan.back());

        // Invert the cd-path starting at u; it begins with u's d-edge.
        if (!is_free(u, d)) {
            std::vector<std::pair<Vertex, Vertex>> path;
            Vertex x = u;
            int follow = d;
            while (!is_free(x, follow)) {
                const Vertex y = at_[static_cast<std::size_t>(x)][static_cast<std::size_t>(follow)];
                path.emplace_back(x, y);
                x = y;
                follow = follow == d ? c : d;
            }
            std::vector<int> old;
            for (const auto& [a, b] : path) {
                old.push_back(color_of(a, b));
                unset(a, b);
            }
            for (std::size_t i = 0; i < path.size(); ++i)
                set(path[i].first, path[i].second, old[i] == d ? c : d);
        }

        // First fan vertex w with d free such that the prefix up to w is
        // still a fan after the inversion.
        std::size_t w = 0;
        while (!is_free(fan[w], d)) {
            if (w + 1 >= fan.size() || !is_free(fan[w], color_of(u, fan[w + 1])))
                throw std::logic_error("vizing fan invariant violated");
            ++w;
        }

        std::vector<int> shifted;
        for (std::size_t j = 0; j < w; ++j)
            shifted.push_back(color_of(u, fan[j + 1]));
        for (std::size_t j = 1; j <= w; ++j)
            unset(u, fan[j]);
        for (std::size_t j = 0; j < w; ++j)
            set(u, fan[j], shifted[j]);
        set(u, fan[w], d);
    }

    const Graph& g_;
    int palette_;
    std::vector<std::vector<Vertex>> at_;
    std::vector<int> color_;
};

// Backtracking over one connected component. The next edge is the
// uncolored one with the fewest available colors, ties broken by the static
// order; a new color is only ever the smallest unused one.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, std::vector<int> edge_order, int k, SearchBudget& budget)
        : g_(g)
        , order_(std::move(edge_order))
        , k_(k)
        , full_(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1)
        , budget_(budget)
        , used_(static_cast<std::size_t>(g.order()), 0)
        , assigned_(order_.size(), -1)
    {
    }

    bool solve() { return place(order_.size(), 0); }

    int color_at(std::size_t pos) const { return assigned_[pos]; }

private:
    std::uint64_t available(std::size_t pos) const
    {
        const Edge& e = g_.edge(order_[pos]);
        return ~(used_[static_cast<std::size_t>(e.u)] | used_[static_cast<std::size_t>(e.v)]) & full_;
    }

    bool place(std::size_t uncolored, int top)
    {
        if (uncolored == 0)
            return true;
        budget_.charge();
        std::size_t pick = order_.size();
        int fewest = k_ + 1;
        for (std::size_t p = 0; p < order_.size(); ++p) {
            if (assigned_[p] >= 0)
                continue;
            const int options = std::popcount(available(p));
            if (options == 0)
                return false;
            if (options < fewest) {
                fewest = options;
                pick = p;
            }
        }
        const Edge& e = g_.edge(order_[pick]);
        auto& mu = used_[static_cast<std::size_t>(e.u)];
        auto& mv = used_[static_cast<std::size_t>(e.v)];
        const std::uint64_t allowed = available(pick);
        const int limit = std::min(top + 1, k_);
        for (int c = 0; c < limit; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (!(allowed & bit))
                continue;
            mu |= bit;
            mv |= bit;
            assigned_[pick] = c;
            if (place(uncolored - 1, std::max(top, c + 1)))
                return true;
            mu &= ~bit;
            mv &= ~bit;
        }
        assigned_[pick] = -1;
        return false;
    }

    const Graph& g_;
    std::vector<int> order_;
    int k_;
    std::uint64_t full_;
    SearchBudget& budget_;
    std::vector<std::uint64_t> used_;
    std::vector<int> assigned_;
};

// Edges by max endpoint degree (descending), then lexicographically.
std::vector<int> search_order(const Graph& g, std::span<const int> edge_ids)
{
    std::vector<int> order(edge_ids.begin(), edge_ids.end());
    auto weight = [&](int i) {
        const Edge& e = g.edge(i);
        return std::max(g.degree(e.u), g.degree(e.v));
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight(a) > weight(b); });
    return order;
}

} // namespace

EdgeColoring vizing_color(const Graph& g)
{
    return VizingColorer(g).run();
}

bool has_overfull_subgraph(const Graph& g, int k)
{
    if (k < 0)
        return g.size() > 0;
    constexpr std::size_t exhaustive_limit = 14;
    for (const auto& comp : connected_components(g)) {
        const int size = static_cast<int>(comp.size());
        if (comp.size() > exhaustive_limit) {
            int twice_edges = 0;
            for (Vertex v : comp)
                twice_edges += g.degree(v);
            if (size % 2 == 1 && twice_edges / 2 > k * (size - 1) / 2)
                return true;
            continue;
        }
        // Odd vertex subsets of the component, as bitmasks over its vertices.
        std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
        for (int i = 0; i < size; ++i)
            local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
        std::vector<std::uint32_t> adj(comp.size(), 0);
        for (int i = 0; i < size; ++i)
            for (Vertex w : g.neighbors(comp[static_cast<std::size_t>(i)]))
                adj[static_cast<std::size_t>(i)] |= 1u << local[static_cast<std::size_t>(w)];
        for (std::uint32_t s = 1; s < (1u << size); ++s) {
            const int count = std::popcount(s);
            if (count < 3 || count % 2 == 0)
                continue;
            int twice_edges = 0;
            for (std::uint32_t rest = s; rest; rest &= rest - 1)
                twice_edges += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & s);
            if (twice_edges / 2 > k * (count - 1) / 2)
                return true;
        }
    }
    return false;
}

std::optional<EdgeColoring> k_edge_colorable(const Graph& g, int k, SearchBudget& budget)
{
    if (k < 0)
        throw GraphError("color count must be non-negative");
    EdgeColoring out{std::vector<int>(static_cast<std::size_t>(g.size()), -1), k};
    if (g.empty())
        return out;
    if (k < g.max_degree())
        return std::nullopt;
    if (k > 64)
        throw GraphError("color counts above 64 are not supported by the exact search");
    if (k > g.max_degree()) {
        out.colors = vizing_color(g).colors;
        canonicalize(out);
        return out;
    }
    if (has_overfull_subgraph(g, k))
        return std::nullopt;

    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        std::vector<int> ids;
        int comp_delta = 0;
        for (Vertex v : comp) {
            comp_delta = std::max(comp_delta, g.degree(v));
            for (Vertex w : g.neighbors(v))
                if (v < w)
                    ids.push_back(*g.edge_index(v, w));
        }
        std::sort(ids.begin(), ids.end());
        if (comp_delta < k) {
            // Vizing already fits in comp_delta+1 <= k colors.
            auto local = induced_subgraph(g, comp);
            const auto col = vizing_color(local.graph);
            for (int i = 0; i < local.graph.size(); ++i) {
                const Edge& le = local.graph.edge(i);
                const int gi = *g.edge_index(local.to_parent[static_cast<std::size_t>(le.u)],
                    local.to_parent[static_cast<std::size_t>(le.v)]);
                out.colors[static_cast<std::size_t>(gi)] = col.colors[static_cast<std::size_t>(i)];
            }
            continue;
        }
        auto order = search_order(g, ids);
        ColoringSearch search(g, order, k, budget);
        if (!search.solve())
            return std::nullopt;
        for (std::size_t p = 0; p < order.size(); ++p)
            out.colors[static_cast<std::size_t>(order[p])] = search.color_at(p);
    }
    canonicalize(out);
    return out;
}

std::optional<EdgeColoring> k_edge_colorable(const Graph& g, int k)
{
    SearchBudget budget;
    return k_edge_colorable(g, k, budget);
}

bool fournier_class1(const Graph& g)
{
    return is_acyclic(core(g).graph);
}

int chromatic_index(const Graph& g, SearchBudget& budget)
{
    if (g.empty())
        return 0;
    const int delta = g.max_degree();
    if (fournier_class1(g))
        return delta;
    return k_edge_colorable(g, delta, budget) ? delta : delta + 1;
}

int chromatic_index(const Graph& g)
{
    SearchBudget budget;
    return chromatic_index(g, budget);
}

EdgeClass classify(const Graph& g, SearchBudget& budget)
{
    return chromatic_index(g, budget) == g.max_degree() ? EdgeClass::class1 : EdgeClass::class2;
}

EdgeClass classify(const Graph& g)
{
    SearchBudget budget;
    return classify(g, budget);
}

} // namespace edgestab
