#include "edgestab/census.hpp"

#include "edgestab/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace edgestab {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<int>>;

struct SmallGraph {
    int n = 0;
    std::array<Mask, max_supported_order> adj{};
};

std::uint64_t code_for(const SmallGraph& g, const std::vector<int>& order)
{
    std::uint64_t code = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | ((g.adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)]) & 1u);
    return code;
}

SmallGraph decode(int n, std::uint64_t code)
{
    SmallGraph g;
    g.n = n;
    int bit = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            --bit;
            if ((code >> bit) & 1u) {
                g.adj[static_cast<std::size_t>(i)] |= Mask{1} << j;
                g.adj[static_cast<std::size_t>(j)] |= Mask{1} << i;
            }
        }
    }
    return g;
}

class Canonizer {
public:
    explicit Canonizer(const SmallGraph& g) : g_(g) {}

    std::uint64_t run()
    {
        std::vector<int> all(static_cast<std::size_t>(g_.n));
        for (int v = 0; v < g_.n; ++v)
            all[static_cast<std::size_t>(v)] = v;
        search(Cells{all});
        return best_;
    }

private:
    void refine(Cells& cells) const
    {
        std::vector<int> cell_of(static_cast<std::size_t>(g_.n));
        for (;;) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c])
                    cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
            Cells next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                for (int v : cell) {
                    std::vector<int> sig(cells.size(), 0);
                    for (Mask rest = g_.adj[static_cast<std::size_t>(v)]; rest; rest &= rest - 1)
                        ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(std::countr_zero(rest))])];
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first)
                        next.emplace_back();
                    next.back().push_back(keyed[i].second);
                }
            }
            if (next.size() == cells.size())
                return;
            cells = std::move(next);
        }
    }

    bool twins(int a, int b) const
    {
        const Mask ma = g_.adj[static_cast<std::size_t>(a)] & ~(Mask{1} << b);
        const Mask mb = g_.adj[static_cast<std::size_t>(b)] & ~(Mask{1} << a);
        return ma == mb;
    }

    void search(Cells cells)
    {
        refine(cells);
        auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (open == cells.end()) {
            std::vector<int> order;
            for (const auto& c : cells)
                order.push_back(c.front());
            best_ = std::max(best_, code_for(g_, order));
            return;
        }
        const auto index = static_cast<std::size_t>(open - cells.begin());
        const auto cell = cells[index];
        std::vector<int> tried;
        for (int v : cell) {
            // Swapping twins is an automorphism fixing the partition.
            if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); }))
                continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != index) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cell)
                    if (w != v)
                        rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }

    const SmallGraph& g_;
    std::uint64_t best_ = 0;
};

std::vector<std::uint64_t> extend(int n, const std::vector<std::uint64_t>& parents)
{
    std::unordered_set<std::uint64_t> seen;
    const int old = n - 1;
    for (std::uint64_t pc : parents) {
        const SmallGraph parent = decode(old, pc);
        for (Mask nbrs = 0; nbrs < (Mask{1} << old); ++nbrs) {
            const int new_degree = std::popcount(nbrs);
            bool minimal = true;
            for (int v = 0; v < old && minimal; ++v)
                minimal = std::popcount(parent.adj[static_cast<std::size_t>(v)]) + static_cast<int>((nbrs >> v) & 1u) >= new_degree;
            if (!minimal)
                continue;
            SmallGraph g = parent;
            g.n = n;
            g.adj[static_cast<std::size_t>(old)] = nbrs;
            for (int v = 0; v < old; ++v)
                if ((nbrs >> v) & 1u)
                    g.adj[static_cast<std::size_t>(v)] |= Mask{1} << old;
            seen.insert(Canonizer(g).run());
        }
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Graph to_graph(const SmallGraph& g)
{
    std::vector<Edge> edges;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if ((g.adj[static_cast<std::size_t>(i)] >> j) & 1u)
                edges.push_back(Edge{i, j});
    return Graph::from_edges(g.n, edges);
}

// Number of unlabelled graphs on n vertices (OEIS A000088).
constexpr std::array<std::uint64_t, 12> known_counts{1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168, 1018997864};

} // namespace

std::vector<std::vector<std::string>> enumerate_graph6(int max_order)
{
    if (max_order < 1 || max_order > max_supported_order)
        throw std::invalid_argument("census order must be in [1, " + std::to_string(max_supported_order) + "]");
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(max_order) + 1);
    std::vector<std::uint64_t> level{0}; // the single graph on one vertex
    for (int n = 1; n <= max_order; ++n) {
        if (n > 1)
            level = extend(n, level);
        auto& graphs = out[static_cast<std::size_t>(n)];
        graphs.reserve(level.size());
        for (std::uint64_t code : level)
            graphs.push_back(write_graph6(to_graph(decode(n, code))));
    }
    return out;
}

std::uint64_t known_graph_count(int n)
{
    if (n < 0 || n >= static_cast<int>(known_counts.size()))
        throw std::invalid_argument("no known count for order " + std::to_string(n));
    return known_counts[static_cast<std::size_t>(n)];
}

} // namespace edgestab
