#include "edgestab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace edgestab::oracle {

namespace {

constexpr int max_edges = 16;

// cover[mask] = fewest matchings whose disjoint union is the edge subset.
std::vector<int> cover_table(const Graph& g)
{
    const int m = g.size();
    if (m > max_edges || g.order() > 64)
        throw std::invalid_argument("oracle limited to 16 edges on 64 vertices");
    const std::uint32_t full = (1u << m) - 1;

    std::vector<char> matching(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::uint64_t used = 0;
        bool ok = true;
        for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1) {
            const Edge& e = g.edge(std::countr_zero(rest));
            const std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
            ok = (used & ends) == 0;
            used |= ends;
        }
        matching[mask] = ok;
    }

    std::vector<int> cover(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t others = mask ^ low;
        int best = m;
        // The class holding the lowest edge ranges over submasks of the rest.
        for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
            if (matching[sub | low])
                best = std::min(best, 1 + cover[mask ^ (sub | low)]);
            if (sub == 0)
                break;
        }
        cover[mask] = best;
    }
    return cover;
}

} // namespace

int matching_number(const Graph& g)
{
    const int n = g.order();
    if (n > 20)
        throw std::invalid_argument("oracle limited to 20 vertices");
    // best[mask]: largest matching inside the vertex subset.
    std::vector<int> best(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        int value = best[rest];
        for (Vertex w : g.neighbors(v))
            if ((rest >> w) & 1u)
                value = std::max(value, 1 + best[rest & ~(1u << w)]);
        best[mask] = value;
    }
    return best.back();
}

int chromatic_index(const Graph& g)
{
    if (g.empty())
        return 0;
    return cover_table(g).back();
}

int stability_index(const Graph& g)
{
    if (g.empty())
        throw std::invalid_argument("stability index needs an edge");
    const auto cover = cover_table(g);
    const int m = g.size();
    const int chi = cover.back();
    int best = m;
    for (std::size_t mask = 0; mask < cover.size(); ++mask)
        if (cover[mask] < chi)
            best = std::min(best, m - std::popcount(static_cast<std::uint32_t>(mask)));
    return best;
}

} // namespace edgestab::oracle
