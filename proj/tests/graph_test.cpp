#include "edgestab/generators.hpp"
#include "edgestab/graph.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace edgestab;
using testing::make;

TEST_CASE("edge lists build simple graphs")
{
    const Graph p3 = make(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.degree(1) == 2);

    const Graph single = make(2, {{0, 1}, {1, 0}});
    CHECK(single.size() == 1);

    CHECK_THROWS_AS(make(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(make(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(make(2, {{-1, 1}}), GraphError);
}

TEST_CASE("edges are canonical and sorted")
{
    const Graph g = make(4, {{3, 1}, {2, 0}, {1, 0}});
    REQUIRE(g.size() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{1, 3});
    CHECK(g.edge_index(3, 1) == 2);
    CHECK_FALSE(g.edge_index(2, 3).has_value());
    CHECK(g.neighbors(0).size() == 2);
    CHECK(make_edge(5, 2) == Edge{2, 5});
    CHECK_THROWS_AS(make_edge(1, 1), GraphError);
}

TEST_CASE("core")
{
    const auto pc = core(petersen());
    CHECK(pc.graph == petersen());

    const auto sc = core(star(3));
    CHECK(sc.graph.order() == 1);
    CHECK(sc.graph.size() == 0);
    CHECK(sc.to_parent == std::vector<Vertex>{0});

    // Only the two endpoints of the added pair reach the maximum degree.
    const Graph g = prop_counterexample(2, 0);
    const auto pair = prop_admissible_pairs(2).front();
    const auto gc = core(g);
    CHECK(gc.graph.order() == 2);
    CHECK(gc.graph.size() == 1);
    CHECK(gc.to_parent == std::vector<Vertex>{pair.u, pair.v});
}

TEST_CASE("degree profile")
{
    const auto p = degree_profile(petersen());
    CHECK(p.delta == 3);
    CHECK(p.t(3) == 10);
    CHECK(p.s == 0);

    const auto r = degree_profile(remark5_graph(2));
    CHECK(r.delta == 4);
    CHECK(r.t(4) == 4);
    CHECK(r.t(3) == 1);
    CHECK(r.t(1) == 1);

    const auto b = degree_profile(complete_bipartite(2, 3));
    CHECK(b.delta == 3);
    CHECK(b.t(3) == 2);
    CHECK(b.t(2) == 3);
    // Every degree-2 vertex sees a degree-3 vertex.
    CHECK(b.s == 3);

    // Both degree-3 vertices of K5 minus an edge have degree-4 neighbors.
    const auto k = degree_profile(complete_minus_matching(2, 1));
    CHECK(k.t(4) == 3);
    CHECK(k.t(3) == 2);
    CHECK(k.s == 2);
}

TEST_CASE("edge removal")
{
    const Graph p = petersen();
    CHECK(remove_edges(p, petersen_figure_pair()).size() == 13);
    CHECK(remove_edges(p, EdgeSet{}) == p);

    const Graph k5 = complete_graph(5);
    const EdgeSet one{Edge{0, 1}};
    const Graph h = remove_edges(k5, one);
    CHECK(h.size() == 9);
    auto degrees = h.degrees();
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(degrees == std::vector<int>{4, 4, 4, 3, 3});
    CHECK_THROWS_AS(remove_edges(h, one), GraphError);
}

TEST_CASE("structural predicates")
{
    CHECK(is_acyclic(star(3)));
    CHECK_FALSE(is_acyclic(cycle_graph(3)));

    const Graph c6 = cycle_graph(6);
    CHECK(is_bipartite(c6));
    const auto cycle = find_cycle(c6);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 6);
    CHECK_FALSE(find_cycle(star(4)).has_value());
    CHECK_FALSE(is_bipartite(cycle_graph(5)));

    const Graph k5e = remove_edges(complete_graph(5), EdgeSet{Edge{2, 4}});
    const Graph co = complement(k5e);
    CHECK(co.size() == 1);
    CHECK(co.edge(0) == Edge{2, 4});

    const Graph two = make(5, {{0, 1}, {2, 3}});
    CHECK(connected_components(two).size() == 3);
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(petersen()));
}

TEST_CASE("bipartition sides are proper")
{
    const Graph g = complete_bipartite(2, 3);
    const auto parts = bipartition(g);
    REQUIRE(parts.has_value());
    for (const auto& e : g.edges())
        CHECK(parts->side[static_cast<std::size_t>(e.u)] != parts->side[static_cast<std::size_t>(e.v)]);
}

TEST_CASE("induced subgraphs keep the parent order")
{
    const Graph p = petersen();
    const std::vector<Vertex> inner{5, 6, 7, 8, 9};
    const auto sub = induced_subgraph(p, inner);
    CHECK(sub.graph.size() == 5);
    for (const auto& e : sub.graph.edges())
        CHECK(p.has_edge(sub.to_parent[static_cast<std::size_t>(e.u)], sub.to_parent[static_cast<std::size_t>(e.v)]));
}

TEST_CASE("properties over all graphs up to 6 vertices")
{
    for (const auto& g : testing::small_graphs(6)) {
        CAPTURE(write_graph6(g));
        const auto p = degree_profile(g);
        int vertices = 0;
        int degree_sum = 0;
        for (const auto& [d, count] : p.counts) {
            vertices += count;
            degree_sum += d * count;
        }
        CHECK(vertices == g.order());
        CHECK(degree_sum == 2 * g.size());
        CHECK(p.t(p.delta) >= 1);
        CHECK(p.s <= p.t(p.delta - 1));

        CHECK(complement(complement(g)) == g);

        const auto c = core(g);
        for (Vertex v = 0; v < c.graph.order(); ++v)
            CHECK(g.degree(c.to_parent[static_cast<std::size_t>(v)]) == g.max_degree());
        for (const auto& e : c.graph.edges())
            CHECK(g.has_edge(c.to_parent[static_cast<std::size_t>(e.u)], c.to_parent[static_cast<std::size_t>(e.v)]));

        // Removing every other edge lowers degrees by the incidence counts.
        EdgeSet half;
        for (int i = 0; i < g.size(); i += 2)
            half.push_back(g.edge(i));
        const Graph h = remove_edges(g, half);
        for (Vertex v = 0; v < g.order(); ++v) {
            const auto hits = std::count_if(half.begin(), half.end(), [&](const Edge& e) { return e.u == v || e.v == v; });
            CHECK(h.degree(v) == g.degree(v) - hits);
        }

        CHECK(is_acyclic(g) == !find_cycle(g).has_value());
    }
}
