#include "edgestab/generators.hpp"
#include "edgestab/stability.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace edgestab;

TEST_CASE("Petersen graph")
{
    const Graph p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (Vertex v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);
    for (Vertex i = 0; i < 5; ++i)
        CHECK(p.has_edge(i, i + 5));
    for (const auto& e : petersen_figure_pair())
        CHECK(p.has_edge(e.u, e.v));
}

TEST_CASE("complete graph minus a matching")
{
    const Graph g = complete_minus_matching(2, 1);
    CHECK(g.order() == 5);
    CHECK(g.size() == 9);
    for (int n : {2, 3, 4}) {
        for (int s = 0; s <= n - 1; ++s) {
            const auto p = degree_profile(complete_minus_matching(n, s));
            CHECK(p.t(2 * n) == 2 * n + 1 - 2 * s);
            CHECK(p.t(2 * n - 1) == 2 * s);
        }
    }
    CHECK_THROWS_AS(complete_minus_matching(2, 2), std::invalid_argument);
}

TEST_CASE("pendant family")
{
    const Graph g = remark5_graph(2);
    CHECK(g.order() == 6);
    CHECK(g.size() == 10);
    CHECK(degree_profile(g).t(4) == 4);
    CHECK(degree_profile(remark5_graph(3)).t(6) == 6);
}

TEST_CASE("Petersen minus an edge and its chains")
{
    const Graph q = q_graph();
    CHECK(q.size() == 14);
    CHECK(degree_profile(q).t(3) == 8);
    CHECK(degree_profile(q).t(2) == 2);
    CHECK(q == remove_edges(petersen(), EdgeSet{Edge{5, 7}}));

    for (int m : {1, 2, 3}) {
        const Graph c = q_chain(m);
        CHECK(c.order() == 4 + 10 * m);
        CHECK(c.max_degree() == 4);
        CHECK(degree_profile(c).t(4) == 1);
        CHECK(is_connected(c));
    }
    CHECK(chromatic_index(q_chain(1)) == 4);
}

TEST_CASE("disjoint unions for the sharp general bound")
{
    const Graph g = remark8_union(2, 3);
    const auto p = degree_profile(g);
    CHECK(p.t(p.delta) == 2);
    CHECK(p.s == 3);
    for (int t = 1; t <= 3; ++t)
        for (int s = 0; s <= 6; ++s) {
            const auto q = degree_profile(remark8_union(t, s));
            CHECK(q.t(q.delta) == t);
        }
}

TEST_CASE("counterexample family")
{
    CHECK(prop_admissible_pairs(2).size() == 9);
    for (int k : {2, 3}) {
        const auto l = prop_layout(k);
        CHECK(l.a.size() == static_cast<std::size_t>(k));
        CHECK(l.b.size() == static_cast<std::size_t>(2 * k - 1));
        CHECK(l.c.size() == static_cast<std::size_t>(k));
        for (int choice = 0; choice < static_cast<int>(prop_admissible_pairs(k).size()); ++choice) {
            const Graph g = prop_counterexample(k, choice);
            const Edge xy = prop_admissible_pairs(k)[static_cast<std::size_t>(choice)];
            CHECK(g.order() == 4 * k + 1);
            CHECK(g.max_degree() == 2 * k + 1);
            CHECK(g.degree(l.u) == k + 1);
            CHECK(g.degree(l.v) == k + 1);
            for (Vertex w = 0; w < g.order(); ++w) {
                const bool end = w == xy.u || w == xy.v;
                if (end)
                    CHECK(g.degree(w) == 2 * k + 1);
                else if (w != l.u && w != l.v)
                    CHECK(g.degree(w) == 2 * k);
            }
        }
    }
    const Graph nine = prop_counterexample(2, 0);
    CHECK(nine.order() == 9);
    CHECK_THROWS_AS(prop_counterexample(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(prop_counterexample(2, 9), std::invalid_argument);
}

TEST_CASE("small named families")
{
    CHECK(star(4).size() == 4);
    CHECK(complete_bipartite(2, 3).size() == 6);
    CHECK(cycle_graph(5).size() == 5);
    CHECK(complete_graph(6).size() == 15);
}

TEST_CASE("random graphs")
{
    CHECK(random_graph(5, 1.0, 3) == complete_graph(5));
    const Graph forced = random_graph(4, 0.0, 1);
    CHECK(forced.size() == 1);
    CHECK(forced.edge(0) == Edge{0, 1});
    CHECK(random_graph(9, 0.4, 77) == random_graph(9, 0.4, 77));
    CHECK(random_bipartite(3, 4, 0.5, 5) == random_bipartite(3, 4, 0.5, 5));
    CHECK(is_bipartite(random_bipartite(5, 6, 0.7, 12)));
    CHECK(random_bipartite(2, 2, 0.0, 1).edge(0) == Edge{0, 2});
    CHECK_THROWS_AS(random_graph(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("family specs")
{
    FamilySpec spec{Family::complete_minus_matching, {3, 2}};
    CHECK(generate(spec) == complete_minus_matching(3, 2));
    CHECK(family_from_string("q_chain") == Family::q_chain);
    CHECK(to_string(Family::remark8_union) == "remark8_union");
    CHECK_THROWS_AS(family_from_string("nope"), std::invalid_argument);
    CHECK_THROWS_AS(generate(FamilySpec{Family::petersen, {1}}), std::invalid_argument);
    FamilySpec rnd{Family::random, {8}, 0.3, 42};
    CHECK(generate(rnd) == random_graph(8, 0.3, 42));
}
