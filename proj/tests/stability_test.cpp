#include "edgestab/generators.hpp"
#include "edgestab/oracle.hpp"
#include "edgestab/stability.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace edgestab;
using testing::make;

TEST_CASE("mitigating sets of the Petersen graph")
{
    const Graph p = petersen();
    CHECK(is_mitigating(p, petersen_figure_pair()));
    for (const auto& e : p.edges())
        CHECK_FALSE(is_mitigating(p, EdgeSet{e}));
    CHECK_FALSE(is_mitigating(p, EdgeSet{}));
    CHECK_THROWS_AS(is_mitigating(p, EdgeSet{Edge{0, 2}}), GraphError);

    SearchBudget budget;
    const auto m = evaluate_set(p, petersen_figure_pair(), budget);
    CHECK(m.chi_before == 4);
    CHECK(m.chi_after == 3);
}

TEST_CASE("the degree condition")
{
    const Graph g = prop_counterexample(2, 0);
    const auto l = prop_layout(2);
    CHECK_FALSE(meets_high_degree(g, make_edge(l.u, l.v)));
    CHECK(meets_high_degree(g, make_edge(l.u, l.a[0])));
}

TEST_CASE("bounds from the degree profile")
{
    CHECK(class2_bound(degree_profile(complete_graph(5))) == 2);
    CHECK(class2_bound(degree_profile(petersen())) == 4);
    CHECK(general_bound(star(3)) == 1);
    CHECK(general_bound(petersen()) == 9);
    CHECK(general_bound(complete_minus_matching(2, 1)) == 3);
    CHECK(general_bound_guarantee(star(3)) == 1);
    CHECK(general_bound_guarantee(petersen()) == 9);
    CHECK(general_bound(remark8_union(2, 3)) == 3);
}

TEST_CASE("cycle-breaking in the maximum-degree core")
{
    const Graph k5 = complete_graph(5);
    const auto f = class2_bound_set(k5);
    CHECK(f.size() <= 2);
    CHECK(k_edge_colorable(remove_edges(k5, f.edges), 4).has_value());

    const auto g = class2_bound_set(complete_minus_matching(3, 2));
    CHECK(g.size() <= 1);

    const auto p = class2_bound_set(petersen());
    CHECK(p.size() <= 4);
    CHECK(is_mitigating(petersen(), p.edges));

    CHECK_THROWS_AS(class2_bound_set(complete_bipartite(3, 3)), PreconditionError);
}

TEST_CASE("iterative removal for the general bound")
{
    const auto s = general_bound_set(star(3));
    CHECK(s.size() == 1);

    const auto p = general_bound_set(petersen());
    CHECK(p.size() <= 9);
    CHECK(is_mitigating(petersen(), p.edges));

    const Graph u = remark8_union(2, 3);
    const auto r = general_bound_set(u);
    CHECK(r.size() <= 3);
    CHECK(exact_es(u).es == 3);
}

TEST_CASE("bipartite formula")
{
    CHECK(bipartite_es_set(complete_bipartite(3, 3)).es == 3);
    CHECK(bipartite_es_set(star(3)).es == 1);
    CHECK(bipartite_es_set(complete_bipartite(2, 3)).es == 2);
    const auto r = bipartite_es_set(cycle_graph(6));
    CHECK(r.es == 3);
    CHECK(r.method == StabilityMethod::bipartite_formula);
    CHECK(is_mitigating(cycle_graph(6), r.witness.edges));
    CHECK_THROWS_AS(bipartite_es_set(petersen()), PreconditionError);
}

TEST_CASE("recognizing complete graphs minus a matching")
{
    const auto k5 = recognize_k2n1_minus_matching(complete_graph(5));
    CHECK(k5.matches);
    CHECK(k5.n == 2);
    CHECK(k5.s == 0);
    const auto k7 = recognize_k2n1_minus_matching(complete_minus_matching(3, 2));
    CHECK(k7.matches);
    CHECK(k7.n == 3);
    CHECK(k7.s == 2);
    CHECK_FALSE(recognize_k2n1_minus_matching(petersen()).matches);
    CHECK_FALSE(recognize_k2n1_minus_matching(complete_graph(6)).matches);
    // A full perfect-size matching (s = n) is outside the family.
    CHECK_FALSE(recognize_k2n1_minus_matching(remove_edges(complete_graph(5), EdgeSet{Edge{0, 1}, Edge{2, 3}})).matches);
}

TEST_CASE("three-vertex cores")
{
    CHECK(recognize_core3_class2(complete_minus_matching(2, 1)));
    CHECK(classify(complete_minus_matching(2, 1)) == EdgeClass::class2);
    CHECK(recognize_core3_class2(complete_minus_matching(3, 2)));

    // The path 0-1-2 padded with pendants to degree 3: an acyclic core.
    const Graph g = make(8, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {2, 7}});
    REQUIRE(core(g).graph.order() == 3);
    CHECK_FALSE(recognize_core3_class2(g));
    CHECK(classify(g) == EdgeClass::class1);

    CHECK_THROWS_AS(recognize_core3_class2(petersen()), PreconditionError);
    CHECK_THROWS_AS(recognize_core3_class2(make(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}})), PreconditionError);
}

TEST_CASE("applicable bound follows the graph type")
{
    SearchBudget budget;
    CHECK(applicable_bound(complete_bipartite(3, 3), budget) == 3);
    CHECK(applicable_bound(petersen(), budget) == 4);
    CHECK(applicable_bound(q_chain(1), budget) == general_bound(q_chain(1)));
}

TEST_CASE("constructive sets are mitigating and within their bounds")
{
    auto graphs = testing::small_graphs(6);
    const auto randoms = testing::random_sample(150, 4, 11, 3300);
    graphs.insert(graphs.end(), randoms.begin(), randoms.end());
    for (const auto& g : graphs) {
        CAPTURE(write_graph6(g));
        const auto profile = degree_profile(g);
        const int t = profile.t(profile.delta);
        const int below = profile.t(profile.delta - 1);

        const auto general = general_bound_set(g);
        CHECK(is_mitigating(g, general.edges));
        CHECK(general.size() <= general_bound_guarantee(g));
        CHECK(general.size() <= general_bound(g));
        CHECK(2 * general.size() <= 2 * t + below);
        if (below >= 1)
            CHECK(general.size() <= t + (below - 1) / 2);

        if (classify(g) == EdgeClass::class2) {
            const auto c2 = class2_bound_set(g);
            CHECK(is_mitigating(g, c2.edges));
            CHECK(c2.size() <= class2_bound(profile));
        }
        if (is_bipartite(g)) {
            const auto b = bipartite_es_set(g);
            CHECK(is_mitigating(g, b.witness.edges));
            CHECK(b.witness.size() == b.es);
        }
    }
}

TEST_CASE("equality in the Class 2 bound exactly for complete graphs minus a matching")
{
    for (const auto& g : testing::small_graphs(7)) {
        if (!is_connected(g) || classify(g) != EdgeClass::class2)
            continue;
        const auto p = degree_profile(g);
        const int t = p.t(p.delta);
        if (t % 2 == 0)
            continue;
        CAPTURE(write_graph6(g));
        CHECK((exact_es(g).es == (t - 1) / 2) == recognize_k2n1_minus_matching(g).matches);
    }
}

TEST_CASE("three-vertex core prediction agrees with the class")
{
    int seen = 0;
    for (const auto& g : testing::small_graphs(7)) {
        if (!is_connected(g) || core(g).graph.order() != 3)
            continue;
        ++seen;
        CAPTURE(write_graph6(g));
        CHECK(recognize_core3_class2(g) == (classify(g) == EdgeClass::class2));
    }
    CHECK(seen > 100);
}
