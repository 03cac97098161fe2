#pragma once

#include "edgestab/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace edgestab {

enum class Family {
    petersen,
    complete,
    complete_minus_matching,
    remark5,
    q_graph,
    q_chain,
    remark8_union,
    prop_counterexample,
    star,
    complete_bipartite,
    cycle,
    random,
    random_bipartite,
};

std::string to_string(Family family);
Family family_from_string(const std::string& name);

/// Family name, integer parameters, and for the random families an edge
/// probability and seed.
struct FamilySpec {
    Family family = Family::petersen;
    std::vector<int> params;
    double probability = 0.5;
    std::uint64_t seed = 0;
};

/// Vertex numbering per family:
///  - petersen: outer cycle 0-4, inner pentagram 5-9, spokes i -- i+5.
///  - complete_minus_matching(n, s): K_{2n+1} minus (0,1), (2,3), ...
///  - remark5(k): K_{2k+1} on 0..2k minus (0,1), plus pendant 2k+1 on 0.
///  - q_graph: petersen minus (5,7); 5 and 7 have degree 2.
///  - q_chain(m): star center 0, leaves 1-3, copy j of Q at 4+10j; 0 joins
///    copy 0's vertex 5, copy j's vertex 7 joins copy j+1's vertex 5.
///  - remark8_union(t, s): the class 2 part first (K_s for odd s >= 3,
///    remark5(s/2) for even s >= 4), then t stars K_{1,D+1} with D its max
///    degree. For s <= 2 the stars are K_{1,3} and s paths P3 are appended.
///  - prop_counterexample(k, choice): u = 0, A = 1..k, B = k+1..3k-1,
///    C = 3k..4k-1, v = 4k, plus uv and the choice-th admissible pair xy.
///  - star(r): center 0. complete_bipartite(a, b): sides 0..a-1, a..a+b-1.
///  - cycle(n): 0-1-...-(n-1)-0.
///  - random(n) / random_bipartite(a, b): G(n, p) with FamilySpec's p and seed.
/// Throws std::invalid_argument on out-of-range parameters.
Graph generate(const FamilySpec& spec);

Graph petersen();
Graph complete_graph(int n);
Graph complete_minus_matching(int n, int s);
Graph remark5_graph(int k);
Graph q_graph();
Graph q_chain(int copies);
Graph remark8_union(int t, int s);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);

/// Non-adjacent pairs of A, B, C in the counterexample base graph, in
/// canonical order.
std::vector<Edge> prop_admissible_pairs(int k);
Graph prop_counterexample(int k, int xy_choice);

/// Named vertices of prop_counterexample(k, .).
struct PropLayout {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<Vertex> a, b, c;
};
PropLayout prop_layout(int k);

/// Reproducible for a fixed seed; an edgeless draw gets the edge (0,1)
/// (or the first cross pair for the bipartite variant).
Graph random_graph(int n, double p, std::uint64_t seed);
Graph random_bipartite(int n1, int n2, double p, std::uint64_t seed);

/// The two inner edges missing from the 3-edge-colored Petersen subgraph of
/// the classic figure, in this labelling: (5,8) and (7,9).
EdgeSet petersen_figure_pair();

} // namespace edgestab
