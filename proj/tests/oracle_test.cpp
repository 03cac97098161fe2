#include "edgestab/generators.hpp"
#include "edgestab/oracle.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace edgestab;

// The oracles are checked against hand-known values only, never against the
// algorithms they are used to test.

TEST_CASE("matching numbers")
{
    CHECK(oracle::matching_number(petersen()) == 5);
    CHECK(oracle::matching_number(complete_graph(5)) == 2);
    CHECK(oracle::matching_number(cycle_graph(7)) == 3);
    CHECK(oracle::matching_number(star(6)) == 1);
    CHECK(oracle::matching_number(complete_bipartite(3, 5)) == 3);
    CHECK(oracle::matching_number(Graph::from_edges(4, std::vector<Edge>{})) == 0);
}

TEST_CASE("chromatic indices")
{
    CHECK(oracle::chromatic_index(cycle_graph(5)) == 3);
    CHECK(oracle::chromatic_index(cycle_graph(6)) == 2);
    CHECK(oracle::chromatic_index(complete_graph(4)) == 3);
    CHECK(oracle::chromatic_index(complete_graph(5)) == 5);
    CHECK(oracle::chromatic_index(petersen()) == 4);
    CHECK(oracle::chromatic_index(star(4)) == 4);
}

TEST_CASE("stability indices")
{
    CHECK(oracle::stability_index(cycle_graph(5)) == 1);
    CHECK(oracle::stability_index(cycle_graph(6)) == 3);
    CHECK(oracle::stability_index(star(3)) == 1);
    CHECK(oracle::stability_index(complete_graph(5)) == 2);
    CHECK(oracle::stability_index(complete_bipartite(3, 3)) == 3);
    CHECK(oracle::stability_index(petersen()) == 2);
}

TEST_CASE("size limits")
{
    CHECK_THROWS_AS(oracle::chromatic_index(complete_graph(7)), std::invalid_argument);
    CHECK_THROWS_AS(oracle::matching_number(cycle_graph(21)), std::invalid_argument);
}
