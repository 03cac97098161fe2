#include "edgestab/generators.hpp"
#include "edgestab/io.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace edgestab;

namespace {

Graph6Error::Kind graph6_kind(const std::string& text)
{
    try {
        parse_graph6(text);
    } catch (const Graph6Error& ex) {
        return ex.kind();
    }
    FAIL("no error for " << text);
    return Graph6Error::Kind::malformed;
}

} // namespace

TEST_CASE("graph6 basics")
{
    const Graph empty5 = parse_graph6("D??");
    CHECK(empty5.order() == 5);
    CHECK(empty5.size() == 0);
    CHECK(write_graph6(petersen()) == "IheA@GUAo");
    CHECK(parse_graph6("IheA@GUAo") == petersen());
    CHECK(parse_graph6(">>graph6<<IheA@GUAo") == petersen());
    CHECK(parse_graph6("A_") == testing::make(2, {{0, 1}}));
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 errors are distinguished")
{
    CHECK(graph6_kind("not-graph6!") == Graph6Error::Kind::malformed);
    CHECK(graph6_kind("") == Graph6Error::Kind::malformed);
    CHECK(graph6_kind("~?") == Graph6Error::Kind::malformed);
    CHECK(graph6_kind("~??}") == Graph6Error::Kind::malformed); // 62 vertices fit one byte
    CHECK(graph6_kind("IheA@G") == Graph6Error::Kind::truncated);
    CHECK(graph6_kind("IheA@GUAoo") == Graph6Error::Kind::trailing_garbage);
    CHECK(graph6_kind("B~") == Graph6Error::Kind::trailing_garbage); // padding bits set
}

TEST_CASE("graph6 large headers")
{
    const Graph big = cycle_graph(70);
    const std::string line = write_graph6(big);
    CHECK(line.front() == '~');
    CHECK(parse_graph6(line) == big);
}

TEST_CASE("graph6 round trips")
{
    for (const auto& g : testing::small_graphs(6))
        CHECK(parse_graph6(write_graph6(g)) == g);
    for (const auto& g : testing::random_sample(1000, 2, 40, 1234)) {
        const std::string line = write_graph6(g);
        CHECK(parse_graph6(line) == g);
        CHECK(write_graph6(parse_graph6(line)) == line);
    }
}

TEST_CASE("graph6 streams")
{
    std::istringstream in("IheA@GUAo\n\nA_\n");
    const auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == petersen());
}

TEST_CASE("edge lists")
{
    const Graph single = parse_edge_list("2 1\n0 1\n");
    CHECK(single.size() == 1);
    const Graph p3 = parse_edge_list("# a path\n3 2\n0 1\n\n1 2");
    CHECK(p3 == testing::make(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), EdgeListError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("x y"), EdgeListError);

    CHECK(write_edge_list(testing::make(3, {{2, 1}, {1, 0}})) == "3 2\n0 1\n1 2\n");
    for (const auto& g : testing::random_sample(50, 2, 12, 77))
        CHECK(parse_edge_list(write_edge_list(g)) == g);
}
