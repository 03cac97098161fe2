#include "edgestab/census.hpp"
#include "edgestab/io.hpp"

#include <doctest.h>

#include <set>

using namespace edgestab;

TEST_CASE("class counts match the known sequence")
{
    const auto levels = enumerate_graph6(8);
    for (int n = 1; n <= 8; ++n)
        CHECK(levels[static_cast<std::size_t>(n)].size() == known_graph_count(n));
}

TEST_CASE("census lines are distinct valid graphs of the right order")
{
    const auto levels = enumerate_graph6(6);
    for (int n = 1; n <= 6; ++n) {
        const auto& lines = levels[static_cast<std::size_t>(n)];
        CHECK(std::set<std::string>(lines.begin(), lines.end()).size() == lines.size());
        for (const auto& line : lines)
            CHECK(parse_graph6(line).order() == n);
    }
}

TEST_CASE("edge counts per order")
{
    // Graphs on 5 vertices by number of edges (0..10).
    const std::vector<int> expected{1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1};
    std::vector<int> seen(11, 0);
    const auto levels = enumerate_graph6(5);
    for (const auto& line : levels[5])
        ++seen[static_cast<std::size_t>(parse_graph6(line).size())];
    CHECK(seen == expected);
}

TEST_CASE("limits")
{
    CHECK_THROWS_AS(enumerate_graph6(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graph6(12), std::invalid_argument);
    CHECK_THROWS_AS(known_graph_count(12), std::invalid_argument);
}
