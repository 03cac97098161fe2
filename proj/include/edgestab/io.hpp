#pragma once

#include "edgestab/graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edgestab {

class Graph6Error : public std::invalid_argument {
public:
    /// malformed: bad size header or a byte outside 63..126.
    enum class Kind { malformed, truncated, trailing_garbage };

    Graph6Error(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class EdgeListError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Standard graph6: size header, then the upper triangle of the adjacency
/// matrix column by column, six bits per printable byte. An optional
/// ">>graph6<<" prefix is accepted. Padding bits must be zero.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Non-empty lines of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// "n m" followed by m lines "u v" (0-based). Blank lines and lines starting
/// with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

} // namespace edgestab
