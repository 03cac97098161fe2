#include "edgestab/io.hpp"

#include <charconv>
#include <sstream>

namespace edgestab {

namespace {

constexpr std::string_view graph6_prefix = ">>graph6<<";

int sextet(char ch)
{
    const int value = static_cast<unsigned char>(ch) - 63;
    if (value < 0 || value > 63)
        throw Graph6Error(Graph6Error::Kind::malformed,
            std::string("graph6: byte '") + ch + "' outside the printable range 63..126");
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

} // namespace

Graph parse_graph6(std::string_view line)
{
    line = trim(line);
    if (line.substr(0, graph6_prefix.size()) == graph6_prefix)
        line.remove_prefix(graph6_prefix.size());
    if (line.empty())
        throw Graph6Error(Graph6Error::Kind::malformed, "graph6: empty line");
    for (char ch : line)
        sextet(ch);

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] != '~') {
        n = sextet(line[0]);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4)
            throw Graph6Error(Graph6Error::Kind::malformed, "graph6: short 18-bit size header");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | sextet(line[i]);
        pos = 4;
        if (n <= 62)
            throw Graph6Error(Graph6Error::Kind::malformed, "graph6: non-minimal size header");
    } else {
        if (line.size() < 8)
            throw Graph6Error(Graph6Error::Kind::malformed, "graph6: short 36-bit size header");
        for (std::size_t i = 2; i <= 7; ++i)
            n = (n << 6) | sextet(line[i]);
        pos = 8;
        if (n <= 258047)
            throw Graph6Error(Graph6Error::Kind::malformed, "graph6: non-minimal size header");
        if (n > 100000)
            throw Graph6Error(Graph6Error::Kind::malformed, "graph6: graph too large");
    }

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    const auto body = line.substr(pos);
    if (static_cast<long long>(body.size()) < bytes)
        throw Graph6Error(Graph6Error::Kind::truncated, "graph6: expected " + std::to_string(bytes)
                + " data bytes, found " + std::to_string(body.size()));
    if (static_cast<long long>(body.size()) > bytes)
        throw Graph6Error(Graph6Error::Kind::trailing_garbage, "graph6: unexpected data after the adjacency bits");

    std::vector<Edge> edges;
    long long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = sextet(body[static_cast<std::size_t>(k / 6)]);
            if (byte & (1 << (5 - k % 6)))
                edges.push_back(Edge{i, j});
        }
    }
    for (; k < bytes * 6; ++k) {
        const int byte = sextet(body[static_cast<std::size_t>(k / 6)]);
        if (byte & (1 << (5 - k % 6)))
            throw Graph6Error(Graph6Error::Kind::trailing_garbage, "graph6: non-zero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g)
{
    std::string out;
    const long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int used = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

namespace {

std::vector<std::string_view> content_lines(std::string_view text)
{
    std::vector<std::string_view> out;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        auto line = trim(text.substr(0, eol));
        if (!line.empty() && line.front() != '#')
            out.push_back(line);
        if (eol == std::string_view::npos)
            break;
        text.remove_prefix(eol + 1);
    }
    return out;
}

std::vector<long long> integers(std::string_view line)
{
    std::vector<long long> out;
    while (true) {
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty())
            break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
            throw EdgeListError("edge list: expected integers in line '" + std::string(line) + "'");
        out.push_back(value);
        line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty())
        throw EdgeListError("edge list: missing 'n m' header");
    const auto header = integers(lines[0]);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw EdgeListError("edge list: header must be 'n m' with non-negative counts");
    const long long n = header[0];
    const long long m = header[1];
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw EdgeListError("edge list: header declares " + std::to_string(m) + " edges but "
            + std::to_string(lines.size() - 1) + " edge lines follow");

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto pair = integers(lines[i]);
        if (pair.size() != 2)
            throw EdgeListError("edge list: edge line must hold two vertices");
        if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
            throw EdgeListError("edge list: vertex index out of range in line '" + std::string(lines[i]) + "'");
        if (pair[0] == pair[1])
            throw EdgeListError("edge list: self-loop at vertex " + std::to_string(pair[0]));
        edges.push_back(Edge{static_cast<Vertex>(pair[0]), static_cast<Vertex>(pair[1])});
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

} // namespace edgestab
