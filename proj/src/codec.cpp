#include "injcol/codec.hpp"

#include <sstream>

namespace injcol
{

namespace
{

constexpr int bias = 63;

std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.starts_with(graph6_header))
        s.remove_prefix(graph6_header.size());
    return s;
}

int sextet(char c)
{
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw Graph6Error("byte " + std::to_string(b) + " outside printable range [63, 126]");
    return b - bias;
}

} // namespace

Graph parse_graph6(std::string_view line)
{
    line = strip(line);
    if (line.empty())
        throw Graph6Error("empty graph6 record");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] == '~') {
        if (line.size() > 1 && line[1] == '~')
            throw Graph6Error("8-byte size field (n > 258047) is not supported");
        if (line.size() < 4)
            throw Graph6Error("truncated size field");
        n = (static_cast<std::size_t>(sextet(line[1])) << 12) |
            (static_cast<std::size_t>(sextet(line[2])) << 6) | static_cast<std::size_t>(sextet(line[3]));
        if (n < 63)
            throw Graph6Error("non-canonical 4-byte size field for n = " + std::to_string(n));
        pos = 4;
    } else {
        n = static_cast<std::size_t>(sextet(line[0]));
        pos = 1;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() - pos != body)
        throw Graph6Error("expected " + std::to_string(body) + " body bytes for n = " + std::to_string(n) +
                          ", found " + std::to_string(line.size() - pos));

    EdgeList edges;
    std::size_t k = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i, ++k) {
            int group = sextet(line[pos + k / 6]);
            if ((group >> (5 - k % 6)) & 1)
                edges.push_back({i, j});
        }
    if (bits % 6) {
        int last = sextet(line.back());
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw Graph6Error("nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > graph6_max_order)
        throw Graph6Error("order " + std::to_string(n) + " needs the unsupported 8-byte size field");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + bias));
        out.push_back(static_cast<char>((n & 63) + bias));
    }

    int group = 0;
    int filled = 0;
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + bias));
                group = 0;
                filled = 0;
            }
        }
    if (filled)
        out.push_back(static_cast<char>((group << (6 - filled)) + bias));
    return out;
}

std::optional<Graph> Graph6Reader::next()
{
    while (std::getline(in_, line_)) {
        ++line_no_;
        auto body = strip(line_);
        if (body.empty())
            continue;
        try {
            return parse_graph6(body);
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.what(), line_no_);
        }
    }
    return std::nullopt;
}

std::vector<Graph> read_stream(std::istream& in)
{
    Graph6Reader reader(in);
    std::vector<Graph> out;
    while (auto g = reader.next())
        out.push_back(std::move(*g));
    return out;
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto e : g.edges())
        os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream is{std::string(text)};
    std::size_t n = 0, m = 0;
    if (!(is >> n >> m))
        throw GraphError("edge list: missing \"n m\" header");
    EdgeList es(m);
    for (auto& e : es)
        if (!(is >> e.u >> e.v))
            throw GraphError("edge list: expected " + std::to_string(m) + " edges");
    return Graph::from_edges(n, es);
}

} // namespace injcol
