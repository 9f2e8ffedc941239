#pragma once

#include "injcol/graph.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace injcol
{

class Graph6Error : public std::runtime_error
{
public:
    Graph6Error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line)
    {
    }
    /// 1-based input line, 0 when not reading from a stream.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline constexpr std::string_view graph6_header = ">>graph6<<";

/// Largest order expressible without the 8-byte size field.
inline constexpr std::size_t graph6_max_order = 258047;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// '\r' / '\n' are ignored.
Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

/// Lazily reads newline-delimited graph6 records. Blank lines and header-only
/// lines are skipped; decode failures throw Graph6Error carrying the line.
class Graph6Reader
{
public:
    explicit Graph6Reader(std::istream& in)
        : in_(in)
    {
    }

    /// Next graph, or nullopt at end of input.
    std::optional<Graph> next();
    /// Raw text of the line that produced the last graph.
    const std::string& last_line() const { return line_; }
    std::size_t line_number() const { return line_no_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t line_no_ = 0;
};

std::vector<Graph> read_stream(std::istream& in);

/// Plain edge-list text: first line "n m", then one "u v" pair per line.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

} // namespace injcol
