#pragma once

#include "injcol/graph.hpp"

#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

namespace injcol
{

/// Non-negative length that may be infinite: the girth of a forest or the
/// diameter of a disconnected graph.
class Length
{
public:
    static constexpr Length infinite() { return Length(); }
    constexpr explicit Length(std::size_t v)
        : v_(v)
    {
    }

    constexpr bool is_infinite() const { return v_ == inf; }
    constexpr bool is_finite() const { return v_ != inf; }
    /// Finite value; infinite lengths report SIZE_MAX.
    constexpr std::size_t value() const { return v_; }

    friend constexpr bool operator==(Length, Length) = default;
    friend constexpr auto operator<=>(Length, Length) = default;

private:
    static constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    constexpr Length() = default;
    std::size_t v_ = inf;
};

std::ostream& operator<<(std::ostream& os, Length l);

using Girth = Length;

/// G^(2): u ~ v iff u != v and they have a common neighbour in `base`.
struct ConflictGraph {
    Graph base;
    Graph conflicts;
};

ConflictGraph conflict_graph(const Graph& g);

Girth girth(const Graph& g);
Length diameter(const Graph& g);

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);
/// Articulation points in increasing order.
std::vector<VertexId> cut_vertices(const Graph& g);

/// True iff g has more than k vertices and no vertex cut of size < k.
bool vertex_connectivity_at_least(const Graph& g, std::size_t k);

bool every_edge_on_triangle(const Graph& g);

/// Left-right (de Fraysseix-Rosenstiehl) planarity criterion.
bool is_planar(const Graph& g);

/// Unordered pairs {x, y} joined by exactly one path of length two, where that
/// path runs through the edge e. Pairs are reported with x < y, sorted.
std::vector<std::pair<VertexId, VertexId>> unique_length2_path_pairs_through(const Graph& g, Edge e);

} // namespace injcol
