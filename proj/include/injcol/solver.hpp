#pragma once

#include "injcol/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace injcol
{

/// Vertex colouring with colours in [0, k). A negative entry marks an
/// uncoloured vertex.
struct Coloring {
    std::vector<std::int32_t> colour;
    std::size_t k = 0;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double seconds = 0.0;
};

struct SolveOptions {
    /// Stop after this many search nodes; the result is then flagged inexact.
    std::optional<std::uint64_t> node_budget;
};

struct SolveResult {
    std::size_t chi_i = 0;
    Coloring witness;
    SolveStats stats;
    /// False when the node budget ran out; chi_i is then the best upper bound
    /// found and `lower` the proven lower bound.
    bool exact = true;
    std::size_t lower = 0;
};

/// True iff no two vertices with a common neighbour share a colour. Throws
/// GraphError for a colouring that is partial, out of range or sized wrongly.
bool verify_injective(const Graph& g, const Coloring& c);

/// Exact injective chromatic number by branch and bound on the conflict graph.
SolveResult injective_chromatic_number(const Graph& g, SolveOptions options = {});

/// Injective colouring with at most k colours, if one exists.
std::optional<Coloring> injective_k_colorable(const Graph& g, std::size_t k);

/// max(max degree, greedy clique in the conflict graph); 1 for edgeless
/// graphs with vertices, 0 for the empty graph.
std::size_t lower_bound(const Graph& g);

/// Degree-descending greedy colouring of the conflict graph.
std::pair<std::size_t, Coloring> greedy_upper_bound(const Graph& g);

} // namespace injcol
