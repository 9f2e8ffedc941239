#pragma once

#include "injcol/graph.hpp"
#include "injcol/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace injcol
{

struct ChromaResult {
    std::size_t chi = 0;
    /// Proper colouring with `chi` colours.
    Coloring witness;
    bool exact = true;
};

/// Exact chromatic number by iterative deepening on k with a static
/// max-cardinality vertex order. Independent of the injective solver.
ChromaResult chromatic_number(const Graph& g, std::optional<std::uint64_t> node_budget = std::nullopt);

/// chi(G^(2)), which equals the injective chromatic number of g.
std::size_t injective_via_oracle(const Graph& g);

bool is_proper(const Graph& g, const Coloring& c);

} // namespace injcol
