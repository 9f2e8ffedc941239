#pragma once

#include "injcol/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace injcol
{

using Permutation = std::vector<VertexId>;

struct CanonicalForm {
    /// position[v] is the canonical index of vertex v.
    std::vector<VertexId> position;
    /// graph6 of the canonically relabelled graph; equal iff isomorphic.
    std::string certificate;
    /// orbit[v] is the smallest vertex in v's automorphism orbit.
    std::vector<VertexId> orbit;
    /// Generators of the automorphism group found during the search.
    std::vector<Permutation> generators;
};

/// Canonical labelling by equitable-partition refinement and individualisation,
/// pruned with discovered automorphisms. Requires order() <= 64.
CanonicalForm canonical_form(const Graph& g);

/// As above, but only colour-preserving relabellings are considered; vertices
/// with smaller colours come first.
CanonicalForm canonical_form(const Graph& g, std::span<const std::uint32_t> colours);

std::string canonical_certificate(const Graph& g);

Graph relabel(const Graph& g, std::span<const VertexId> position);

} // namespace injcol
