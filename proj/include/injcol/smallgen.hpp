#pragma once

#include "injcol/canonical.hpp"
#include "injcol/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace injcol
{

inline constexpr std::size_t smallgen_default_max_order = 11;

struct GenSpec {
    std::size_t order = 1;
    std::size_t min_degree = 0;
    std::optional<std::size_t> max_edges;
    bool connected = true;

    // Hereditary restrictions, applied at every level of the search tree.
    std::optional<std::size_t> max_degree;
    bool planar = false;

    /// Work split: only this part of `parts` at the split level is explored.
    std::size_t part = 0;
    std::size_t parts = 1;

    /// Lifts the desk-scale order ceiling.
    bool allow_large = false;
};

class GenSpecError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct GenStats {
    std::uint64_t emitted = 0;
    std::uint64_t candidates = 0;
    std::uint64_t canonical_calls = 0;
};

/// Isomorph-free generation by canonical vertex augmentation: a graph on k+1
/// vertices is accepted iff the new vertex lies in the automorphism orbit of
/// the canonical deletion vertex (minimum-invariant non-cut vertex, ties
/// resolved by canonical labelling) and its neighbourhood is minimal in its
/// orbit under the parent's automorphism group. Each isomorphism class
/// meeting the spec is visited exactly once.
GenStats generate(const GenSpec& spec, const std::function<void(const Graph&)>& visit);

std::vector<Graph> generate_all(const GenSpec& spec);

/// Connected graphs with minimum degree 2, at most 3n-6 edges, that are planar.
GenStats generate_planar_candidates(std::size_t n, const std::function<void(const Graph&)>& visit,
                                    std::size_t part = 0, std::size_t parts = 1);

} // namespace injcol
