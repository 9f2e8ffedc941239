#pragma once

#include "injcol/graph.hpp"
#include "injcol/metrics.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace injcol
{

class BoundDomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// ceil(3 * delta / 2); requires delta >= 3.
std::size_t chen_bound(std::size_t delta);
/// 5 for delta <= 3, delta + 5 for 4..7, floor(3 * delta / 2) + 1 from 8 on;
/// requires delta >= 1.
std::size_t luzar_bound(std::size_t delta);
/// 4 for delta = 3, delta + 2 for 4..5, floor(3 * delta / 2) from 6 on;
/// requires delta >= 3. Stated for girth at least 4.
std::size_t la_storgel_bound(std::size_t delta);
/// delta + 1; requires delta >= 1. Stated for girth at least 5.
std::size_t girth5_bound(std::size_t delta);

enum class BoundKind { chen, luzar, la_storgel, girth5 };

struct BoundFn {
    BoundKind kind;
    std::string_view name;
    std::size_t min_delta;
    std::size_t min_girth;

    bool degree_in_domain(std::size_t delta) const { return delta >= min_delta; }
    bool girth_in_domain(Girth g) const { return g >= Length(min_girth); }
    bool applies(std::size_t delta, Girth g) const { return degree_in_domain(delta) && girth_in_domain(g); }
    std::size_t operator()(std::size_t delta) const;
};

const BoundFn& bound_fn(BoundKind kind);
/// Accepts "chen", "luzar", "la-storgel" and "girth5"; throws
/// std::invalid_argument otherwise.
const BoundFn& bound_by_name(std::string_view name);

enum class Outcome { satisfies, attains, violates };

std::string_view to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::satisfies;
    std::size_t chi_i = 0;
    /// Bound value; 0 when the verdict is vacuous.
    std::size_t bound = 0;
    /// Max degree below the bound's domain, reported as satisfied.
    bool vacuous = false;
};

enum class VerdictMode {
    /// Max degree below the domain gives a vacuous Satisfies.
    stream,
    /// Max degree below the domain is an error.
    strict
};

/// Compares chi_i with the bound at (delta, girth). A girth below the bound's
/// requirement is always an error.
Verdict verdict(std::size_t delta, Girth g, const BoundFn& bound, std::size_t chi_i,
                VerdictMode mode = VerdictMode::stream);
Verdict verdict(const Graph& g, const BoundFn& bound, std::size_t chi_i, VerdictMode mode = VerdictMode::stream);

} // namespace injcol
