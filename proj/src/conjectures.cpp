#include "injcol/conjectures.hpp"

#include <array>

namespace injcol
{

namespace
{

void require(std::size_t delta, std::size_t min, const char* name)
{
    if (delta < min)
        throw BoundDomainError(std::string(name) + " bound needs max degree >= " + std::to_string(min) + ", got " +
                               std::to_string(delta));
}

constexpr std::array<BoundFn, 4> bounds{{
    {BoundKind::chen, "chen", 3, 0},
    {BoundKind::luzar, "luzar", 1, 0},
    {BoundKind::la_storgel, "la-storgel", 3, 4},
    {BoundKind::girth5, "girth5", 1, 5},
}};

} // namespace

std::size_t chen_bound(std::size_t delta)
{
    require(delta, 3, "chen");
    return (3 * delta + 1) / 2;
}

std::size_t luzar_bound(std::size_t delta)
{
    require(delta, 1, "luzar");
    if (delta <= 3)
        return 5;
    if (delta <= 7)
        return delta + 5;
    return 3 * delta / 2 + 1;
}

std::size_t la_storgel_bound(std::size_t delta)
{
    require(delta, 3, "la-storgel");
    if (delta == 3)
        return 4;
    if (delta <= 5)
        return delta + 2;
    return 3 * delta / 2;
}

std::size_t girth5_bound(std::size_t delta)
{
    require(delta, 1, "girth5");
    return delta + 1;
}

std::size_t BoundFn::operator()(std::size_t delta) const
{
    switch (kind) {
    case BoundKind::chen:
        return chen_bound(delta);
    case BoundKind::luzar:
        return luzar_bound(delta);
    case BoundKind::la_storgel:
        return la_storgel_bound(delta);
    case BoundKind::girth5:
        return girth5_bound(delta);
    }
    throw std::logic_error("unknown bound kind");
}

const BoundFn& bound_fn(BoundKind kind) { return bounds[static_cast<std::size_t>(kind)]; }

const BoundFn& bound_by_name(std::string_view name)
{
    for (const auto& b : bounds)
        if (b.name == name)
            return b;
    throw std::invalid_argument("unknown bound '" + std::string(name) + "' (expected chen, luzar, la-storgel or girth5)");
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::satisfies:
        return "satisfies";
    case Outcome::attains:
        return "attains";
    case Outcome::violates:
        return "violates";
    }
    return "?";
}

Verdict verdict(std::size_t delta, Girth g, const BoundFn& bound, std::size_t chi_i, VerdictMode mode)
{
    if (!bound.girth_in_domain(g))
        throw BoundDomainError(std::string(bound.name) + " bound needs girth >= " + std::to_string(bound.min_girth));
    if (!bound.degree_in_domain(delta)) {
        if (mode == VerdictMode::strict)
            require(delta, bound.min_delta, bound.name.data());
        return {Outcome::satisfies, chi_i, 0, true};
    }
    const auto b = bound(delta);
    Outcome o = chi_i > b ? Outcome::violates : chi_i == b ? Outcome::attains : Outcome::satisfies;
    return {o, chi_i, b, false};
}

Verdict verdict(const Graph& g, const BoundFn& bound, std::size_t chi_i, VerdictMode mode)
{
    return verdict(max_degree(g), girth(g), bound, chi_i, mode);
}

} // namespace injcol
