#include "injcol/conjectures.hpp"
#include "injcol/families.hpp"
#include "injcol/solver.hpp"

#include <doctest.h>

using namespace injcol;

TEST_CASE("bound formulas")
{
    CHECK(chen_bound(5) == 8);
    CHECK(chen_bound(4) == 6);
    CHECK(chen_bound(8) == 12);
    CHECK(luzar_bound(3) == 5);
    CHECK(luzar_bound(6) == 11);
    CHECK(luzar_bound(8) == 13);
    CHECK(la_storgel_bound(3) == 4);
    CHECK(la_storgel_bound(5) == 7);
    CHECK(la_storgel_bound(6) == 9);
    CHECK(girth5_bound(3) == 4);
    CHECK(girth5_bound(7) == 8);
    CHECK(girth5_bound(1) == 2);
    CHECK_THROWS_AS(chen_bound(2), BoundDomainError);
    CHECK_THROWS_AS(la_storgel_bound(2), BoundDomainError);
    CHECK_THROWS_AS(luzar_bound(0), BoundDomainError);
}

TEST_CASE("relations between the bounds")
{
    for (std::size_t d = 4; d <= 7; ++d)
        CHECK(luzar_bound(d) + 1 >= chen_bound(d));
    for (std::size_t d = 8; d <= 100; ++d) {
        if (d % 2 == 0)
            CHECK(luzar_bound(d) == chen_bound(d) + 1);
        else
            CHECK(luzar_bound(d) == chen_bound(d));
    }
    for (std::size_t d = 3; d <= 100; ++d) {
        CHECK(la_storgel_bound(d) <= 3 * d / 2);
        if (d >= 6)
            CHECK(la_storgel_bound(d) == 3 * d / 2);
    }
}

TEST_CASE("bound lookup")
{
    CHECK(bound_by_name("la-storgel").kind == BoundKind::la_storgel);
    CHECK(bound_fn(BoundKind::girth5).min_girth == 5);
    CHECK(bound_fn(BoundKind::la_storgel).min_girth == 4);
    CHECK(bound_fn(BoundKind::luzar)(8) == 13);
    CHECK_THROWS_AS(bound_by_name("nope"), std::invalid_argument);
}

TEST_CASE("verdicts on fixtures")
{
    auto d4 = fixture("D4_chi9").graph;
    const auto chi = injective_chromatic_number(d4).chi_i;
    auto v = verdict(d4, bound_fn(BoundKind::luzar), chi);
    CHECK(v.outcome == Outcome::attains);
    CHECK(v.bound == 9);
    auto c = verdict(d4, bound_fn(BoundKind::chen), chi);
    CHECK(c.outcome == Outcome::violates);
    CHECK(c.bound == 6);

    GraphBuilder b(4);
    for (VertexId x = 0; x < 4; ++x)
        for (VertexId y = x + 1; y < 4; ++y)
            b.add_edge(x, y);
    auto k4 = b.build();
    auto s = verdict(k4, bound_fn(BoundKind::chen), injective_chromatic_number(k4).chi_i);
    CHECK(s.outcome == Outcome::satisfies);
    CHECK(s.bound == 5);
}

TEST_CASE("verdict outcomes are exhaustive and exclusive")
{
    const auto& fn = bound_fn(BoundKind::luzar);
    for (std::size_t d = 1; d <= 12; ++d)
        for (std::size_t chi = 0; chi <= 25; ++chi) {
            auto v = verdict(d, Girth(3), fn, chi);
            const auto b = fn(d);
            CHECK((v.outcome == Outcome::attains) == (chi == b));
            CHECK((v.outcome == Outcome::violates) == (chi > b));
            CHECK((v.outcome == Outcome::satisfies) == (chi < b));
        }
}

TEST_CASE("domains")
{
    const auto& chen = bound_fn(BoundKind::chen);
    auto v = verdict(2, Girth(3), chen, 2);
    CHECK(v.vacuous);
    CHECK(v.outcome == Outcome::satisfies);
    CHECK_THROWS_AS(verdict(2, Girth(3), chen, 2, VerdictMode::strict), BoundDomainError);
    // Girth requirements are never waived.
    CHECK_THROWS_AS(verdict(4, Girth(3), bound_fn(BoundKind::la_storgel), 5), BoundDomainError);
    CHECK_THROWS_AS(verdict(4, Girth(4), bound_fn(BoundKind::girth5), 5), BoundDomainError);
    CHECK(verdict(4, Girth::infinite(), bound_fn(BoundKind::girth5), 5).outcome == Outcome::attains);
    CHECK(to_string(Outcome::violates) == "violates");
}
