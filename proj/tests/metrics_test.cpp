#include "injcol/families.hpp"
#include "injcol/graph.hpp"
#include "injcol/metrics.hpp"
#include "injcol/smallgen.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace injcol;

namespace
{

Graph complete(std::size_t n)
{
    GraphBuilder b(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph cycle(std::size_t n)
{
    GraphBuilder b(n);
    for (VertexId i = 0; i < n; ++i)
        b.add_edge(i, static_cast<VertexId>((i + 1) % n));
    return b.build();
}

Graph k33()
{
    GraphBuilder b(6);
    for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = 3; v < 6; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph star(std::size_t leaves)
{
    GraphBuilder b(leaves + 1);
    for (VertexId v = 1; v <= leaves; ++v)
        b.add_edge(0, v);
    return b.build();
}

} // namespace

TEST_CASE("conflict graph small cases")
{
    auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(conflict_graph(p3).conflicts.edges() == EdgeList{{0, 2}});
    CHECK(conflict_graph(complete(3)).conflicts == complete(3));
    auto c = conflict_graph(star(4)).conflicts;
    CHECK(c.degree(0) == 0);
    CHECK(c.size() == 6);
}

TEST_CASE("conflict graph agrees with triple enumeration on all graphs up to 7 vertices")
{
    for (std::size_t n = 1; n <= 7; ++n) {
        GenSpec spec;
        spec.order = n;
        spec.connected = false;
        generate(spec, [&](const Graph& g) {
            auto c = conflict_graph(g).conflicts;
            auto ref = oracle::conflicts(g);
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = 0; v < n; ++v)
                    REQUIRE(c.adjacent(u, v) == ref[u][v]);
        });
    }
}

TEST_CASE("girth and diameter")
{
    CHECK(girth(prism(5)) == Length(4));
    CHECK(girth(prism(3)) == Length(3));
    CHECK(girth(gen_dodecahedron(5)) == Length(5));
    CHECK(girth(star(4)).is_infinite());
    CHECK(diameter(complete(4)) == Length(1));
    CHECK(diameter(Graph::from_edges(4, {{0, 1}, {2, 3}})).is_infinite());
    CHECK(diameter(fixture("G5_base").graph) == Length(2));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 9;
        auto g = oracle::random_graph(rng, n, 0.3);
        auto gi = girth(g);
        auto ref = oracle::shortest_cycle(g);
        if (ref == 0) {
            CHECK(gi.is_infinite());
        } else {
            CHECK(gi == Length(ref));
            CHECK(gi.value() >= 3);
        }
        CHECK(gi.is_finite() == (g.size() + component_count(g) >= g.order() + 1));
        auto d = oracle::diameter(g);
        if (d == SIZE_MAX)
            CHECK(diameter(g).is_infinite());
        else
            CHECK(diameter(g) == Length(d));
    }
}

TEST_CASE("connectivity small cases")
{
    CHECK(vertex_connectivity_at_least(complete(4), 3));
    CHECK_FALSE(vertex_connectivity_at_least(complete(4), 4));
    CHECK(vertex_connectivity_at_least(prism(7), 3));
    CHECK_FALSE(vertex_connectivity_at_least(Graph::from_edges(3, {{0, 1}, {1, 2}}), 2));
    CHECK(cut_vertices(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == std::vector<VertexId>{1, 2});
}

TEST_CASE("connectivity agrees with brute-force vertex deletion")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + rng() % 9;
        std::uniform_real_distribution<double> p(0.2, 0.9);
        auto g = oracle::random_graph(rng, n, p(rng));
        CHECK(is_connected(g) == oracle::connected(g));
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(vertex_connectivity_at_least(g, k) == oracle::k_connected(g, k));
    }
    // exhaustively on a few orders
    for (std::size_t n = 2; n <= 6; ++n) {
        GenSpec spec;
        spec.order = n;
        generate(spec, [&](const Graph& g) {
            for (std::size_t k = 2; k <= 4; ++k)
                REQUIRE(vertex_connectivity_at_least(g, k) == oracle::k_connected(g, k));
            const auto cuts = cut_vertices(g);
            for (VertexId v = 0; v < n; ++v) {
                const bool is_cut = std::find(cuts.begin(), cuts.end(), v) != cuts.end();
                REQUIRE(is_cut == !oracle::connected(delete_vertex(g, v)));
            }
        });
    }
}

TEST_CASE("every edge on a triangle")
{
    CHECK(every_edge_on_triangle(complete(4)));
    CHECK_FALSE(every_edge_on_triangle(cycle(4)));
    CHECK(every_edge_on_triangle(fixture("G5_base").graph));
}

TEST_CASE("planarity small cases")
{
    CHECK(is_planar(complete(4)));
    CHECK_FALSE(is_planar(complete(5)));
    CHECK_FALSE(is_planar(k33()));
    CHECK(is_planar(gen_dodecahedron(7)));
    // Petersen graph
    auto petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    CHECK_FALSE(is_planar(petersen));
}

TEST_CASE("planarity agrees with minor search on all connected graphs up to 7 vertices")
{
    for (std::size_t n = 1; n <= 7; ++n) {
        GenSpec spec;
        spec.order = n;
        generate(spec, [&](const Graph& g) {
            const bool p = is_planar(g);
            REQUIRE(p == oracle::planar(g));
            if (n >= 3 && g.size() > 3 * n - 6)
                REQUIRE_FALSE(p);
        });
    }
}

TEST_CASE("planarity agrees with minor search on random 8-vertex graphs")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> p(0.3, 0.8);
    for (int t = 0; t < 600; ++t) {
        auto g = oracle::random_graph(rng, 8, p(rng));
        REQUIRE(is_planar(g) == oracle::planar(g));
    }
}

TEST_CASE("planarity on larger graphs")
{
    // Adding any non-edge to a maximal planar graph breaks planarity.
    for (const auto& name : {"G5_base", "G6_base", "G7_base", "LS8_base"}) {
        auto g = fixture(name).graph;
        REQUIRE(is_planar(g));
        if (g.size() != 3 * g.order() - 6)
            continue;
        for (VertexId u = 0; u < g.order(); ++u)
            for (VertexId v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v))
                    CHECK_FALSE(is_planar(add_edge(g, {u, v})));
    }
    // Subdividing K5 or K3,3 keeps them non-planar.
    auto k5 = subdivide_edge(subdivide_edge(complete(5), {0, 1}).first, {2, 3}).first;
    CHECK_FALSE(is_planar(k5));
    CHECK_FALSE(is_planar(subdivide_edge(k33(), {0, 3}).first));
    CHECK(is_planar(prism(40)));
}

TEST_CASE("unique length-2 path pairs")
{
    // Each diagonal of C4 has two length-2 paths, so nothing is unique.
    CHECK(unique_length2_path_pairs_through(cycle(4), {0, 1}).empty());
    // In P3 the end pair is joined only through the middle.
    auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(unique_length2_path_pairs_through(p3, {0, 1}) ==
          std::vector<std::pair<VertexId, VertexId>>{{0, 2}});

    auto g5 = fixture("G5_base");
    const auto u = g5.mark("u"), v = g5.mark("v"), w = g5.mark("w");
    CHECK(unique_length2_path_pairs_through(g5.graph, {std::min(u, v), std::max(u, v)}) ==
          std::vector<std::pair<VertexId, VertexId>>{{std::min(u, w), std::max(u, w)}});

    auto g6 = fixture("G6_base");
    CHECK(unique_length2_path_pairs_through(g6.graph, {std::min(g6.mark("u"), g6.mark("v")),
                                                       std::max(g6.mark("u"), g6.mark("v"))})
              .empty());
}
