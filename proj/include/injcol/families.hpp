#pragma once

#include "injcol/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace injcol
{

/// A graph with named vertices, e.g. the triangle u, v, w of a base graph.
struct MarkedGraph {
    Graph graph;
    std::map<std::string, VertexId> marks;

    /// Throws FamilyError for an unknown label.
    VertexId mark(std::string_view label) const;
    bool has_mark(std::string_view label) const { return marks.find(std::string(label)) != marks.end(); }
};

class FamilyError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class FixtureError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct FixtureInfo {
    std::string name;
    /// "transcribed", "transcribed-variant", "search-substitute" or "hog".
    std::string source;
    std::optional<std::uint64_t> hog_id;
    /// graph6 file relative to the fixture directory; empty for graphs built
    /// into the library.
    std::string file;
    std::size_t order = 0;
    std::size_t size = 0;
    std::size_t max_degree = 0;
    std::size_t chi_i = 0;
    std::map<std::string, VertexId> marks;
    /// "fnv1a64:<hex>" of the graph6 line.
    std::string checksum;
};

/// $INJCOL_FIXTURE_DIR if set, otherwise the fixtures directory of the source tree.
std::filesystem::path fixture_dir();

/// Entries of <fixture_dir>/manifest.json.
std::vector<FixtureInfo> fixture_manifest();
std::vector<FixtureInfo> fixture_manifest(const std::filesystem::path& dir);

std::string graph6_checksum(std::string_view graph6);

/// Reads and checks (checksum, order, size, max degree, marks) the graph6
/// file of a manifest entry.
MarkedGraph load_fixture(const FixtureInfo& info, const std::filesystem::path& dir);

/// Graphs transcribed into the library, independent of any fixture directory.
std::optional<MarkedGraph> builtin_fixture(std::string_view name);

/// Names accepted by fixture().
std::vector<std::string> fixture_names();

/// Built-in transcribed graphs:
///   G5_base      order 10, max degree 5, marks u v w
///   D4_chi9      order 9, max degree 4, chi_i 9
///   G4_0         order 15, marks v0_0 v1_0 v2_0
///   K_base       order 11, marks u u1 u2 u3
///   Fig12_G      order 18, vertex labels p1..p5 d1..d5 v1..v5 w1..w3
///   Fig12_Gprime Fig12_G plus v1d5, d5v5, v1v5, minus w1, w2, w3
/// and graph6-backed ones read from the fixture directory (G6_base, G7_base,
/// LS8_base, LS9_base).
MarkedGraph fixture(std::string_view name);

/// G4_i: G4_0 with i rounds of outer-triangle replacement. Marks the latest
/// triangle as v0, v1, v2 and every triangle as v<j>_<round>.
MarkedGraph family_g4(std::size_t i);

/// The member of H(base; uv; w) after `steps` half-steps. Odd steps are the
/// primed graphs with one extra subdivision vertex. Marks v0, v1, v2 follow
/// the current triangle.
MarkedGraph h_family(const MarkedGraph& base, std::size_t steps);

struct MarkedTriangle {
    VertexId u, v, w;
};

/// First triangle (u, v, w) in lexicographic order meeting the conditions of
/// the H construction: deg w <= max degree - 2 and <= n - 4,
/// |N[{u, v, w}]| <= n - 2, g - {u, v, w} connected (facial when g is
/// 3-connected and planar), and no pair other than {u, w} joined by a unique
/// path of length two through uv.
std::optional<MarkedTriangle> find_h_triangle(const Graph& g);

/// Diameter-2 planar base for delta >= 8 with marks u, v, w; delta 8 and 9
/// are shipped as fixtures.
MarkedGraph ls_base(std::size_t delta);

/// Cubic planar graph on 4n + 2 vertices, n odd and at least 3. Marks
/// v<j>_<i> for every vertex.
MarkedGraph cubic_family(std::size_t n);

/// Corners a, b, c joined by ceil(delta/2), floor(delta/2) and floor(delta/2)
/// paths of length two; each extension joins two degree-2 vertices by a new
/// path of length three.
Graph shannon_subdivided(std::size_t delta, std::size_t extensions);

/// K(G; u; u1, u2, u3) on the K_base fixture after `steps` iterations.
MarkedGraph k_family(std::size_t steps);

/// Two k-cycles u_i, v_i (vertices i and k + i) joined by edges u_i v_i.
Graph prism(std::size_t k);

/// D_r on 4r vertices: u_i = i, v_i = r + i, u'_i = 2r + i, v'_i = 3r + i.
Graph gen_dodecahedron(std::size_t r);

} // namespace injcol
