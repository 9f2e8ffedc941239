#include "injcol/families.hpp"

#include "injcol/codec.hpp"
#include "injcol/metrics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#ifndef INJCOL_DEFAULT_FIXTURE_DIR
#define INJCOL_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace injcol
{

namespace
{

struct Builtin {
    const char* name;
    std::size_t order;
    // 0-indexed edges.
    std::vector<Edge> edges;
    std::map<std::string, VertexId> marks;
};

EdgeList shift_down(std::initializer_list<std::pair<int, int>> one_indexed)
{
    EdgeList out;
    for (auto [a, b] : one_indexed)
        out.push_back({static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1)});
    return out;
}

const std::vector<Builtin>& builtins()
{
    static const std::vector<Builtin> table = [] {
        std::vector<Builtin> t;
        // Planar, order 10, diameter 2, max degree 5, every edge on a triangle.
        t.push_back({"G5_base", 10,
                     shift_down({{2, 8}, {8, 1}, {1, 2}, {2, 5}, {5, 1}, {2, 6}, {6, 3}, {3, 9}, {9, 2}, {6, 9}, {4, 3},
                                 {3, 10}, {10, 4}, {4, 7}, {7, 6}, {6, 5}, {5, 7}, {5, 4}, {8, 10}, {8, 3}, {8, 4}}),
                     {{"u", 1}, {"v", 5}, {"w", 8}}});
        t.push_back({"D4_chi9", 9,
                     {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {1, 6}, {2, 5}, {2, 7},
                      {3, 4}, {3, 6}, {3, 8}, {4, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}},
                     {}});
        t.push_back({"G4_0", 15,
                     shift_down({{15, 4}, {15, 11}, {15, 12}, {15, 3}, {14, 2}, {14, 10}, {14, 13}, {14, 5},
                                 {13, 6}, {13, 8}, {13, 5}, {12, 3}, {12, 9}, {12, 7}, {11, 4}, {11, 8},
                                 {11, 9}, {10, 2}, {10, 7}, {10, 6}, {9, 8}, {9, 7}, {8, 6}, {7, 6},
                                 {5, 1}, {5, 4}, {4, 1}, {3, 1}, {3, 2}, {2, 1}}),
                     {{"v0_0", 13}, {"v1_0", 1}, {"v2_0", 9}}});
        t.push_back({"K_base", 11,
                     {{0, 6}, {0, 8}, {0, 9}, {1, 6}, {1, 8}, {1, 10}, {2, 6}, {2, 9}, {2, 10},
                      {3, 7}, {3, 8}, {3, 9}, {4, 7}, {4, 8}, {4, 10}, {5, 7}, {5, 9}, {5, 10}},
                     {{"u", 6}, {"u1", 1}, {"u2", 2}, {"u3", 0}}});
        t.push_back({"Fig12_G", 18,
                     {{0, 1},   {0, 2},   {0, 3},   {0, 4},   {1, 4},   {1, 5},   {1, 6},   {2, 3},   {2, 6},
                      {2, 7},   {3, 8},   {3, 9},   {4, 10},  {4, 11},  {5, 6},   {5, 11},  {5, 12},  {6, 7},
                      {7, 8},   {7, 13},  {8, 9},   {8, 13},  {9, 10},  {9, 14},  {10, 11}, {10, 14}, {11, 12},
                      {12, 15}, {12, 16}, {13, 16}, {13, 17}, {14, 15}, {14, 17}},
                     {{"p3", 0},  {"d3", 1},  {"d2", 2},  {"p2", 3},  {"p4", 4},  {"v4", 5},
                      {"v3", 6},  {"v2", 7},  {"d1", 8},  {"p1", 9},  {"p5", 10}, {"d4", 11},
                      {"v5", 12}, {"v1", 13}, {"d5", 14}, {"w1", 15}, {"w2", 16}, {"w3", 17}}});
        return t;
    }();
    return table;
}

MarkedGraph from_builtin(const Builtin& b) { return {Graph::from_edges(b.order, b.edges), b.marks}; }

MarkedGraph fig12_gprime()
{
    auto g = from_builtin(builtins()[4]);
    GraphBuilder b(g.graph);
    b.add_edge(g.mark("v1"), g.mark("d5"));
    b.add_edge(g.mark("d5"), g.mark("v5"));
    b.add_edge(g.mark("v1"), g.mark("v5"));
    Graph h = b.build();
    // w1 < w2 < w3 are the last three vertices, so deleting from the top keeps
    // every other index.
    for (const char* w : {"w3", "w2", "w1"})
        h = delete_vertex(h, g.mark(w));
    MarkedGraph out{h, {}};
    for (const auto& [label, v] : g.marks)
        if (label[0] != 'w')
            out.marks[label] = v;
    return out;
}

std::string read_graph6_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FixtureError("cannot open fixture file " + path.string() +
                           " (set INJCOL_FIXTURE_DIR or run `injcol fixtures fetch`)");
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.rfind(graph6_header, 0) == 0)
            line.erase(0, graph6_header.size());
        if (!line.empty())
            return line;
    }
    throw FixtureError("fixture file " + path.string() + " holds no graph");
}

} // namespace

MarkedGraph load_fixture(const FixtureInfo& info, const std::filesystem::path& dir)
{
    const auto text = read_graph6_file(dir / info.file);
    if (!info.checksum.empty() && graph6_checksum(text) != info.checksum)
        throw FixtureError("fixture " + info.name + ": checksum mismatch in " + info.file);
    MarkedGraph out{parse_graph6(text), info.marks};
    if (out.graph.order() != info.order || out.graph.size() != info.size || max_degree(out.graph) != info.max_degree)
        throw FixtureError("fixture " + info.name + ": order, size or max degree differs from the manifest");
    for (const auto& [label, v] : out.marks)
        if (v >= out.graph.order())
            throw FixtureError("fixture " + info.name + ": mark " + label + " out of range");
    return out;
}

VertexId MarkedGraph::mark(std::string_view label) const
{
    auto it = marks.find(std::string(label));
    if (it == marks.end())
        throw FamilyError("graph has no vertex marked '" + std::string(label) + "'");
    return it->second;
}

std::filesystem::path fixture_dir()
{
    if (const char* env = std::getenv("INJCOL_FIXTURE_DIR"); env && *env)
        return env;
    return INJCOL_DEFAULT_FIXTURE_DIR;
}

std::string graph6_checksum(std::string_view graph6)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : graph6) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::vector<FixtureInfo> fixture_manifest() { return fixture_manifest(fixture_dir()); }

std::vector<FixtureInfo> fixture_manifest(const std::filesystem::path& dir)
{
    const auto path = dir / "manifest.json";
    std::ifstream in(path);
    if (!in)
        throw FixtureError("cannot open fixture manifest " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture manifest " + path.string() + ": " + e.what());
    }
    std::vector<FixtureInfo> out;
    try {
        for (const auto& j : doc.at("fixtures")) {
            FixtureInfo f;
            f.name = j.at("name").get<std::string>();
            f.source = j.at("source").get<std::string>();
            if (j.contains("hog_id") && !j.at("hog_id").is_null())
                f.hog_id = j.at("hog_id").get<std::uint64_t>();
            f.file = j.value("file", "");
            f.order = j.at("order").get<std::size_t>();
            f.size = j.at("size").get<std::size_t>();
            f.max_degree = j.at("max_degree").get<std::size_t>();
            f.chi_i = j.at("chi_i").get<std::size_t>();
            if (j.contains("marks"))
                f.marks = j.at("marks").get<std::map<std::string, VertexId>>();
            f.checksum = j.value("checksum", "");
            out.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture manifest " + path.string() + ": " + e.what());
    }
    return out;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names;
    for (const auto& b : builtins())
        names.emplace_back(b.name);
    names.emplace_back("Fig12_Gprime");
    try {
        for (const auto& f : fixture_manifest())
            if (!f.file.empty() && std::find(names.begin(), names.end(), f.name) == names.end())
                names.push_back(f.name);
    } catch (const FixtureError&) {
        // Built-in graphs remain available without a fixture directory.
    }
    return names;
}

std::optional<MarkedGraph> builtin_fixture(std::string_view name)
{
    for (const auto& b : builtins())
        if (name == b.name)
            return from_builtin(b);
    if (name == "Fig12_Gprime")
        return fig12_gprime();
    return std::nullopt;
}

MarkedGraph fixture(std::string_view name)
{
    if (auto b = builtin_fixture(name))
        return *b;
    const auto dir = fixture_dir();
    for (const auto& f : fixture_manifest(dir))
        if (f.name == name && !f.file.empty())
            return load_fixture(f, dir);
    throw FamilyError("unknown fixture '" + std::string(name) + "'");
}

MarkedGraph family_g4(std::size_t i)
{
    auto g = fixture("G4_0");
    VertexId t[3] = {g.mark("v0_0"), g.mark("v1_0"), g.mark("v2_0")};
    GraphBuilder b(g.graph);
    for (std::size_t round = 1; round <= i; ++round) {
        VertexId s[3];
        for (auto& x : s)
            x = b.add_vertex();
        b.remove_edge(t[0], t[1]);
        b.remove_edge(t[1], t[2]);
        b.remove_edge(t[2], t[0]);
        b.add_edge(s[0], s[1]);
        b.add_edge(s[1], s[2]);
        b.add_edge(s[2], s[0]);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (j != k)
                    b.add_edge(s[j], t[k]);
        for (int j = 0; j < 3; ++j) {
            g.marks["v" + std::to_string(j) + "_" + std::to_string(round)] = s[j];
            t[j] = s[j];
        }
    }
    g.graph = b.build();
    for (int j = 0; j < 3; ++j)
        g.marks["v" + std::to_string(j)] = t[j];
    return g;
}

MarkedGraph h_family(const MarkedGraph& base, std::size_t steps)
{
    VertexId v0 = base.mark("u"), v1 = base.mark("v"), v2 = base.mark("w");
    const Graph& g0 = base.graph;
    if (!g0.adjacent(v0, v1) || !g0.adjacent(v1, v2) || !g0.adjacent(v0, v2))
        throw FamilyError("marked vertices u, v, w do not form a triangle");
    GraphBuilder b(g0);
    VertexId half = 0;
    for (std::size_t s = 1; s <= steps; ++s) {
        if (s % 2 == 1) {
            half = b.add_vertex();
            b.remove_edge(v0, v1);
            b.add_edge(v0, half);
            b.add_edge(half, v1);
            b.add_edge(v2, half);
        } else {
            const auto x = b.add_vertex();
            b.remove_edge(half, v1);
            b.add_edge(half, x);
            b.add_edge(x, v1);
            b.add_edge(v2, x);
            v0 = v2;
            v1 = x;
            v2 = half;
        }
    }
    MarkedGraph out{b.build(), base.marks};
    out.marks["v0"] = v0;
    out.marks["v1"] = v1;
    out.marks["v2"] = v2;
    return out;
}

std::optional<MarkedTriangle> find_h_triangle(const Graph& g)
{
    const auto n = g.order();
    const auto delta = max_degree(g);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
            if (!g.adjacent(u, v))
                continue;
            for (VertexId w = 0; w < n; ++w) {
                if (!g.adjacent(u, w) || !g.adjacent(v, w))
                    continue;
                const auto dw = g.degree(w);
                if (dw + 2 > delta || dw + 4 > n)
                    continue;
                VertexSet s(n);
                s.insert(u);
                s.insert(v);
                s.insert(w);
                if (closed_neighborhood(g, s).count() + 2 > n)
                    continue;
                Graph rest = g;
                for (VertexId x : {std::max({u, v, w}), u + v + w - std::max({u, v, w}) - std::min({u, v, w}),
                                   std::min({u, v, w})})
                    rest = delete_vertex(rest, x);
                if (!is_connected(rest))
                    continue;
                const auto pairs = unique_length2_path_pairs_through(g, {u, v});
                const std::pair<VertexId, VertexId> uw{std::min(u, w), std::max(u, w)};
                if (std::all_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p == uw; }))
                    return MarkedTriangle{u, v, w};
            }
        }
    return std::nullopt;
}

MarkedGraph ls_base(std::size_t delta)
{
    if (delta < 8)
        throw FamilyError("ls_base needs max degree at least 8, got " + std::to_string(delta));
    const auto name = "LS" + std::to_string(delta) + "_base";
    try {
        return fixture(name);
    } catch (const FamilyError&) {
        throw FixtureError("no base graph fixture for max degree " + std::to_string(delta) + " (expected '" + name +
                           "' in " + fixture_dir().string() + "/manifest.json)");
    }
}

MarkedGraph cubic_family(std::size_t n)
{
    if (n < 3 || n % 2 == 0)
        throw FamilyError("cubic family needs odd n >= 3, got " + std::to_string(n));
    const auto order = 4 * n + 2;
    auto id = [](std::size_t i, std::size_t j) { return static_cast<VertexId>(i == 0 ? j : 2 + 4 * (i - 1) + j); };
    auto v2 = [&](std::size_t i) { return i == 0 ? id(0, 1) : id(i, 2); };
    auto v3 = [&](std::size_t i) { return i == 0 ? id(0, 1) : id(i, 3); };
    EdgeList es{{id(0, 0), id(0, 1)}};
    for (std::size_t i = 1; i <= n; ++i) {
        es.push_back({id(i, 1), id(i, 0)});
        es.push_back({id(i, 1), id(i, 2)});
        es.push_back({id(i, 1), id(i, 3)});
        es.push_back({id(i, 2), id(i, 3)});
    }
    for (std::size_t i = 0; i <= n; ++i) {
        const auto next = (i + 1) % (n + 1);
        es.push_back({id(i, 0), v2(next)});
        es.push_back({v3(i), id(next, 0)});
    }
    MarkedGraph out{Graph::from_edges(order, es), {}};
    out.marks["v0_0"] = id(0, 0);
    out.marks["v1_0"] = id(0, 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out.marks["v" + std::to_string(j) + "_" + std::to_string(i)] = id(i, j);
    return out;
}

Graph shannon_subdivided(std::size_t delta, std::size_t extensions)
{
    if (delta < 3)
        throw FamilyError("shannon_subdivided needs max degree at least 3, got " + std::to_string(delta));
    GraphBuilder b(3);
    const VertexId a = 0, bb = 1, c = 2;
    std::vector<VertexId> ab, bc;
    auto strand = [&](VertexId x, VertexId y) {
        const auto s = b.add_vertex();
        b.add_edge(x, s);
        b.add_edge(s, y);
        return s;
    };
    for (std::size_t k = 0; k < (delta + 1) / 2; ++k)
        ab.push_back(strand(a, bb));
    for (std::size_t k = 0; k < delta / 2; ++k)
        bc.push_back(strand(bb, c));
    for (std::size_t k = 0; k < delta / 2; ++k)
        strand(c, a);

    VertexId x = ab.front(), y = bc.front();
    for (std::size_t e = 0; e < extensions; ++e) {
        const auto p = b.add_vertex();
        const auto q = b.add_vertex();
        b.add_edge(x, p);
        b.add_edge(p, q);
        b.add_edge(q, y);
        x = p;
        y = q;
    }
    return b.build();
}

MarkedGraph k_family(std::size_t steps)
{
    auto g = fixture("K_base");
    VertexId u = g.mark("u"), u1 = g.mark("u1"), u2 = g.mark("u2"), u3 = g.mark("u3");
    GraphBuilder b(g.graph);
    for (std::size_t s = 0; s < steps; ++s) {
        const auto v1 = b.add_vertex();
        const auto v2 = b.add_vertex();
        const auto v3 = b.add_vertex();
        b.add_edge(v1, v3);
        b.add_edge(v2, v3);
        b.add_edge(v1, u1);
        b.add_edge(v1, u3);
        b.add_edge(v2, u2);
        b.add_edge(v2, u3);
        b.add_edge(v3, u);
        b.remove_edge(u, u3);
        u3 = u;
        u2 = v1;
        u1 = v2;
        u = v3;
    }
    g.graph = b.build();
    g.marks = {{"u", u}, {"u1", u1}, {"u2", u2}, {"u3", u3}};
    return g;
}

Graph prism(std::size_t k)
{
    if (k < 3)
        throw FamilyError("prism needs k >= 3, got " + std::to_string(k));
    EdgeList es;
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = (i + 1) % k;
        es.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
        es.push_back({static_cast<VertexId>(k + i), static_cast<VertexId>(k + j)});
        es.push_back({static_cast<VertexId>(i), static_cast<VertexId>(k + i)});
    }
    return Graph::from_edges(2 * k, es);
}

Graph gen_dodecahedron(std::size_t r)
{
    if (r < 3)
        throw FamilyError("generalised dodecahedron needs r >= 3, got " + std::to_string(r));
    auto u = [&](std::size_t i) { return static_cast<VertexId>(i % r); };
    auto v = [&](std::size_t i) { return static_cast<VertexId>(r + i % r); };
    auto up = [&](std::size_t i) { return static_cast<VertexId>(2 * r + i % r); };
    auto vp = [&](std::size_t i) { return static_cast<VertexId>(3 * r + i % r); };
    EdgeList es;
    for (std::size_t i = 0; i < r; ++i) {
        es.push_back({u(i), u(i + 1)});
        es.push_back({v(i), v(i + 1)});
        es.push_back({u(i), up(i)});
        es.push_back({v(i), vp(i)});
        es.push_back({vp(i), up(i)});
        es.push_back({up(i), vp(i + 1)});
    }
    return Graph::from_edges(4 * r, es);
}

} // namespace injcol
