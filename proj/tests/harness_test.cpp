#include "injcol/codec.hpp"
#include "injcol/families.hpp"
#include "injcol/harness.hpp"
#include "injcol/solver.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

using namespace injcol;
namespace fs = std::filesystem;

namespace
{

fs::path scratch_dir(const std::string& name)
{
    auto dir = fs::temp_directory_path() / ("injcol_harness_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunResult run_on(const std::vector<Graph>& graphs, RunConfig config)
{
    return run_check(config, [&](const std::function<void(StreamItem)>& sink) {
        for (const auto& g : graphs)
            sink(StreamItem{g, {}, 0});
    });
}

} // namespace

TEST_CASE("attainment table rendering")
{
    AttainmentTable empty;
    CHECK(table_to_csv(empty) == "n\n");
    AttainmentTable t;
    t.add(9, 3);
    CHECK(table_to_csv(t) == "n,delta=3\n9,1\n");
    t.add(10, 5);
    t.add(10, 3, 3);
    CHECK(table_to_csv(t) == "n,delta=3,delta=5\n9,1,0\n10,3,1\n");
    CHECK(table_from_json(table_to_json(t)) == t);
    CHECK(table_from_json(table_to_json(empty)) == empty);
    CHECK(t.total() == 5);
    CHECK_THROWS_AS(table_from_json("{"), HarnessError);
}

TEST_CASE("table merge is commutative")
{
    AttainmentTable a, b;
    a.add(5, 3, 2);
    a.add(6, 4);
    b.add(6, 4, 3);
    b.add(7, 3);
    auto ab = a;
    ab.merge(b);
    auto ba = b;
    ba.merge(a);
    CHECK(ab == ba);
    CHECK(ab.at(6, 4) == 4);
}

TEST_CASE("violation records round-trip and re-verify")
{
    auto d4 = fixture("D4_chi9").graph;
    auto r = injective_chromatic_number(d4);
    ViolationRecord v{write_graph6(d4), d4.order(), 4, girth(d4), r.chi_i, 6, "chen", r.witness.colour};
    auto back = violation_from_json(to_json_line(v));
    CHECK(back.graph6 == v.graph6);
    CHECK(back.girth == v.girth);
    CHECK(back.witness == v.witness);
    CHECK(reverify(back));
    back.bound = 9;
    CHECK_FALSE(reverify(back));
    CHECK_THROWS_AS(violation_from_json("{\"graph6\": 1}"), HarnessError);
}

TEST_CASE("prisms under the girth-4 bound")
{
    RunConfig config;
    config.input = FamilyInput{{"prism:3..12"}};
    config.bound = BoundKind::la_storgel;
    auto r = run_check(config);
    CHECK(r.summary.read == 10);
    CHECK(r.summary.filtered == 1); // the triangle prism
    CHECK(r.summary.violates == 0);
    CHECK(r.summary.attains == 6);
    AttainmentTable expected;
    for (std::size_t k : {4, 5, 7, 8, 10, 11})
        expected.add(2 * k, 3);
    CHECK(r.table == expected);
}

TEST_CASE("violations are written as they are found and re-verify")
{
    auto dir = scratch_dir("violations");
    RunConfig config;
    config.input = FamilyInput{{"fixture:D4_chi9", "fixture:G5_base", "prism:4"}};
    config.bound = BoundKind::chen;
    config.violations_path = dir / "v.jsonl";
    auto r = run_check(config);
    CHECK(r.summary.violates == 2);
    std::ifstream in(dir / "v.jsonl");
    std::vector<ViolationRecord> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(violation_from_json(line));
    REQUIRE(lines.size() == 2);
    for (const auto& v : lines) {
        CHECK(reverify(v));
        CHECK(v.chi_i > v.bound);
        CHECK(v.bound_name == "chen");
    }
    CHECK(lines[0].graph6 == write_graph6(fixture("D4_chi9").graph));
    fs::remove_all(dir);
}

TEST_CASE("results do not depend on worker count or chunking")
{
    std::mt19937_64 rng(61);
    std::vector<Graph> graphs;
    std::uniform_real_distribution<double> p(0.2, 0.6);
    for (int i = 0; i < 1500; ++i)
        graphs.push_back(oracle::random_graph(rng, 4 + rng() % 8, p(rng)));
    RunConfig base;
    base.bound = BoundKind::chen;
    base.workers = 1;
    const auto ref = run_on(graphs, base);
    CHECK(ref.summary.attains > 0);
    for (std::size_t workers : {2, 4, 8}) {
        for (std::size_t chunk : {1, 7, 256}) {
            auto c = base;
            c.workers = workers;
            c.chunk_size = chunk;
            auto r = run_on(graphs, c);
            CHECK(r.table == ref.table);
            CHECK(r.summary.satisfies == ref.summary.satisfies);
            CHECK(r.summary.attains == ref.summary.attains);
            CHECK(r.summary.violates == ref.summary.violates);
            CHECK(r.summary.filtered == ref.summary.filtered);
            REQUIRE(r.violations.size() == ref.violations.size());
            for (std::size_t i = 0; i < r.violations.size(); ++i)
                CHECK(to_json_line(r.violations[i]) == to_json_line(ref.violations[i]));
        }
    }
}

TEST_CASE("decode errors are counted, or fatal in strict mode")
{
    auto dir = scratch_dir("decode");
    {
        std::ofstream out(dir / "in.g6");
        out << "Bw\nnot graph6\nDQo\n";
    }
    RunConfig config;
    config.input = FileInput{(dir / "in.g6").string()};
    auto r = run_check(config);
    CHECK(r.summary.read == 3);
    CHECK(r.summary.solved == 2);
    CHECK(r.summary.decode_errors == 1);
    REQUIRE(r.decode_failures.size() == 1);
    CHECK(r.decode_failures[0].line == 2);
    config.strict = true;
    CHECK_THROWS_AS(run_check(config), HarnessError);
    config.input = FileInput{(dir / "missing.g6").string()};
    CHECK_THROWS_AS(run_check(config), HarnessError);
    fs::remove_all(dir);
}

TEST_CASE("raw mode applies no degree filter")
{
    std::vector<Graph> graphs{Graph::from_edges(3, {{0, 1}, {1, 2}}), Graph(1)};
    RunConfig config;
    auto r = run_on(graphs, config);
    CHECK(r.summary.filtered == 0);
    CHECK(r.summary.solved == 2);
    config.bound = BoundKind::luzar;
    r = run_on(graphs, config);
    CHECK(r.summary.filtered == 2);
}

TEST_CASE("filters")
{
    RunConfig config;
    config.input = FamilyInput{{"prism:3..6", "dodecahedron:5"}};
    config.filters.girth_min = 5;
    auto r = run_check(config);
    CHECK(r.summary.solved == 1);
    config.filters.girth_min.reset();
    config.filters.connectivity_min = 3;
    config.input = FamilyInput{{"shannon:4:0", "prism:4"}};
    r = run_check(config);
    CHECK(r.summary.solved == 1);
    config.filters.connectivity_min.reset();
    config.filters.planar = true;
    config.input = FamilyInput{{"prism:4"}};
    CHECK(run_check(config).summary.solved == 1);
}

TEST_CASE("budget-exhausted graphs are reported, never satisfied")
{
    RunConfig config;
    config.input = FamilyInput{{"fixture:Fig12_G"}};
    config.bound = BoundKind::luzar;
    config.node_budget = 1;
    auto r = run_check(config);
    CHECK(r.summary.satisfies + r.summary.unresolved + r.summary.attains + r.summary.violates == 1);
    if (r.summary.unresolved == 1) {
        CHECK(r.summary.satisfies == 0);
        CHECK(r.unresolved.size() == 1);
        CHECK(r.unresolved[0].lower < r.unresolved[0].upper);
    }
}

TEST_CASE("family specs")
{
    CHECK(family_graphs("prism:3..5").size() == 3);
    CHECK(family_graphs("shannon:3,4:0..1").size() == 4);
    CHECK(family_graphs("fixture:G5_base").front() == fixture("G5_base").graph);
    CHECK(family_graphs("h:G5_base:2").front().order() == 12);
    CHECK_THROWS_AS(family_graphs("prism"), FamilyError);
    CHECK_THROWS_AS(family_graphs("prism:x"), FamilyError);
    CHECK_THROWS_AS(family_graphs("nosuch:3"), FamilyError);
}

TEST_CASE("chi-i records")
{
    CHECK(chi_i_record(parse_graph6("Bw")) == "3 2 3 3");
    CHECK(chi_i_record(Graph::from_edges(3, {{0, 1}, {1, 2}})) == "3 2 inf 2");
    CHECK(chi_i_record(fixture("G5_base").graph) == "10 5 3 10");
}

TEST_CASE("fixture verification and offline fetch")
{
    for (const auto& c : verify_fixtures(fixture_dir())) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.ok);
    }
    CHECK_THROWS_AS(fetch_fixture(33503, fixture_dir(), false), FixtureError);
    CHECK_THROWS_AS(fetch_fixture(1, fixture_dir(), false), FixtureError);
}
