#include "injcol/codec.hpp"
#include "injcol/families.hpp"
#include "injcol/harness.hpp"
#include "injcol/smallgen.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace injcol;

namespace
{

// Writes to --output when given, stdout otherwise.
class Sink
{
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw HarnessError("cannot open output " + path);
        }
    }
    std::ostream& out() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int run_chi_i(const std::string& input, bool strict, std::optional<std::uint64_t> budget, const std::string& output)
{
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
        file.open(input);
        if (!file)
            throw HarnessError("cannot open input " + input);
        in = &file;
    }
    Sink sink(output);
    Graph6Reader reader(*in);
    int status = 0;
    for (;;) {
        try {
            auto g = reader.next();
            if (!g)
                break;
            sink.out() << chi_i_record(*g, budget) << "\n";
        } catch (const Graph6Error& e) {
            std::cerr << e.what() << "\n";
            if (strict)
                return 2;
        }
    }
    return status;
}

void print_summary(const RunResult& r)
{
    const auto& s = r.summary;
    std::cerr << "read " << s.read << ", filtered " << s.filtered << ", solved " << s.solved << ", decode errors "
              << s.decode_errors << "\n"
              << "satisfies " << s.satisfies << " (vacuous " << s.vacuous << "), attains " << s.attains
              << ", violates " << s.violates << ", unresolved " << s.unresolved << "\n"
              << "wall " << s.wall_seconds << " s, cpu " << s.cpu_seconds << " s\n";
    for (const auto& u : r.unresolved)
        std::cerr << "unresolved #" << u.index << " " << u.graph6 << " chi_i in [" << u.lower << ", " << u.upper
                  << "]\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Injective chromatic numbers, graph families and bound checks"};
    app.require_subcommand(1);

    // chi-i
    auto* chi = app.add_subcommand("chi-i", "Print \"n delta girth chi_i\" for each graph6 line");
    std::string chi_input = "-", chi_output;
    bool chi_strict = false;
    std::optional<std::uint64_t> chi_budget;
    chi->add_option("input", chi_input, "graph6 file, - for stdin");
    chi->add_flag("--strict", chi_strict, "Exit with status 2 on the first malformed line");
    chi->add_option("--node-budget", chi_budget, "Search node limit per graph");
    chi->add_option("--output,-o", chi_output, "Output file");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate non-isomorphic graphs as graph6");
    GenSpec gspec;
    std::optional<std::size_t> g_max_edges, g_max_degree;
    bool g_disconnected = false;
    std::string gen_output;
    gen->add_option("--order,-n", gspec.order, "Number of vertices")->required();
    gen->add_option("--min-degree", gspec.min_degree, "Minimum degree");
    gen->add_option("--max-edges", g_max_edges, "Maximum number of edges");
    gen->add_option("--max-degree", g_max_degree, "Maximum degree");
    gen->add_flag("--planar", gspec.planar, "Planar graphs only");
    gen->add_flag("--disconnected", g_disconnected, "Include disconnected graphs");
    gen->add_option("--part", gspec.part, "Which part of the split to produce");
    gen->add_option("--parts", gspec.parts, "Number of parts in the split");
    gen->add_flag("--allow-large", gspec.allow_large, "Lift the default order ceiling");
    gen->add_option("--output,-o", gen_output, "Output file");

    // family
    auto* fam = app.add_subcommand("family", "Print family members as graph6");
    std::vector<std::string> fam_specs;
    std::string fam_output;
    fam->add_option("spec", fam_specs,
                    "fixture:NAME g4:I h:BASE:STEPS ls:DELTA cubic:N shannon:DELTA:EXT k:STEPS prism:K "
                    "dodecahedron:R; integers accept a..b ranges and comma lists")
        ->required();
    fam->add_option("--output,-o", fam_output, "Output file");

    // check
    auto* chk = app.add_subcommand("check", "Solve a graph stream and compare against a bound");
    std::string c_input;
    std::optional<std::size_t> c_gen;
    std::vector<std::string> c_family;
    Filters filters;
    std::optional<std::size_t> c_max_edges;
    std::string c_bound, c_output, c_violations, c_summary;
    bool c_json = false, c_strict = false;
    std::size_t c_workers = 1;
    std::optional<std::uint64_t> c_budget;
    auto* in_opt = chk->add_option("--input", c_input, "graph6 file, - for stdin");
    auto* gen_opt = chk->add_option("--gen", c_gen, "Use the internal generator at this order");
    auto* fam_opt = chk->add_option("--family", c_family, "Family spec, repeatable");
    in_opt->excludes(gen_opt)->excludes(fam_opt);
    gen_opt->excludes(fam_opt);
    chk->add_option("--min-degree", filters.min_degree, "Minimum degree (default 2 with a bound)");
    chk->add_option("--girth-min", filters.girth_min, "Minimum girth");
    chk->add_option("--connectivity-min", filters.connectivity_min, "Minimum vertex connectivity");
    chk->add_flag("--planar", filters.planar, "Planar graphs only");
    chk->add_option("--max-edges", c_max_edges, "Edge cap for --gen (default 3n-6 with --planar)");
    chk->add_option("--bound", c_bound, "chen, luzar, la-storgel or girth5")
        ->check(CLI::IsMember({"chen", "luzar", "la-storgel", "girth5"}));
    chk->add_option("--workers,-j", c_workers, "Solver threads")->check(CLI::PositiveNumber);
    chk->add_option("--node-budget", c_budget, "Search node limit per graph");
    chk->add_flag("--strict", c_strict, "Stop on malformed input and on out-of-domain max degree");
    chk->add_option("--output,-o", c_output, "Attainment table file (CSV, or JSON with --json)");
    chk->add_flag("--json", c_json, "Write the table as JSON");
    chk->add_option("--violations", c_violations, "Append violation certificates here (JSON lines)");
    chk->add_option("--summary", c_summary, "Write a JSON run summary here");

    // fixtures
    auto* fx = app.add_subcommand("fixtures", "List, verify or fetch fixture graphs");
    fx->require_subcommand(1);
    std::string fx_dir;
    fx->add_option("--dir", fx_dir, "Fixture directory (default $INJCOL_FIXTURE_DIR or the source tree)");
    auto* fx_list = fx->add_subcommand("list", "List manifest entries");
    auto* fx_verify = fx->add_subcommand("verify", "Re-check every manifest entry");
    auto* fx_fetch = fx->add_subcommand("fetch", "Download a House of Graphs entry");
    std::uint64_t fx_id = 0;
    bool fx_network = false;
    fx_fetch->add_option("id", fx_id, "House of Graphs id")->required();
    fx_fetch->add_flag("--network", fx_network, "Allow network access");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*chi)
            return run_chi_i(chi_input, chi_strict, chi_budget, chi_output);

        if (*gen) {
            gspec.connected = !g_disconnected;
            gspec.max_edges = g_max_edges;
            gspec.max_degree = g_max_degree;
            Sink sink(gen_output);
            generate(gspec, [&](const Graph& g) { sink.out() << write_graph6(g) << "\n"; });
            return 0;
        }

        if (*fam) {
            Sink sink(fam_output);
            for (const auto& spec : fam_specs)
                for (const auto& g : family_graphs(spec))
                    sink.out() << write_graph6(g) << "\n";
            return 0;
        }

        if (*chk) {
            RunConfig config;
            if (c_gen) {
                GenSpec spec;
                spec.order = *c_gen;
                spec.min_degree = filters.min_degree.value_or(c_bound.empty() ? 0 : 2);
                spec.planar = filters.planar;
                spec.max_edges = c_max_edges;
                if (!spec.max_edges && spec.planar && spec.order >= 3)
                    spec.max_edges = 3 * spec.order - 6;
                config.input = GeneratorInput{spec};
            } else if (!c_family.empty()) {
                config.input = FamilyInput{c_family};
            } else {
                config.input = FileInput{c_input.empty() ? "-" : c_input};
            }
            config.filters = filters;
            if (!c_bound.empty())
                config.bound = bound_by_name(c_bound).kind;
            config.workers = c_workers;
            config.node_budget = c_budget;
            config.strict = c_strict;
            config.mode = c_strict ? VerdictMode::strict : VerdictMode::stream;
            if (!c_violations.empty())
                config.violations_path = c_violations;

            const auto result = run_check(config);
            Sink sink(c_output);
            sink.out() << (c_json ? table_to_json(result.table) + "\n" : table_to_csv(result.table));
            if (!c_summary.empty()) {
                std::ofstream out(c_summary);
                out << summary_to_json(result) << "\n";
                if (!out)
                    throw HarnessError("cannot write summary " + c_summary);
            }
            print_summary(result);
            return result.summary.violates > 0 ? 1 : 0;
        }

        if (*fx) {
            const std::filesystem::path dir = fx_dir.empty() ? fixture_dir() : std::filesystem::path(fx_dir);
            if (*fx_list) {
                for (const auto& f : fixture_manifest(dir)) {
                    std::cout << f.name << "  order " << f.order << "  size " << f.size << "  max degree "
                              << f.max_degree << "  chi_i " << f.chi_i << "  source " << f.source;
                    if (f.hog_id)
                        std::cout << "  hog " << *f.hog_id;
                    std::cout << "\n";
                }
                return 0;
            }
            if (*fx_verify) {
                int status = 0;
                for (const auto& c : verify_fixtures(dir)) {
                    std::cout << (c.ok ? "ok    " : "FAIL  ") << c.name << "  " << c.detail << "\n";
                    if (!c.ok)
                        status = 2;
                }
                return status;
            }
            if (*fx_fetch) {
                const auto c = fetch_fixture(fx_id, dir, fx_network);
                std::cout << (c.ok ? "ok    " : "FAIL  ") << c.name << "  " << c.detail << "\n";
                return c.ok ? 0 : 2;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "injcol: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
