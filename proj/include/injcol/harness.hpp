#pragma once

#include "injcol/conjectures.hpp"
#include "injcol/graph.hpp"
#include "injcol/metrics.hpp"
#include "injcol/smallgen.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace injcol
{

/// Counts of graphs attaining a bound, keyed by (order, max degree).
class AttainmentTable
{
public:
    using Key = std::pair<std::size_t, std::size_t>;

    void add(std::size_t order, std::size_t delta, std::uint64_t count = 1);
    void merge(const AttainmentTable& other);
    std::uint64_t at(std::size_t order, std::size_t delta) const;
    std::uint64_t total() const;
    bool empty() const { return counts_.empty(); }
    const std::map<Key, std::uint64_t>& counts() const { return counts_; }

    friend bool operator==(const AttainmentTable&, const AttainmentTable&) = default;

private:
    std::map<Key, std::uint64_t> counts_;
};

/// One row per order, one column per max degree present, ascending. An empty
/// table renders as the header line "n".
std::string table_to_csv(const AttainmentTable& t);
std::string table_to_json(const AttainmentTable& t);
AttainmentTable table_from_json(std::string_view json);

class HarnessError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Filters {
    /// Defaults to 2 when a bound is selected, 0 otherwise.
    std::optional<std::size_t> min_degree;
    std::optional<std::size_t> girth_min;
    std::optional<std::size_t> connectivity_min;
    bool planar = false;
};

struct FileInput {
    /// "-" reads standard input.
    std::string path;
};

struct GeneratorInput {
    GenSpec spec;
};

struct FamilyInput {
    /// Family specs as accepted by family_graphs().
    std::vector<std::string> specs;
};

using InputSource = std::variant<FileInput, GeneratorInput, FamilyInput>;

struct RunConfig {
    InputSource input = FileInput{"-"};
    Filters filters;
    std::optional<BoundKind> bound;
    VerdictMode mode = VerdictMode::stream;
    std::size_t workers = 1;
    std::optional<std::uint64_t> node_budget;
    /// Graphs per work unit handed to a worker.
    std::size_t chunk_size = 256;
    /// Violations are appended here, one JSON object per line, as soon as
    /// they are committed.
    std::optional<std::filesystem::path> violations_path;
    /// Decode errors abort the run instead of being counted.
    bool strict = false;
};

struct ViolationRecord {
    std::string graph6;
    std::size_t order = 0;
    std::size_t delta = 0;
    Girth girth = Girth::infinite();
    std::size_t chi_i = 0;
    std::size_t bound = 0;
    std::string bound_name;
    std::vector<std::int32_t> witness;
};

std::string to_json_line(const ViolationRecord& r);
ViolationRecord violation_from_json(std::string_view line);
/// Decodes the graph, re-solves it and checks the witness; true iff the
/// violation is reproduced.
bool reverify(const ViolationRecord& r);

struct UnresolvedRecord {
    std::uint64_t index = 0;
    std::string graph6;
    std::size_t lower = 0;
    std::size_t upper = 0;
};

struct DecodeFailure {
    std::uint64_t line = 0;
    std::string message;
};

struct RunSummary {
    std::uint64_t read = 0;
    std::uint64_t decode_errors = 0;
    std::uint64_t filtered = 0;
    std::uint64_t solved = 0;
    std::uint64_t satisfies = 0;
    std::uint64_t attains = 0;
    std::uint64_t violates = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t unresolved = 0;
    double wall_seconds = 0.0;
    double cpu_seconds = 0.0;
};

struct RunResult {
    RunSummary summary;
    AttainmentTable table;
    std::vector<ViolationRecord> violations;
    std::vector<UnresolvedRecord> unresolved;
    std::vector<DecodeFailure> decode_failures;
    /// Max degree histogram of the solved graphs, used for reports.
    std::map<std::size_t, std::uint64_t> solved_by_delta;
};

std::string summary_to_json(const RunResult& r);

/// Streams graphs from the configured source through the filters, solves
/// each survivor, applies the bound and aggregates. Results are identical for
/// every worker count. Throws HarnessError on I/O failure and, in strict mode,
/// on the first decode error.
RunResult run_check(const RunConfig& config);

/// As above with graphs pushed by `produce`, which is called once with a sink
/// accepting either a graph or a decode error.
struct StreamItem {
    std::optional<Graph> graph;
    std::string error;
    std::uint64_t line = 0;
};
RunResult run_check(const RunConfig& config, const std::function<void(const std::function<void(StreamItem)>&)>& produce);

/// Expands a family spec into graphs. Parameters are separated by ':' and
/// each may be an integer, a range a..b, or a comma list. Forms:
///   fixture:NAME  g4:I  h:BASE:STEPS  ls:DELTA  cubic:N  shannon:DELTA:EXT
///   k:STEPS  prism:K  dodecahedron:R
/// Multiple ranged parameters expand as a cartesian product.
std::vector<Graph> family_graphs(std::string_view spec);

/// Per-graph record for the chi-i command: "n delta girth chi_i", with
/// "inf" for an infinite girth and "lo..hi" for an unfinished search.
std::string chi_i_record(const Graph& g, std::optional<std::uint64_t> node_budget = std::nullopt);

struct FixtureCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Re-checks every manifest entry: file checksum, order, size, max degree,
/// chi_i, and for built-in graphs label-exact equality with the file.
std::vector<FixtureCheck> verify_fixtures(const std::filesystem::path& dir);

/// Downloads the graph6 of a House of Graphs entry, checks it against the
/// manifest entry with that id and stores it. Transcribed fixtures must come back
/// isomorphic; substitutes must keep order, max degree and chi_i and get
/// fresh marks from find_h_triangle(). Refuses to overwrite on mismatch.
/// Requires `network_enabled`; the URL template's "{id}" is replaced, and
/// $INJCOL_HOG_URL overrides the default template.
FixtureCheck fetch_fixture(std::uint64_t hog_id, const std::filesystem::path& dir, bool network_enabled);

} // namespace injcol
