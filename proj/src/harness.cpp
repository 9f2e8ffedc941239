#include "injcol/harness.hpp"

#include "injcol/canonical.hpp"
#include "injcol/codec.hpp"
#include "injcol/families.hpp"
#include "injcol/solver.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <ctime>
#include <deque>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace injcol
{

using nlohmann::json;

// ---------------------------------------------------------------- tables

void AttainmentTable::add(std::size_t order, std::size_t delta, std::uint64_t count)
{
    if (count)
        counts_[{order, delta}] += count;
}

void AttainmentTable::merge(const AttainmentTable& other)
{
    for (const auto& [key, c] : other.counts_)
        add(key.first, key.second, c);
}

std::uint64_t AttainmentTable::at(std::size_t order, std::size_t delta) const
{
    auto it = counts_.find({order, delta});
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t AttainmentTable::total() const
{
    std::uint64_t t = 0;
    for (const auto& [key, c] : counts_)
        t += c;
    return t;
}

std::string table_to_csv(const AttainmentTable& t)
{
    std::set<std::size_t> orders, deltas;
    for (const auto& [key, c] : t.counts()) {
        orders.insert(key.first);
        deltas.insert(key.second);
    }
    std::ostringstream out;
    out << "n";
    for (auto d : deltas)
        out << ",delta=" << d;
    out << "\n";
    for (auto n : orders) {
        out << n;
        for (auto d : deltas)
            out << "," << t.at(n, d);
        out << "\n";
    }
    return out.str();
}

std::string table_to_json(const AttainmentTable& t)
{
    json rows = json::array();
    for (const auto& [key, c] : t.counts())
        rows.push_back({{"n", key.first}, {"delta", key.second}, {"count", c}});
    return json{{"attainment", rows}}.dump();
}

AttainmentTable table_from_json(std::string_view text)
{
    AttainmentTable t;
    try {
        auto doc = json::parse(text);
        for (const auto& row : doc.at("attainment"))
            t.add(row.at("n").get<std::size_t>(), row.at("delta").get<std::size_t>(),
                  row.at("count").get<std::uint64_t>());
    } catch (const json::exception& e) {
        throw HarnessError(std::string("malformed attainment table: ") + e.what());
    }
    return t;
}

// ---------------------------------------------------------------- records

namespace
{

json girth_json(Girth g) { return g.is_finite() ? json(g.value()) : json(nullptr); }

std::string girth_text(Girth g) { return g.is_finite() ? std::to_string(g.value()) : "inf"; }

} // namespace

std::string to_json_line(const ViolationRecord& r)
{
    return json{{"graph6", r.graph6}, {"n", r.order},   {"delta", r.delta},       {"girth", girth_json(r.girth)},
                {"chi_i", r.chi_i},   {"bound", r.bound}, {"bound_name", r.bound_name}, {"witness", r.witness}}
        .dump();
}

ViolationRecord violation_from_json(std::string_view line)
{
    ViolationRecord r;
    try {
        auto j = json::parse(line);
        r.graph6 = j.at("graph6").get<std::string>();
        r.order = j.at("n").get<std::size_t>();
        r.delta = j.at("delta").get<std::size_t>();
        r.girth = j.at("girth").is_null() ? Girth::infinite() : Girth(j.at("girth").get<std::size_t>());
        r.chi_i = j.at("chi_i").get<std::size_t>();
        r.bound = j.at("bound").get<std::size_t>();
        r.bound_name = j.at("bound_name").get<std::string>();
        r.witness = j.at("witness").get<std::vector<std::int32_t>>();
    } catch (const json::exception& e) {
        throw HarnessError(std::string("malformed violation record: ") + e.what());
    }
    return r;
}

bool reverify(const ViolationRecord& r)
{
    const auto g = parse_graph6(r.graph6);
    if (g.order() != r.order || max_degree(g) != r.delta || girth(g) != r.girth)
        return false;
    const auto& bound = bound_by_name(r.bound_name);
    if (!bound.applies(r.delta, r.girth) || bound(r.delta) != r.bound)
        return false;
    Coloring c{r.witness, r.chi_i};
    try {
        if (!verify_injective(g, c))
            return false;
    } catch (const GraphError&) {
        return false;
    }
    const auto solved = injective_chromatic_number(g);
    return solved.exact && solved.chi_i == r.chi_i && r.chi_i > r.bound;
}

std::string summary_to_json(const RunResult& r)
{
    const auto& s = r.summary;
    json by_delta = json::object();
    for (const auto& [d, c] : r.solved_by_delta)
        by_delta[std::to_string(d)] = c;
    return json{{"read", s.read},
                {"decode_errors", s.decode_errors},
                {"filtered", s.filtered},
                {"solved", s.solved},
                {"satisfies", s.satisfies},
                {"attains", s.attains},
                {"violates", s.violates},
                {"vacuous", s.vacuous},
                {"unresolved", s.unresolved},
                {"wall_seconds", s.wall_seconds},
                {"cpu_seconds", s.cpu_seconds},
                {"solved_by_delta", by_delta},
                {"attainment", json::parse(table_to_json(r.table)).at("attainment")}}
        .dump(2);
}

std::string chi_i_record(const Graph& g, std::optional<std::uint64_t> node_budget)
{
    const auto r = injective_chromatic_number(g, SolveOptions{node_budget});
    std::ostringstream out;
    out << g.order() << " " << max_degree(g) << " " << girth_text(girth(g)) << " ";
    if (r.exact)
        out << r.chi_i;
    else
        out << r.lower << ".." << r.chi_i;
    return out.str();
}

// ---------------------------------------------------------------- run_check

namespace
{

enum class Kind { decode_error, filtered, unresolved, solved };

struct GraphOutcome {
    Kind kind = Kind::filtered;
    std::uint64_t index = 0;
    std::uint64_t line = 0;
    std::string error;
    std::size_t order = 0;
    std::size_t delta = 0;
    Girth girth = Girth::infinite();
    std::size_t chi_i = 0;
    std::size_t lower = 0;
    std::optional<Verdict> verdict;
    // Only kept for violations and unresolved graphs.
    std::string graph6;
    std::vector<std::int32_t> witness;
};

struct Chunk {
    std::uint64_t first_index = 0;
    std::vector<StreamItem> items;
};

class Evaluator
{
public:
    explicit Evaluator(const RunConfig& config)
        : config_(config)
    {
        if (config.bound)
            bound_ = &bound_fn(*config.bound);
        min_degree_ = config.filters.min_degree.value_or(bound_ ? 2 : 0);
        girth_min_ = config.filters.girth_min.value_or(0);
        if (bound_)
            girth_min_ = std::max(girth_min_, bound_->min_girth);
    }

    std::vector<GraphOutcome> operator()(const Chunk& chunk) const
    {
        std::vector<GraphOutcome> out;
        out.reserve(chunk.items.size());
        for (std::size_t i = 0; i < chunk.items.size(); ++i)
            out.push_back(evaluate(chunk.items[i], chunk.first_index + i));
        return out;
    }

private:
    GraphOutcome evaluate(const StreamItem& item, std::uint64_t index) const
    {
        GraphOutcome o;
        o.index = index;
        o.line = item.line;
        if (!item.graph) {
            o.kind = Kind::decode_error;
            o.error = item.error;
            return o;
        }
        const Graph& g = *item.graph;
        o.order = g.order();
        if (g.order() > 0 && min_degree(g) < min_degree_)
            return o;
        if (config_.filters.planar && !is_planar(g))
            return o;
        o.girth = girth(g);
        if (girth_min_ > 0 && o.girth < Length(girth_min_))
            return o;
        if (config_.filters.connectivity_min && *config_.filters.connectivity_min > 0 &&
            !vertex_connectivity_at_least(g, *config_.filters.connectivity_min))
            return o;

        o.delta = max_degree(g);
        const auto r = injective_chromatic_number(g, SolveOptions{config_.node_budget});
        o.chi_i = r.chi_i;
        o.lower = r.lower;
        if (!r.exact) {
            o.kind = Kind::unresolved;
            o.graph6 = write_graph6(g);
            return o;
        }
        o.kind = Kind::solved;
        if (bound_) {
            o.verdict = verdict(o.delta, o.girth, *bound_, o.chi_i, config_.mode);
            if (o.verdict->outcome == Outcome::violates) {
                o.graph6 = write_graph6(g);
                o.witness = r.witness.colour;
            }
        }
        return o;
    }

    const RunConfig& config_;
    const BoundFn* bound_ = nullptr;
    std::size_t min_degree_ = 0;
    std::size_t girth_min_ = 0;
};

class WorkerPool
{
public:
    explicit WorkerPool(std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            threads_.emplace_back([this] { loop(); });
    }
    ~WorkerPool()
    {
        {
            std::lock_guard lock(mutex_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_)
            t.join();
    }

    template <class F>
    auto submit(F f) -> std::future<decltype(f())>
    {
        auto task = std::make_shared<std::packaged_task<decltype(f())()>>(std::move(f));
        auto fut = task->get_future();
        {
            std::lock_guard lock(mutex_);
            queue_.emplace_back([task] { (*task)(); });
        }
        cv_.notify_one();
        return fut;
    }

private:
    void loop()
    {
        for (;;) {
            std::function<void()> job;
            {
                std::unique_lock lock(mutex_);
                cv_.wait(lock, [this] { return stop_ || !queue_.empty(); });
                if (queue_.empty())
                    return;
                job = std::move(queue_.front());
                queue_.pop_front();
            }
            job();
        }
    }

    std::vector<std::thread> threads_;
    std::deque<std::function<void()>> queue_;
    std::mutex mutex_;
    std::condition_variable cv_;
    bool stop_ = false;
};

class Reducer
{
public:
    Reducer(const RunConfig& config, RunResult& result)
        : config_(config)
        , result_(result)
    {
        if (config.violations_path) {
            log_.open(*config.violations_path, std::ios::app);
            if (!log_)
                throw HarnessError("cannot open violations file " + config.violations_path->string());
        }
    }

    void commit(const std::vector<GraphOutcome>& outcomes)
    {
        auto& s = result_.summary;
        for (const auto& o : outcomes) {
            ++s.read;
            switch (o.kind) {
            case Kind::decode_error:
                ++s.decode_errors;
                result_.decode_failures.push_back({o.line, o.error});
                if (config_.strict)
                    throw HarnessError(o.error);
                break;
            case Kind::filtered:
                ++s.filtered;
                break;
            case Kind::unresolved:
                ++s.unresolved;
                result_.unresolved.push_back({o.index, o.graph6, o.lower, o.chi_i});
                break;
            case Kind::solved:
                ++s.solved;
                ++result_.solved_by_delta[o.delta];
                if (o.verdict)
                    record(o);
                break;
            }
        }
    }

private:
    void record(const GraphOutcome& o)
    {
        auto& s = result_.summary;
        const auto& v = *o.verdict;
        if (v.vacuous)
            ++s.vacuous;
        switch (v.outcome) {
        case Outcome::satisfies:
            ++s.satisfies;
            break;
        case Outcome::attains:
            ++s.attains;
            result_.table.add(o.order, o.delta);
            break;
        case Outcome::violates: {
            ++s.violates;
            ViolationRecord r{o.graph6, o.order, o.delta, o.girth, o.chi_i, v.bound,
                              std::string(bound_fn(*config_.bound).name), o.witness};
            if (log_.is_open()) {
                log_ << to_json_line(r) << "\n";
                log_.flush();
                if (!log_)
                    throw HarnessError("write to violations file failed");
            }
            result_.violations.push_back(std::move(r));
            break;
        }
        }
    }

    const RunConfig& config_;
    RunResult& result_;
    std::ofstream log_;
};

} // namespace

RunResult run_check(const RunConfig& config,
                    const std::function<void(const std::function<void(StreamItem)>&)>& produce)
{
    if (config.workers == 0)
        throw HarnessError("worker count must be at least 1");
    const auto chunk_size = std::max<std::size_t>(1, config.chunk_size);
    const auto wall_start = std::chrono::steady_clock::now();
    const auto cpu_start = std::clock();

    RunResult result;
    Reducer reducer(config, result);
    Evaluator evaluate(config);

    std::optional<WorkerPool> pool;
    if (config.workers > 1)
        pool.emplace(config.workers);
    std::deque<std::future<std::vector<GraphOutcome>>> pending;

    Chunk current;
    std::uint64_t next_index = 0;
    auto flush = [&] {
        if (current.items.empty())
            return;
        if (!pool) {
            reducer.commit(evaluate(current));
        } else {
            pending.push_back(pool->submit([chunk = std::move(current), &evaluate] { return evaluate(chunk); }));
            while (pending.size() > 2 * config.workers) {
                reducer.commit(pending.front().get());
                pending.pop_front();
            }
        }
        current = Chunk{};
        current.first_index = next_index;
    };

    try {
        produce([&](StreamItem item) {
            current.items.push_back(std::move(item));
            ++next_index;
            if (current.items.size() >= chunk_size)
                flush();
        });
        flush();
        while (!pending.empty()) {
            reducer.commit(pending.front().get());
            pending.pop_front();
        }
    } catch (const BoundDomainError& e) {
        for (auto& f : pending)
            f.wait();
        throw HarnessError(e.what());
    } catch (...) {
        for (auto& f : pending)
            f.wait();
        throw;
    }

    result.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    result.summary.cpu_seconds = static_cast<double>(std::clock() - cpu_start) / CLOCKS_PER_SEC;
    return result;
}

RunResult run_check(const RunConfig& config)
{
    return std::visit(
        [&](const auto& input) -> RunResult {
            using T = std::decay_t<decltype(input)>;
            if constexpr (std::is_same_v<T, FileInput>) {
                std::ifstream file;
                std::istream* in = &std::cin;
                if (input.path != "-") {
                    file.open(input.path);
                    if (!file)
                        throw HarnessError("cannot open input " + input.path);
                    in = &file;
                }
                return run_check(config, [&](const auto& sink) {
                    Graph6Reader reader(*in);
                    for (;;) {
                        try {
                            auto g = reader.next();
                            if (!g)
                                break;
                            sink(StreamItem{std::move(g), {}, reader.line_number()});
                        } catch (const Graph6Error& e) {
                            sink(StreamItem{std::nullopt, e.what(), e.line()});
                        }
                    }
                    if (in->bad())
                        throw HarnessError("read error on input " + input.path);
                });
            } else if constexpr (std::is_same_v<T, GeneratorInput>) {
                return run_check(config, [&](const auto& sink) {
                    generate(input.spec, [&](const Graph& g) { sink(StreamItem{g, {}, 0}); });
                });
            } else {
                return run_check(config, [&](const auto& sink) {
                    for (const auto& spec : input.specs)
                        for (auto& g : family_graphs(spec))
                            sink(StreamItem{std::move(g), {}, 0});
                });
            }
        },
        config.input);
}

// ---------------------------------------------------------------- family specs

namespace
{

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::size_t parse_count(std::string_view s)
{
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw FamilyError("expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<std::size_t> parse_values(std::string_view s)
{
    std::vector<std::size_t> out;
    for (const auto& part : split(s, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(part));
            continue;
        }
        const auto lo = parse_count(std::string_view(part).substr(0, dots));
        const auto hi = parse_count(std::string_view(part).substr(dots + 2));
        if (hi < lo)
            throw FamilyError("empty range '" + part + "'");
        for (auto v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

} // namespace

std::vector<Graph> family_graphs(std::string_view spec)
{
    const auto parts = split(spec, ':');
    const auto& name = parts[0];
    auto expect = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw FamilyError("family '" + name + "' takes " + std::to_string(n) + " parameter(s): " +
                              std::string(spec));
    };
    std::vector<Graph> out;
    if (name == "fixture") {
        expect(1);
        out.push_back(fixture(parts[1]).graph);
    } else if (name == "h") {
        expect(2);
        const auto base = fixture(parts[1]);
        for (auto s : parse_values(parts[2]))
            out.push_back(h_family(base, s).graph);
    } else if (name == "shannon") {
        expect(2);
        for (auto d : parse_values(parts[1]))
            for (auto e : parse_values(parts[2]))
                out.push_back(shannon_subdivided(d, e));
    } else {
        expect(1);
        for (auto v : parse_values(parts[1])) {
            if (name == "g4")
                out.push_back(family_g4(v).graph);
            else if (name == "ls")
                out.push_back(ls_base(v).graph);
            else if (name == "cubic")
                out.push_back(cubic_family(v).graph);
            else if (name == "k")
                out.push_back(k_family(v).graph);
            else if (name == "prism")
                out.push_back(prism(v));
            else if (name == "dodecahedron")
                out.push_back(gen_dodecahedron(v));
            else
                throw FamilyError("unknown family '" + name +
                                  "' (expected fixture, g4, h, ls, cubic, shannon, k, prism or dodecahedron)");
        }
    }
    return out;
}

// ---------------------------------------------------------------- fixtures

std::vector<FixtureCheck> verify_fixtures(const std::filesystem::path& dir)
{
    std::vector<FixtureCheck> out;
    for (const auto& info : fixture_manifest(dir)) {
        FixtureCheck c{info.name, false, {}};
        try {
            if (info.file.empty())
                throw FixtureError("manifest entry has no file");
            auto stored = load_fixture(info, dir);
            if (auto builtin = builtin_fixture(info.name)) {
                if (!(builtin->graph == stored.graph))
                    throw FixtureError("file differs from the built-in transcription");
                if (builtin->marks != stored.marks)
                    throw FixtureError("marks differ from the built-in transcription");
            }
            const auto r = injective_chromatic_number(stored.graph);
            if (r.chi_i != info.chi_i)
                throw FixtureError("chi_i is " + std::to_string(r.chi_i) + ", manifest says " +
                                   std::to_string(info.chi_i));
            c.ok = true;
            c.detail = "order " + std::to_string(info.order) + ", size " + std::to_string(info.size) +
                       ", max degree " + std::to_string(info.max_degree) + ", chi_i " + std::to_string(r.chi_i);
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace injcol
