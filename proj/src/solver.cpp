#include "injcol/solver.hpp"

#include "injcol/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace injcol
{

namespace
{

using Adjacency = std::vector<std::vector<VertexId>>;

Adjacency conflict_lists(const Graph& g)
{
    auto cg = conflict_graph(g).conflicts;
    Adjacency adj(g.order());
    for (VertexId v = 0; v < g.order(); ++v)
        adj[v] = cg.neighbor_list(v);
    return adj;
}

Coloring greedy(const Adjacency& conflicts)
{
    const auto n = conflicts.size();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return conflicts[a].size() > conflicts[b].size();
    });
    Coloring c{std::vector<std::int32_t>(n, -1), 0};
    std::vector<bool> taken;
    for (auto v : order) {
        taken.assign(c.k + 1, false);
        for (auto w : conflicts[v])
            if (c.colour[w] >= 0)
                taken[static_cast<std::size_t>(c.colour[w])] = true;
        std::size_t col = 0;
        while (taken[col])
            ++col;
        c.colour[v] = static_cast<std::int32_t>(col);
        c.k = std::max(c.k, col + 1);
    }
    return c;
}

std::size_t greedy_clique(const Graph& conflicts)
{
    const auto n = conflicts.order();
    std::size_t best = n ? 1 : 0;
    for (VertexId start = 0; start < n; ++start) {
        auto candidates = conflicts.neighborhood(start);
        std::size_t size = 1;
        while (!candidates.empty()) {
            VertexId pick = 0;
            std::size_t pick_deg = 0;
            bool first = true;
            candidates.for_each([&](VertexId v) {
                auto within = conflicts.neighborhood(v);
                within &= candidates;
                auto d = within.count();
                if (first || d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                    first = false;
                }
            });
            candidates &= conflicts.neighborhood(pick);
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

// DSATUR-style search over the conflict graph. The branch vertex maximises
// the number of distinct colours among its conflict neighbours; ties go to
// the larger conflict degree, then the smaller index. A branch may reuse any
// feasible colour already in play or open exactly one fresh colour, and any
// node using at least as many colours as the incumbent is cut.
class InjectiveSearch
{
public:
    InjectiveSearch(const Adjacency& conflicts, std::size_t bound, std::optional<std::uint64_t> budget)
        : adj_(conflicts)
        , n_(conflicts.size())
        , bound_(bound)
        , budget_(budget)
        , colour_(n_, -1)
        , sat_(n_, 0)
        , counts_(n_ * std::max<std::size_t>(bound, 1), 0)
        , limit_(bound)
    {
    }

    /// Colours `fixed` with 0, 1, 2, ... in order; they must be pairwise
    /// conflicting.
    void precolour(const std::vector<VertexId>& fixed)
    {
        for (std::size_t i = 0; i < fixed.size(); ++i)
            assign(fixed[i], static_cast<std::int32_t>(i));
        used_ = fixed.size();
        coloured_ = fixed.size();
    }

    /// Searches for colourings with fewer than `bound` colours. With
    /// first_only, stops at the first one found.
    void run(bool first_only, std::size_t target)
    {
        first_only_ = first_only;
        target_ = target;
        search();
    }

    bool found() const { return found_; }
    bool aborted() const { return aborted_; }
    const std::vector<std::int32_t>& best() const { return best_; }
    SolveStats stats() const { return stats_; }

private:
    void assign(VertexId v, std::int32_t c)
    {
        colour_[v] = c;
        for (auto w : adj_[v])
            if (counts_[w * bound_ + static_cast<std::size_t>(c)]++ == 0)
                ++sat_[w];
    }
    void unassign(VertexId v)
    {
        auto c = static_cast<std::size_t>(colour_[v]);
        colour_[v] = -1;
        for (auto w : adj_[v])
            if (--counts_[w * bound_ + c] == 0)
                --sat_[w];
    }

    VertexId branch_vertex() const
    {
        VertexId best = 0;
        bool have = false;
        for (VertexId v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            if (!have || sat_[v] > sat_[best] ||
                (sat_[v] == sat_[best] && adj_[v].size() > adj_[best].size())) {
                best = v;
                have = true;
            }
        }
        return best;
    }

    void search()
    {
        if (stop_)
            return;
        if (coloured_ == n_) {
            found_ = true;
            best_ = colour_;
            if (first_only_ || used_ <= target_)
                stop_ = true;
            // Later colourings must beat this one.
            limit_ = used_;
            return;
        }
        ++stats_.nodes;
        if (budget_ && stats_.nodes > *budget_) {
            aborted_ = stop_ = true;
            return;
        }
        if (used_ >= limit_) {
            ++stats_.prunes;
            return;
        }

        const VertexId v = branch_vertex();
        ++coloured_;
        for (std::size_t c = 0; c < used_ && used_ < limit_; ++c) {
            if (counts_[v * bound_ + c])
                continue;
            assign(v, static_cast<std::int32_t>(c));
            search();
            unassign(v);
            if (stop_)
                break;
        }
        if (!stop_ && used_ + 1 < limit_) {
            assign(v, static_cast<std::int32_t>(used_));
            ++used_;
            search();
            --used_;
            unassign(v);
        } else if (!stop_) {
            ++stats_.prunes;
        }
        --coloured_;
    }

    const Adjacency& adj_;
    std::size_t n_;
    std::size_t bound_;
    std::optional<std::uint64_t> budget_;
    std::vector<std::int32_t> colour_;
    std::vector<std::size_t> sat_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::int32_t> best_;
    // Exclusive colour-count limit; shrinks as better colourings appear.
    std::size_t limit_;
    std::size_t used_ = 0;
    std::size_t coloured_ = 0;
    std::size_t target_ = 0;
    bool first_only_ = false;
    bool found_ = false;
    bool stop_ = false;
    bool aborted_ = false;
    SolveStats stats_;
};

// Lowest-indexed vertex of maximum degree and its neighbours by index.
std::vector<VertexId> anchor_neighbourhood(const Graph& g)
{
    VertexId anchor = 0;
    for (VertexId v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(anchor))
            anchor = v;
    return g.order() ? g.neighbor_list(anchor) : std::vector<VertexId>{};
}

Coloring to_coloring(const std::vector<std::int32_t>& colours)
{
    Coloring c{colours, 0};
    for (auto x : colours)
        c.k = std::max(c.k, static_cast<std::size_t>(x) + 1);
    return c;
}

} // namespace

bool verify_injective(const Graph& g, const Coloring& c)
{
    if (c.colour.size() != g.order())
        throw GraphError("colouring covers " + std::to_string(c.colour.size()) + " vertices, graph has " +
                         std::to_string(g.order()));
    for (VertexId v = 0; v < g.order(); ++v)
        if (c.colour[v] < 0 || static_cast<std::size_t>(c.colour[v]) >= c.k)
            throw GraphError("vertex " + std::to_string(v) + " is uncoloured or out of range");
    for (VertexId w = 0; w < g.order(); ++w) {
        auto nbrs = g.neighbor_list(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (c.colour[nbrs[i]] == c.colour[nbrs[j]])
                    return false;
    }
    return true;
}

std::size_t lower_bound(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    auto clique = greedy_clique(conflict_graph(g).conflicts);
    return std::max({std::size_t{1}, max_degree(g), clique});
}

std::pair<std::size_t, Coloring> greedy_upper_bound(const Graph& g)
{
    auto c = greedy(conflict_lists(g));
    return {c.k, c};
}

SolveResult injective_chromatic_number(const Graph& g, SolveOptions options)
{
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    const auto conflicts = conflict_lists(g);
    auto incumbent = greedy(conflicts);
    result.lower = lower_bound(g);
    result.chi_i = incumbent.k;
    result.witness = incumbent;

    const auto anchor = anchor_neighbourhood(g);
    if (result.lower < incumbent.k && anchor.size() < incumbent.k) {
        InjectiveSearch search(conflicts, incumbent.k, options.node_budget);
        search.precolour(anchor);
        search.run(false, result.lower);
        if (search.found()) {
            result.witness = to_coloring(search.best());
            result.chi_i = result.witness.k;
        }
        result.stats = search.stats();
        result.exact = !search.aborted();
    }
    if (result.exact)
        result.lower = result.chi_i;
    result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::optional<Coloring> injective_k_colorable(const Graph& g, std::size_t k)
{
    if (g.order() == 0)
        return Coloring{{}, k};
    if (k == 0)
        return std::nullopt;
    const auto conflicts = conflict_lists(g);
    auto incumbent = greedy(conflicts);
    if (incumbent.k <= k) {
        incumbent.k = k;
        return incumbent;
    }
    const auto anchor = anchor_neighbourhood(g);
    if (anchor.size() > k)
        return std::nullopt;
    InjectiveSearch search(conflicts, k + 1, std::nullopt);
    search.precolour(anchor);
    search.run(true, k);
    if (!search.found())
        return std::nullopt;
    auto c = to_coloring(search.best());
    c.k = k;
    return c;
}

} // namespace injcol
