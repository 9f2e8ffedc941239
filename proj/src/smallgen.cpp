#include "injcol/smallgen.hpp"

#include "injcol/metrics.hpp"

#include <algorithm>
#include <bit>

namespace injcol
{

namespace
{

constexpr std::size_t hard_max_order = 16;

using Rows = std::vector<std::uint64_t>;

Graph to_graph(const Rows& rows)
{
    EdgeList es;
    for (VertexId u = 0; u < rows.size(); ++u)
        for (auto w = rows[u] >> (u + 1); w; w &= w - 1)
            es.push_back({u, static_cast<VertexId>(u + 1 + std::countr_zero(w))});
    return Graph::from_edges(rows.size(), es);
}

bool connected_without(const Rows& rows, VertexId skip)
{
    const auto n = rows.size();
    const std::uint64_t all = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) & ~(std::uint64_t{1} << skip);
    if (!all)
        return true;
    std::uint64_t seen = all & (~all + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (auto w = frontier; w; w &= w - 1)
            next |= rows[static_cast<std::size_t>(std::countr_zero(w))];
        next &= all & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

std::vector<int> vertex_invariant(const Rows& rows, VertexId x)
{
    std::vector<int> inv;
    inv.push_back(std::popcount(rows[x]));
    int tri = 0;
    std::vector<int> nbr;
    for (auto w = rows[x]; w; w &= w - 1) {
        auto y = static_cast<std::size_t>(std::countr_zero(w));
        tri += std::popcount(rows[y] & rows[x]);
        nbr.push_back(std::popcount(rows[y]));
    }
    inv.push_back(tri / 2);
    std::sort(nbr.begin(), nbr.end());
    inv.insert(inv.end(), nbr.begin(), nbr.end());
    return inv;
}

class Generator
{
public:
    Generator(const GenSpec& spec, const std::function<void(const Graph&)>& visit)
        : spec_(spec)
        , visit_(visit)
        , split_level_(spec.order > 3 ? spec.order - 2 : spec.order)
    {
    }

    GenStats run()
    {
        if (spec_.order == 1) {
            if (spec_.min_degree == 0)
                emit(Rows{0});
            return stats_;
        }
        extend(Rows{0}, 0);
        return stats_;
    }

private:
    void emit(const Rows& rows)
    {
        ++stats_.emitted;
        visit_(to_graph(rows));
    }

    void extend(const Rows& parent, std::size_t edges)
    {
        const auto k = parent.size();
        const bool final_level = k + 1 == spec_.order;

        std::vector<int> deg(k);
        std::uint64_t forced = 0, blocked = 0;
        for (std::size_t x = 0; x < k; ++x) {
            deg[x] = std::popcount(parent[x]);
            if (spec_.max_degree && static_cast<std::size_t>(deg[x]) >= *spec_.max_degree)
                blocked |= std::uint64_t{1} << x;
            if (final_level && static_cast<std::size_t>(deg[x]) < spec_.min_degree) {
                if (static_cast<std::size_t>(deg[x]) + 1 < spec_.min_degree)
                    return;
                forced |= std::uint64_t{1} << x;
            }
        }
        if (forced & blocked)
            return;

        const auto aut = canonical_form(to_graph(parent));
        std::vector<std::vector<std::uint64_t>> images;
        for (const auto& gen : aut.generators) {
            std::vector<std::uint64_t> table(std::size_t{1} << k, 0);
            for (std::uint64_t m = 1; m < table.size(); ++m)
                table[m] = table[m & (m - 1)] | (std::uint64_t{1} << gen[static_cast<std::size_t>(std::countr_zero(m))]);
            images.push_back(std::move(table));
        }

        const std::size_t min_size = final_level ? std::max<std::size_t>(spec_.min_degree, spec_.connected ? 1 : 0)
                                                 : (spec_.connected ? 1 : 0);
        Rows child(k + 1);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
            if ((s & forced) != forced || (s & blocked))
                continue;
            const auto d = static_cast<std::size_t>(std::popcount(s));
            if (d < min_size || (spec_.max_degree && d > *spec_.max_degree))
                continue;
            if (final_level && spec_.max_edges && edges + d > *spec_.max_edges)
                continue;
            ++stats_.candidates;

            for (std::size_t x = 0; x < k; ++x)
                child[x] = parent[x] | (((s >> x) & 1U) << k);
            child[k] = s;

            if (!accept(child, s, d, images))
                continue;

            if (split_level_ == k + 1 && spec_.parts > 1 && (split_counter_++ % spec_.parts) != spec_.part)
                continue;

            if (final_level)
                emit(child);
            else
                extend(child, edges + d);
        }
    }

    bool minimal_in_orbit(std::uint64_t s, const std::vector<std::vector<std::uint64_t>>& images) const
    {
        if (images.empty())
            return true;
        std::vector<std::uint64_t> orbit{s};
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& table : images) {
                auto img = table[orbit[i]];
                if (img < s)
                    return false;
                if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                    orbit.push_back(img);
            }
        return true;
    }

    bool accept(const Rows& child, std::uint64_t s, std::size_t d,
                const std::vector<std::vector<std::uint64_t>>& images)
    {
        const auto k = static_cast<VertexId>(child.size() - 1);
        auto eligible = [&](VertexId x) { return !spec_.connected || connected_without(child, x); };

        // The new vertex must have minimum degree among deletion candidates.
        for (VertexId x = 0; x < k; ++x)
            if (static_cast<std::size_t>(std::popcount(child[x])) < d && eligible(x))
                return false;

        if (!minimal_in_orbit(s, images))
            return false;

        if (spec_.planar && !is_planar(to_graph(child)))
            return false;

        const auto mine = vertex_invariant(child, k);
        std::vector<VertexId> ties;
        for (VertexId x = 0; x < k; ++x) {
            if (static_cast<std::size_t>(std::popcount(child[x])) != d || !eligible(x))
                continue;
            auto inv = vertex_invariant(child, x);
            if (inv < mine)
                return false;
            if (inv == mine)
                ties.push_back(x);
        }
        if (ties.empty())
            return true;

        ++stats_.canonical_calls;
        const auto canon = canonical_form(to_graph(child));
        VertexId victim = k;
        for (auto t : ties)
            if (canon.position[t] < canon.position[victim])
                victim = t;
        return canon.orbit[victim] == canon.orbit[k];
    }

    const GenSpec& spec_;
    const std::function<void(const Graph&)>& visit_;
    std::size_t split_level_;
    std::uint64_t split_counter_ = 0;
    GenStats stats_;
};

void validate(const GenSpec& spec)
{
    if (spec.order < 1)
        throw GenSpecError("order must be at least 1");
    const auto ceiling = spec.allow_large ? hard_max_order : smallgen_default_max_order;
    if (spec.order > ceiling)
        throw GenSpecError("order " + std::to_string(spec.order) + " exceeds the supported maximum " +
                           std::to_string(ceiling) + (spec.allow_large ? "" : " (see allow_large)"));
    if (spec.min_degree > spec.order - 1)
        throw GenSpecError("minimum degree exceeds order - 1");
    if (spec.max_edges && *spec.max_edges > spec.order * (spec.order - 1) / 2)
        throw GenSpecError("edge cap exceeds n(n-1)/2");
    if (spec.parts == 0 || spec.part >= spec.parts)
        throw GenSpecError("part must lie in [0, parts)");
}

} // namespace

GenStats generate(const GenSpec& spec, const std::function<void(const Graph&)>& visit)
{
    validate(spec);
    return Generator(spec, visit).run();
}

std::vector<Graph> generate_all(const GenSpec& spec)
{
    std::vector<Graph> out;
    generate(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

GenStats generate_planar_candidates(std::size_t n, const std::function<void(const Graph&)>& visit, std::size_t part,
                                    std::size_t parts)
{
    GenSpec spec;
    spec.order = n;
    spec.min_degree = n >= 3 ? 2 : 0;
    if (n >= 3)
        spec.max_edges = 3 * n - 6;
    spec.connected = true;
    spec.planar = true;
    spec.part = part;
    spec.parts = parts;
    return generate(spec, visit);
}

} // namespace injcol
