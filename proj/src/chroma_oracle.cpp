#include "injcol/chroma_oracle.hpp"

#include "injcol/metrics.hpp"

#include <algorithm>

namespace injcol
{

namespace
{

// Next vertex has the most already-ordered neighbours; ties by degree, then index.
std::vector<VertexId> max_cardinality_order(const Graph& g)
{
    const auto n = g.order();
    std::vector<VertexId> order;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> weight(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        VertexId pick = 0;
        bool have = false;
        for (VertexId v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (!have || weight[v] > weight[pick] ||
                (weight[v] == weight[pick] && g.degree(v) > g.degree(pick))) {
                pick = v;
                have = true;
            }
        }
        placed[pick] = true;
        order.push_back(pick);
        for (auto w : g.neighbor_list(pick))
            ++weight[w];
    }
    return order;
}

class KColouring
{
public:
    KColouring(const Graph& g, std::size_t k, std::optional<std::uint64_t> budget, std::uint64_t& nodes)
        : order_(max_cardinality_order(g))
        , k_(k)
        , budget_(budget)
        , nodes_(nodes)
        , colour_(g.order(), -1)
    {
        earlier_.resize(g.order());
        std::vector<std::size_t> position(g.order());
        for (std::size_t i = 0; i < order_.size(); ++i)
            position[order_[i]] = i;
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (auto w : g.neighbor_list(order_[i]))
                if (position[w] < i)
                    earlier_[i].push_back(w);
    }

    bool solve() { return extend(0, 0); }
    bool exhausted() const { return exhausted_; }
    const std::vector<std::int32_t>& colours() const { return colour_; }

private:
    bool extend(std::size_t i, std::size_t used)
    {
        if (i == order_.size())
            return true;
        if (budget_ && ++nodes_ > *budget_) {
            exhausted_ = true;
            return false;
        }
        const VertexId v = order_[i];
        const std::size_t top = std::min(k_, used + 1);
        for (std::size_t c = 0; c < top; ++c) {
            bool clash = false;
            for (auto w : earlier_[i])
                if (colour_[w] == static_cast<std::int32_t>(c)) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            colour_[v] = static_cast<std::int32_t>(c);
            if (extend(i + 1, std::max(used, c + 1)))
                return true;
            if (exhausted_)
                return false;
        }
        colour_[v] = -1;
        return false;
    }

    std::vector<VertexId> order_;
    std::vector<std::vector<VertexId>> earlier_;
    std::size_t k_;
    std::optional<std::uint64_t> budget_;
    std::uint64_t& nodes_;
    std::vector<std::int32_t> colour_;
    bool exhausted_ = false;
};

} // namespace

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.colour.size() != g.order())
        return false;
    for (auto x : c.colour)
        if (x < 0 || static_cast<std::size_t>(x) >= c.k)
            return false;
    for (auto e : g.edges())
        if (c.colour[e.u] == c.colour[e.v])
            return false;
    return true;
}

ChromaResult chromatic_number(const Graph& g, std::optional<std::uint64_t> node_budget)
{
    if (g.order() == 0)
        return {};
    std::uint64_t nodes = 0;
    for (std::size_t k = 1;; ++k) {
        KColouring attempt(g, k, node_budget, nodes);
        if (attempt.solve())
            return {k, Coloring{attempt.colours(), k}, true};
        if (attempt.exhausted()) {
            // Fall back to one colour per vertex as the witness.
            Coloring trivial{std::vector<std::int32_t>(g.order()), g.order()};
            for (VertexId v = 0; v < g.order(); ++v)
                trivial.colour[v] = static_cast<std::int32_t>(v);
            return {g.order(), trivial, false};
        }
    }
}

std::size_t injective_via_oracle(const Graph& g) { return chromatic_number(conflict_graph(g).conflicts).chi; }

} // namespace injcol
