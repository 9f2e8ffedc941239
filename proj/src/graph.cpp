#include "injcol/graph.hpp"

#include <algorithm>

namespace injcol
{

Graph::Graph(std::size_t n)
    : n_(n)
    , words_((n + 63) / 64)
    , bits_(n * ((n + 63) / 64), 0)
{
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw GraphError("edge " + to_string(e) + " has an endpoint outside [0, " +
                             std::to_string(n) + ")");
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (g.adjacent(e.u, e.v))
            throw GraphError("duplicate edge " + to_string(e));
        g.set_bit(e.u, e.v);
        g.set_bit(e.v, e.u);
        ++g.m_;
    }
    return g;
}

std::size_t Graph::degree(VertexId v) const
{
    std::size_t d = 0;
    for (auto w : row(v))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

VertexSet Graph::neighborhood(VertexId v) const
{
    VertexSet s(n_);
    std::copy(row(v).begin(), row(v).end(), s.words().begin());
    return s;
}

std::vector<VertexId> Graph::neighbor_list(VertexId v) const
{
    std::vector<VertexId> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto w = r[i];
        while (w) {
            out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

EdgeList Graph::edges() const
{
    EdgeList out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
        for (auto v : neighbor_list(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

GraphBuilder::GraphBuilder(const Graph& g)
    : adj_(g.order())
{
    for (VertexId v = 0; v < g.order(); ++v)
        adj_[v] = g.neighbor_list(v);
}

VertexId GraphBuilder::add_vertex()
{
    adj_.emplace_back();
    return static_cast<VertexId>(adj_.size() - 1);
}

void GraphBuilder::check(VertexId u, VertexId v) const
{
    if (u >= adj_.size() || v >= adj_.size())
        throw GraphError("edge " + to_string({u, v}) + " has an endpoint outside [0, " +
                         std::to_string(adj_.size()) + ")");
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const
{
    check(u, v);
    return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
}

void GraphBuilder::add_edge(VertexId u, VertexId v)
{
    if (has_edge(u, v))
        throw GraphError("duplicate edge " + to_string({u, v}));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

void GraphBuilder::remove_edge(VertexId u, VertexId v)
{
    if (!has_edge(u, v))
        throw GraphError("edge " + to_string({u, v}) + " is not present");
    std::erase(adj_[u], v);
    std::erase(adj_[v], u);
}

std::size_t GraphBuilder::degree(VertexId v) const { return adj_.at(v).size(); }

Graph GraphBuilder::build() const
{
    EdgeList es;
    for (VertexId u = 0; u < adj_.size(); ++u)
        for (auto v : adj_[u])
            if (u < v)
                es.push_back({u, v});
    return Graph::from_edges(adj_.size(), es);
}

VertexSet neighbors(const Graph& g, VertexId v)
{
    if (v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    return g.neighborhood(v);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s)
{
    VertexSet out(g.order());
    s.for_each([&](VertexId v) {
        out.insert(v);
        out |= g.neighborhood(v);
    });
    return out;
}

std::size_t max_degree(const Graph& g)
{
    std::size_t d = 0;
    for (VertexId v = 0; v < g.order(); ++v)
        d = std::max(d, g.degree(v));
    return d;
}

std::size_t min_degree(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    std::size_t d = g.order();
    for (VertexId v = 0; v < g.order(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

std::vector<std::size_t> degree_sequence(const Graph& g)
{
    std::vector<std::size_t> ds(g.order());
    for (VertexId v = 0; v < g.order(); ++v)
        ds[v] = g.degree(v);
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

std::pair<Graph, VertexId> subdivide_edge(const Graph& g, Edge e)
{
    if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
        throw GraphError("cannot subdivide absent edge " + to_string(e));
    GraphBuilder b(g);
    b.remove_edge(e.u, e.v);
    auto x = b.add_vertex();
    b.add_edge(e.u, x);
    b.add_edge(x, e.v);
    return {b.build(), x};
}

Graph add_edge(const Graph& g, Edge e)
{
    GraphBuilder b(g);
    b.add_edge(e.u, e.v);
    return b.build();
}

Graph delete_edge(const Graph& g, Edge e)
{
    GraphBuilder b(g);
    b.remove_edge(e.u, e.v);
    return b.build();
}

Graph delete_vertex(const Graph& g, VertexId v)
{
    if (v >= g.order())
        throw GraphError("cannot delete absent vertex " + std::to_string(v));
    VertexSet keep(g.order());
    for (VertexId x = 0; x < g.order(); ++x)
        if (x != v)
            keep.insert(x);
    return induced_subgraph(g, keep);
}

Graph add_vertex(const Graph& g)
{
    GraphBuilder b(g);
    b.add_vertex();
    return b.build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    std::vector<VertexId> index(g.order(), 0);
    auto kept = keep.to_vector();
    for (std::size_t i = 0; i < kept.size(); ++i)
        index[kept[i]] = static_cast<VertexId>(i);
    EdgeList es;
    for (auto e : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v))
            es.push_back({index[e.u], index[e.v]});
    return Graph::from_edges(kept.size(), es);
}

std::string to_string(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

} // namespace injcol
