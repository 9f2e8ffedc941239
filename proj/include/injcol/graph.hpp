#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace injcol
{

using VertexId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

class GraphError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Fixed-universe bitset over [0, n).
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe)
        , words_((universe + 63) / 64, 0)
    {
    }
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
        : VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    std::size_t universe() const { return universe_; }

    void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(VertexId v) const
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    template <class F> void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                f(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<VertexId> to_vector() const
    {
        std::vector<VertexId> out;
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices [0, n), stored as bitset
/// rows of `words()` 64-bit words each.
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Builds a graph from an edge list; rejects out-of-range endpoints,
    /// self-loops and duplicate pairs.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const { return n_; }
    std::size_t size() const { return m_; }
    std::size_t words() const { return words_; }

    bool adjacent(VertexId u, VertexId v) const
    {
        return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }
    std::size_t degree(VertexId v) const;

    std::span<const std::uint64_t> row(VertexId v) const
    {
        return {bits_.data() + v * words_, words_};
    }
    /// Single-word row; only meaningful when order() <= 64.
    std::uint64_t row64(VertexId v) const { return words_ ? bits_[v * words_] : 0; }

    VertexSet neighborhood(VertexId v) const;
    std::vector<VertexId> neighbor_list(VertexId v) const;

    /// Edges with u < v, sorted lexicographically.
    EdgeList edges() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    void set_bit(VertexId u, VertexId v)
    {
        bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable staging area used to assemble graphs before freezing them.
class GraphBuilder
{
public:
    explicit GraphBuilder(std::size_t n = 0)
        : adj_(n)
    {
    }
    explicit GraphBuilder(const Graph& g);

    std::size_t order() const { return adj_.size(); }
    VertexId add_vertex();
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const;

    Graph build() const;

private:
    void check(VertexId u, VertexId v) const;
    std::vector<std::vector<VertexId>> adj_;
};

VertexSet neighbors(const Graph& g, VertexId v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);
std::vector<std::size_t> degree_sequence(const Graph& g);

/// Replaces e by a path of length two through a fresh vertex (index n).
std::pair<Graph, VertexId> subdivide_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);
Graph delete_edge(const Graph& g, Edge e);
/// Removes v; higher indices shift down by one.
Graph delete_vertex(const Graph& g, VertexId v);
Graph add_vertex(const Graph& g);

/// Induced subgraph on the kept vertices, relabelled in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

std::string to_string(Edge e);

} // namespace injcol
