#include "injcol/metrics.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace injcol
{

std::ostream& operator<<(std::ostream& os, Length l)
{
    if (l.is_infinite())
        return os << "inf";
    return os << l.value();
}

ConflictGraph conflict_graph(const Graph& g)
{
    const auto n = g.order();
    const auto words = g.words();
    std::vector<std::uint64_t> rows(n * words, 0);
    for (VertexId w = 0; w < n; ++w) {
        auto nw = g.row(w);
        g.neighborhood(w).for_each([&](VertexId u) {
            for (std::size_t i = 0; i < words; ++i)
                rows[u * words + i] |= nw[i];
        });
    }
    EdgeList es;
    for (VertexId u = 0; u < n; ++u) {
        rows[u * words + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
        for (VertexId v = u + 1; v < n; ++v)
            if ((rows[u * words + (v >> 6)] >> (v & 63)) & 1U)
                es.push_back({u, v});
    }
    return {g, Graph::from_edges(n, es)};
}

namespace
{

// BFS distances from s; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs(const Graph& g, VertexId s)
{
    std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        g.neighborhood(x).for_each([&](VertexId y) {
            if (dist[y] == std::numeric_limits<std::size_t>::max()) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        });
    }
    return dist;
}

} // namespace

Girth girth(const Graph& g)
{
    const auto n = g.order();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n);
    std::vector<std::int64_t> parent(n);
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<VertexId> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            if (2 * dist[x] + 1 >= best)
                break;
            for (auto y : g.neighbor_list(x)) {
                if (dist[y] == std::numeric_limits<std::size_t>::max()) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != static_cast<std::int64_t>(y)) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<std::size_t>::max() ? Girth::infinite() : Girth(best);
}

Length diameter(const Graph& g)
{
    std::size_t diam = 0;
    for (VertexId s = 0; s < g.order(); ++s)
        for (auto d : bfs(g, s)) {
            if (d == std::numeric_limits<std::size_t>::max())
                return Length::infinite();
            diam = std::max(diam, d);
        }
    return Length(diam);
}

std::size_t component_count(const Graph& g)
{
    std::vector<bool> seen(g.order(), false);
    std::size_t count = 0;
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        ++count;
        auto dist = bfs(g, s);
        for (VertexId v = 0; v < g.order(); ++v)
            if (dist[v] != std::numeric_limits<std::size_t>::max())
                seen[v] = true;
    }
    return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::vector<VertexId> cut_vertices(const Graph& g)
{
    const auto n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> cut(n, false);
    int timer = 0;
    std::function<void(VertexId, std::int64_t)> visit = [&](VertexId v, std::int64_t parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (auto w : g.neighbor_list(v)) {
            if (disc[w] < 0) {
                ++children;
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent >= 0 && low[w] >= disc[v])
                    cut[v] = true;
            } else if (static_cast<std::int64_t>(w) != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent < 0 && children > 1)
            cut[v] = true;
    };
    for (VertexId v = 0; v < n; ++v)
        if (disc[v] < 0)
            visit(v, -1);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
        if (cut[v])
            out.push_back(v);
    return out;
}

namespace
{

// Unit vertex-capacity max-flow between non-adjacent s and t, stopping once
// `limit` internally disjoint paths are found.
class DisjointPaths
{
public:
    explicit DisjointPaths(const Graph& g)
        : g_(g)
        , head_(2 * g.order(), -1)
    {
    }

    std::size_t count(VertexId s, VertexId t, std::size_t limit)
    {
        build(s, t);
        const int source = static_cast<int>(2 * s + 1);
        const int sink = static_cast<int>(2 * t);
        std::size_t flow = 0;
        std::vector<int> via(head_.size());
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source};
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                int x = queue.front();
                queue.pop_front();
                for (int a = head_[x]; a >= 0; a = arcs_[a].next)
                    if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
                        via[arcs_[a].to] = a;
                        queue.push_back(arcs_[a].to);
                    }
            }
            if (via[sink] == -1)
                break;
            for (int x = sink; x != source;) {
                int a = via[x];
                --arcs_[a].cap;
                ++arcs_[a ^ 1].cap;
                x = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int cap;
        int next;
    };

    void arc(int from, int to, int cap)
    {
        arcs_.push_back({to, cap, head_[from]});
        head_[from] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({from, 0, head_[to]});
        head_[to] = static_cast<int>(arcs_.size() - 1);
    }

    // Vertex v becomes in-node 2v and out-node 2v+1.
    void build(VertexId s, VertexId t)
    {
        const int big = static_cast<int>(g_.order()) + 1;
        arcs_.clear();
        std::fill(head_.begin(), head_.end(), -1);
        for (VertexId v = 0; v < g_.order(); ++v)
            arc(static_cast<int>(2 * v), static_cast<int>(2 * v + 1), (v == s || v == t) ? big : 1);
        for (auto e : g_.edges()) {
            arc(static_cast<int>(2 * e.u + 1), static_cast<int>(2 * e.v), 1);
            arc(static_cast<int>(2 * e.v + 1), static_cast<int>(2 * e.u), 1);
        }
    }

    const Graph& g_;
    std::vector<Arc> arcs_;
    std::vector<int> head_;
};

} // namespace

bool vertex_connectivity_at_least(const Graph& g, std::size_t k)
{
    const auto n = g.order();
    if (k == 0)
        return true;
    if (n <= k)
        return false;
    if (!is_connected(g))
        return false;
    if (k == 1)
        return true;
    // Any cut of size < k misses one of the first k vertices.
    DisjointPaths paths(g);
    for (VertexId s = 0; s < k; ++s)
        for (VertexId t = 0; t < n; ++t) {
            if (t == s || g.adjacent(s, t) || (t < k && t < s))
                continue;
            if (paths.count(s, t, k) < k)
                return false;
        }
    return true;
}

bool every_edge_on_triangle(const Graph& g)
{
    for (auto e : g.edges()) {
        auto common = g.neighborhood(e.u);
        common &= g.neighborhood(e.v);
        if (common.empty())
            return false;
    }
    return true;
}

namespace
{

class LeftRightTest
{
public:
    explicit LeftRightTest(const Graph& g)
        : n_(g.order())
        , adj_(g.order())
        , height_(g.order(), -1)
        , parent_edge_(g.order(), -1)
        , out_(g.order())
    {
        auto es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i) {
            adj_[es[i].u].push_back({es[i].v, static_cast<int>(i)});
            adj_[es[i].v].push_back({es[i].u, static_cast<int>(i)});
        }
        const auto m = es.size();
        oriented_.assign(m, false);
        src_.assign(m, -1);
        dst_.assign(m, -1);
        lowpt_.assign(m, 0);
        lowpt2_.assign(m, 0);
        nesting_.assign(m, 0);
        ref_.assign(m, -1);
        lowpt_edge_.assign(m, -1);
        stack_bottom_.assign(m, 0);
    }

    bool run()
    {
        std::vector<int> roots;
        for (std::size_t v = 0; v < n_; ++v)
            if (height_[v] < 0) {
                height_[v] = 0;
                roots.push_back(static_cast<int>(v));
                orient(static_cast<int>(v));
            }
        for (auto& edges : out_)
            std::stable_sort(edges.begin(), edges.end(),
                             [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        for (int r : roots)
            if (!test(r))
                return false;
        return true;
    }

private:
    struct Interval {
        int low = -1;
        int high = -1;
        bool empty() const { return low < 0 && high < 0; }
    };
    struct ConflictPair {
        Interval left;
        Interval right;
    };

    bool conflicting(const Interval& i, int b) const
    {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }
    int lowest(const ConflictPair& p) const
    {
        if (p.left.empty())
            return lowpt_[p.right.low];
        if (p.right.empty())
            return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    void orient(int v)
    {
        const int e = parent_edge_[v];
        for (auto [w, idx] : adj_[v]) {
            if (oriented_[idx])
                continue;
            oriented_[idx] = true;
            src_[idx] = v;
            dst_[idx] = static_cast<int>(w);
            out_[v].push_back(idx);
            lowpt_[idx] = lowpt2_[idx] = height_[v];
            if (height_[w] < 0) {
                parent_edge_[w] = idx;
                height_[w] = height_[v] + 1;
                orient(static_cast<int>(w));
            } else {
                lowpt_[idx] = height_[w];
            }
            nesting_[idx] = 2 * lowpt_[idx] + (lowpt2_[idx] < height_[v] ? 1 : 0);
            if (e >= 0) {
                if (lowpt_[idx] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[idx]);
                    lowpt_[e] = lowpt_[idx];
                } else if (lowpt_[idx] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[idx]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[idx]);
                }
            }
        }
    }

    bool test(int v)
    {
        const int e = parent_edge_[v];
        const auto& outs = out_[v];
        for (std::size_t i = 0; i < outs.size(); ++i) {
            const int ei = outs[i];
            const int w = dst_[ei];
            stack_bottom_[ei] = stack_.size();
            if (ei == parent_edge_[w]) {
                if (!test(w))
                    return false;
            } else {
                lowpt_edge_[ei] = ei;
                stack_.push_back({Interval{}, Interval{ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {
                if (i == 0)
                    lowpt_edge_[e] = lowpt_edge_[ei];
                else if (!add_constraints(ei, e))
                    return false;
            }
        }
        if (e >= 0)
            remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e)
    {
        ConflictPair p;
        do {
            auto q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty())
                std::swap(q.left, q.right);
            if (!q.left.empty())
                return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right.high = q.right.high;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            } else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (stack_.size() != stack_bottom_[ei]);

        while (!stack_.empty() &&
               (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            auto q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei))
                std::swap(q.left, q.right);
            if (conflicting(q.right, ei))
                return false;
            if (p.right.low >= 0)
                ref_[p.right.low] = q.right.high;
            if (q.right.low >= 0)
                p.right.low = q.right.low;
            if (p.left.empty())
                p.left.high = q.left.high;
            else
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty()))
            stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e)
    {
        const int u = src_[e];
        while (!stack_.empty() && lowest(stack_.back()) == height_[u])
            stack_.pop_back();
        if (!stack_.empty()) {
            auto p = stack_.back();
            stack_.pop_back();
            while (p.left.high >= 0 && dst_[p.left.high] == u)
                p.left.high = ref_[p.left.high];
            if (p.left.high < 0 && p.left.low >= 0) {
                ref_[p.left.low] = p.right.low;
                p.left.low = -1;
            }
            while (p.right.high >= 0 && dst_[p.right.high] == u)
                p.right.high = ref_[p.right.high];
            if (p.right.high < 0 && p.right.low >= 0) {
                ref_[p.right.low] = p.left.low;
                p.right.low = -1;
            }
            stack_.push_back(p);
        }
        if (lowpt_[e] < height_[u] && !stack_.empty()) {
            const int hl = stack_.back().left.high;
            const int hr = stack_.back().right.high;
            ref_[e] = (hl >= 0 && (hr < 0 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
        }
    }

    std::size_t n_;
    std::vector<std::vector<std::pair<VertexId, int>>> adj_;
    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> out_;
    std::vector<bool> oriented_;
    std::vector<int> src_, dst_;
    std::vector<int> lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_;
    std::vector<std::size_t> stack_bottom_;
    std::vector<ConflictPair> stack_;
};

} // namespace

bool is_planar(const Graph& g)
{
    const auto n = g.order();
    if (n > 2 && g.size() > 3 * n - 6)
        return false;
    if (n < 5 || g.size() < 9)
        return true;
    return LeftRightTest(g).run();
}

std::vector<std::pair<VertexId, VertexId>> unique_length2_path_pairs_through(const Graph& g, Edge e)
{
    if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
        throw GraphError("edge " + to_string(e) + " is not in the graph");
    std::vector<std::pair<VertexId, VertexId>> out;
    // x - mid - y with {x, mid} = {u, v}
    auto scan = [&](VertexId end, VertexId mid) {
        g.neighborhood(mid).for_each([&](VertexId y) {
            if (y == end)
                return;
            auto common = g.neighborhood(end);
            common &= g.neighborhood(y);
            if (common.count() == 1)
                out.emplace_back(std::min(end, y), std::max(end, y));
        });
    };
    scan(e.u, e.v);
    scan(e.v, e.u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace injcol
