#pragma once

// Brute-force reference implementations. They only use Graph::adjacent and
// order(), so they share no algorithmic code with the library.

#include "injcol/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle
{

using injcol::Graph;
using injcol::VertexId;

inline std::vector<std::vector<bool>> matrix(const Graph& g)
{
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = 0; v < g.order(); ++v)
            a[u][v] = g.adjacent(u, v);
    return a;
}

/// uv conflict iff some w is adjacent to both.
inline std::vector<std::vector<bool>> conflicts(const Graph& g)
{
    const auto n = g.order();
    auto a = matrix(g);
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                if (u != v && a[u][w] && a[v][w])
                    c[u][v] = true;
    return c;
}

/// Calls f with each set partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<int>&, int)>& f)
{
    std::vector<int> rgs(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
        if (i == n) {
            f(rgs, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

/// Chromatic number of the graph given by adjacency matrix `a`, minimised over
/// all set partitions into independent blocks.
inline std::size_t chromatic_number(const std::vector<std::vector<bool>>& a)
{
    const auto n = a.size();
    if (n == 0)
        return 0;
    std::size_t best = n;
    for_each_partition(n, [&](const std::vector<int>& rgs, int blocks) {
        if (static_cast<std::size_t>(blocks) >= best)
            return;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rgs[u] == rgs[v] && a[u][v])
                    return;
        best = static_cast<std::size_t>(blocks);
    });
    return best;
}

inline std::size_t injective_chromatic_number(const Graph& g) { return chromatic_number(conflicts(g)); }

inline bool connected_subset(const std::vector<std::vector<bool>>& a, const std::vector<bool>& keep)
{
    const auto n = a.size();
    std::size_t start = n, total = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (keep[v]) {
            ++total;
            if (start == n)
                start = v;
        }
    if (total == 0)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w)
            if (keep[w] && a[v][w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == total;
}

inline bool connected(const Graph& g) { return connected_subset(matrix(g), std::vector<bool>(g.order(), true)); }

/// More than k vertices and no deletion of fewer than k vertices disconnects.
inline bool k_connected(const Graph& g, std::size_t k)
{
    const auto n = g.order();
    if (n <= k)
        return false;
    auto a = matrix(g);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) >= k)
            continue;
        std::vector<bool> keep(n);
        for (std::size_t v = 0; v < n; ++v)
            keep[v] = !((mask >> v) & 1U);
        if (!connected_subset(a, keep))
            return false;
    }
    return true;
}

/// Wagner: planar iff neither K5 nor K3,3 is a minor. Every minor is a
/// subgraph of the quotient by some partition of V into connected blocks.
inline bool planar(const Graph& g)
{
    const auto n = g.order();
    if (n < 5)
        return true;
    auto a = matrix(g);
    bool found = false;
    for_each_partition(n, [&](const std::vector<int>& rgs, int blocks) {
        if (found || blocks < 5)
            return;
        for (int b = 0; b < blocks; ++b) {
            std::vector<bool> keep(n);
            for (std::size_t v = 0; v < n; ++v)
                keep[v] = rgs[v] == b;
            if (!connected_subset(a, keep))
                return;
        }
        std::vector<std::vector<bool>> q(blocks, std::vector<bool>(blocks, false));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (a[u][v] && rgs[u] != rgs[v])
                    q[rgs[u]][rgs[v]] = true;
        const auto t = static_cast<std::size_t>(blocks);
        // K5 on any five blocks.
        for (std::uint32_t m = 0; m < (1U << t); ++m) {
            if (__builtin_popcount(m) != 5)
                continue;
            bool all = true;
            for (std::size_t x = 0; x < t && all; ++x)
                for (std::size_t y = x + 1; y < t && all; ++y)
                    if ((m >> x & 1U) && (m >> y & 1U) && !q[x][y])
                        all = false;
            if (all) {
                found = true;
                return;
            }
        }
        // K3,3 on two disjoint triples of blocks.
        for (std::uint32_t l = 0; l < (1U << t); ++l) {
            if (__builtin_popcount(l) != 3)
                continue;
            for (std::uint32_t r = 0; r < (1U << t); ++r) {
                if (__builtin_popcount(r) != 3 || (l & r) || l > r)
                    continue;
                bool all = true;
                for (std::size_t x = 0; x < t && all; ++x)
                    for (std::size_t y = 0; y < t && all; ++y)
                        if ((l >> x & 1U) && (r >> y & 1U) && !q[x][y])
                            all = false;
                if (all) {
                    found = true;
                    return;
                }
            }
        }
    });
    return !found;
}

/// Minimum over all vertex permutations of the upper-triangle bit string.
inline std::string canonical_string(const Graph& g)
{
    const auto n = g.order();
    auto a = matrix(g);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string s;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                s.push_back(a[p[i]][p[j]] ? '1' : '0');
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline std::size_t shortest_cycle(const Graph& g)
{
    // Smallest k such that some closed walk of distinct vertices of length k
    // exists; exhaustive over simple paths.
    const auto n = g.order();
    auto a = matrix(g);
    std::size_t best = 0;
    std::vector<bool> used(n, false);
    std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t v,
                                                                          std::size_t len) {
        if (best && len + 1 >= best)
            return;
        for (std::size_t w = start; w < n; ++w) {
            if (!a[v][w])
                continue;
            if (w == start && len >= 2) {
                best = len + 1;
                continue;
            }
            if (used[w] || w == start)
                continue;
            used[w] = true;
            walk(start, w, len + 1);
            used[w] = false;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        used[s] = true;
        walk(s, s, 0);
        used[s] = false;
    }
    return best; // 0 for forests
}

/// All-pairs distances by Floyd-Warshall; returns 0 for n <= 1 and SIZE_MAX
/// when disconnected.
inline std::size_t diameter(const Graph& g)
{
    const auto n = g.order();
    const std::size_t inf = SIZE_MAX / 4;
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            d[u][v] = u == v ? 0 : g.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v)) ? 1 : inf;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::size_t best = 0;
    for (auto& row : d)
        for (auto x : row)
            best = std::max(best, x);
    return best >= inf ? SIZE_MAX : best;
}

/// Number of unlabelled graphs on n vertices by Burnside's lemma over
/// permutation cycle types.
inline unsigned __int128 unlabelled_graphs(std::size_t n)
{
    unsigned __int128 total = 0;
    std::vector<std::size_t> parts;
    std::vector<unsigned __int128> fact(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i)
        fact[i] = fact[i - 1] * i;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
        if (left == 0) {
            // cycles on unordered pairs for this cycle type
            std::size_t cycles = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                cycles += parts[i] / 2;
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    cycles += std::gcd(parts[i], parts[j]);
            }
            // number of permutations with this cycle type
            unsigned __int128 denom = 1;
            std::size_t run = 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                denom *= parts[i];
                if (i > 0 && parts[i] == parts[i - 1])
                    ++run;
                else
                    run = 1;
                denom *= run;
            }
            total += (fact[n] / denom) * (static_cast<unsigned __int128>(1) << cycles);
            return;
        }
        for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
    return total / fact[n];
}

/// Connected counts from all-graph counts by inverting the Euler transform.
inline std::vector<std::uint64_t> connected_graph_counts(std::size_t max_n)
{
    std::vector<long double> a(max_n + 1), c(max_n + 1, 0), b(max_n + 1, 0);
    for (std::size_t n = 1; n <= max_n; ++n)
        a[n] = static_cast<long double>(unlabelled_graphs(n));
    // a_n = (1/n) sum_{k=1}^n b_k a_{n-k}, a_0 = 1, where b_k = sum_{d|k} d c_d.
    std::vector<long double> A(max_n + 1);
    A[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n)
        A[n] = a[n];
    std::vector<std::uint64_t> out(max_n + 1, 0);
    for (std::size_t n = 1; n <= max_n; ++n) {
        long double s = 0;
        for (std::size_t k = 1; k < n; ++k)
            s += b[k] * A[n - k];
        b[n] = n * A[n] - s;
        long double sum = 0;
        for (std::size_t d = 1; d < n; ++d)
            if (n % d == 0)
                sum += d * c[d];
        c[n] = (b[n] - sum) / n;
        out[n] = static_cast<std::uint64_t>(c[n] + 0.5L);
    }
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    injcol::GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return b.build();
}

/// Every labelled graph on n vertices, as bitmask over the pair order
/// (0,1), (0,2), (1,2), (0,3), ...
inline Graph labelled_graph(std::size_t n, std::uint64_t mask)
{
    injcol::GraphBuilder b(n);
    std::size_t bit = 0;
    for (VertexId v = 1; v < n; ++v)
        for (VertexId u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1U)
                b.add_edge(u, v);
    return b.build();
}

} // namespace oracle
