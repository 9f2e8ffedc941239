#include "injcol/canonical.hpp"

#include "injcol/codec.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace injcol
{

namespace
{

using Cells = std::vector<std::uint64_t>;

class UnionFind
{
public:
    explicit UnionFind(std::size_t n)
        : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    VertexId find(VertexId x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(VertexId a, VertexId b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<VertexId> parent_;
};

class CanonSearch
{
public:
    CanonSearch(const Graph& g)
        : n_(g.order())
        , rows_(g.order())
    {
        if (n_ > 64)
            throw GraphError("canonical labelling supports at most 64 vertices");
        for (VertexId v = 0; v < n_; ++v)
            rows_[v] = g.row64(v);
    }

    CanonicalForm run(Cells cells)
    {
        refine(cells);
        node(cells);

        CanonicalForm out;
        out.position.resize(n_);
        for (VertexId k = 0; k < n_; ++k)
            out.position[best_lab_[k]] = k;
        out.generators = generators_;
        UnionFind uf(n_);
        for (const auto& gen : generators_)
            for (VertexId v = 0; v < n_; ++v)
                uf.unite(v, gen[v]);
        out.orbit.resize(n_);
        for (VertexId v = 0; v < n_; ++v)
            out.orbit[v] = uf.find(v);
        EdgeList es;
        for (VertexId a = 0; a < n_; ++a)
            for (VertexId b = a + 1; b < n_; ++b)
                if ((best_cert_[a] >> b) & 1U)
                    es.push_back({a, b});
        out.certificate = write_graph6(Graph::from_edges(n_, es));
        return out;
    }

private:
    // Splits cells by neighbour counts into each splitter until equitable.
    // Sub-cells are ordered by increasing count, so the result depends only
    // on structure.
    void refine(Cells& cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size(); ++s) {
                const auto splitter = cells[s];
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    const auto cell = cells[i];
                    if (std::popcount(cell) == 1)
                        continue;
                    std::map<int, std::uint64_t> parts;
                    for (auto w = cell; w; w &= w - 1) {
                        auto x = std::countr_zero(w);
                        parts[std::popcount(rows_[x] & splitter)] |= std::uint64_t{1} << x;
                    }
                    if (parts.size() == 1)
                        continue;
                    Cells replacement;
                    for (auto& [count, bits] : parts)
                        replacement.push_back(bits);
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(),
                                 replacement.end());
                    i += replacement.size() - 1;
                    changed = true;
                }
            }
        }
    }

    void node(const Cells& cells)
    {
        auto target = std::find_if(cells.begin(), cells.end(), [](auto c) { return std::popcount(c) > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const std::size_t depth = path_.size();
        const auto ti = static_cast<std::size_t>(target - cells.begin());
        std::vector<VertexId> tried;
        for (auto w = cells[ti]; w; w &= w - 1) {
            const auto v = static_cast<VertexId>(std::countr_zero(w));
            if (equivalent_to_tried(v, tried))
                continue;
            tried.push_back(v);

            Cells child = cells;
            const auto bit = std::uint64_t{1} << v;
            child[ti] = cells[ti] & ~bit;
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(ti), bit);
            refine(child);
            path_.push_back(v);
            node(child);
            path_.pop_back();

            if (backjump_ >= 0) {
                if (static_cast<std::ptrdiff_t>(depth) > backjump_)
                    return;
                backjump_ = -1;
            }
        }
    }

    // v is skipped if an automorphism fixing the current path maps it onto a
    // vertex that has already been explored at this node.
    bool equivalent_to_tried(VertexId v, const std::vector<VertexId>& tried) const
    {
        if (tried.empty())
            return false;
        UnionFind uf(n_);
        for (const auto& gen : generators_) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](VertexId p) { return gen[p] == p; });
            if (!fixes)
                continue;
            for (VertexId x = 0; x < n_; ++x)
                uf.unite(x, gen[x]);
        }
        const auto root = uf.find(v);
        return std::any_of(tried.begin(), tried.end(), [&](VertexId t) { return uf.find(t) == root; });
    }

    void leaf(const Cells& cells)
    {
        std::vector<VertexId> lab(n_), pos(n_);
        for (VertexId k = 0; k < n_; ++k) {
            lab[k] = static_cast<VertexId>(std::countr_zero(cells[k]));
            pos[lab[k]] = k;
        }
        std::vector<std::uint64_t> cert(n_, 0);
        for (VertexId k = 0; k < n_; ++k)
            for (auto w = rows_[lab[k]]; w; w &= w - 1)
                cert[k] |= std::uint64_t{1} << pos[static_cast<VertexId>(std::countr_zero(w))];

        if (first_lab_.empty()) {
            first_lab_ = best_lab_ = lab;
            first_cert_ = best_cert_ = cert;
            first_path_ = path_;
            return;
        }
        if (cert == first_cert_) {
            record(first_lab_, lab);
            std::size_t common = 0;
            while (common < path_.size() && common < first_path_.size() && path_[common] == first_path_[common])
                ++common;
            backjump_ = static_cast<std::ptrdiff_t>(common);
        } else if (cert == best_cert_) {
            record(best_lab_, lab);
        } else if (cert < best_cert_) {
            best_cert_ = cert;
            best_lab_ = lab;
        }
    }

    void record(const std::vector<VertexId>& from, const std::vector<VertexId>& to)
    {
        Permutation gen(n_);
        for (VertexId k = 0; k < n_; ++k)
            gen[from[k]] = to[k];
        generators_.push_back(std::move(gen));
    }

    std::size_t n_;
    std::vector<std::uint64_t> rows_;
    std::vector<VertexId> path_;
    std::vector<VertexId> first_path_;
    std::vector<VertexId> first_lab_, best_lab_;
    std::vector<std::uint64_t> first_cert_, best_cert_;
    std::vector<Permutation> generators_;
    std::ptrdiff_t backjump_ = -1;
};

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    std::vector<std::uint32_t> colours(g.order(), 0);
    return canonical_form(g, colours);
}

CanonicalForm canonical_form(const Graph& g, std::span<const std::uint32_t> colours)
{
    if (colours.size() != g.order())
        throw GraphError("colour vector does not match graph order");
    CanonSearch search(g);
    std::map<std::uint32_t, std::uint64_t> groups;
    for (VertexId v = 0; v < g.order(); ++v)
        groups[colours[v]] |= std::uint64_t{1} << v;
    Cells cells;
    for (auto& [colour, bits] : groups)
        cells.push_back(bits);
    return search.run(std::move(cells));
}

std::string canonical_certificate(const Graph& g) { return canonical_form(g).certificate; }

Graph relabel(const Graph& g, std::span<const VertexId> position)
{
    EdgeList es;
    for (auto e : g.edges())
        es.push_back({position[e.u], position[e.v]});
    return Graph::from_edges(g.order(), es);
}

} // namespace injcol
