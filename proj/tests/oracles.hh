#pragma once

// Independent reference implementations used as test oracles. Nothing here calls the
// library's solvers; only the Graph container is shared.

#include <l21/colouring.hh>
#include <l21/graph.hh>
#include <l21/nae.hh>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using l21::Graph;
using l21::VertexId;

inline std::vector<std::vector<bool>> adjacency(const Graph& g)
{
    std::vector<std::vector<bool>> adj(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
    for (const auto& e : g.edges())
        adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
}

/// Every vertex of degree >= min_degree has exactly one neighbour of its own colour.
/// Bit v of mask set means White.
inline bool matching_ok(const Graph& g, std::uint64_t mask, int min_degree)
{
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < min_degree)
            continue;
        int same = 0;
        for (VertexId w : g.neighbours(v))
            same += ((mask >> v) & 1) == ((mask >> w) & 1);
        if (same != 1)
            return false;
    }
    return true;
}

/// matching_ok for colourings too large for a bitmask.
inline bool colouring_ok(const Graph& g, const l21::TwoColouring& c, int min_degree)
{
    if (static_cast<int>(c.size()) != g.num_vertices())
        return false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < min_degree)
            continue;
        int same = 0;
        for (VertexId w : g.neighbours(v))
            same += c[v] == c[w];
        if (same != 1)
            return false;
    }
    return true;
}

/// All almost two-coloured perfect matchings, as White bitmasks, by plain sweep.
inline std::vector<std::uint64_t> almost_matchings(const Graph& g)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_vertices()); ++mask)
        if (matching_ok(g, mask, 2))
            out.push_back(mask);
    return out;
}

inline bool has_perfect_matching_colouring(const Graph& g)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_vertices()); ++mask)
        if (matching_ok(g, mask, 0))
            return true;
    return false;
}

inline l21::Colour colour_of(std::uint64_t mask, VertexId v)
{
    return ((mask >> v) & 1) ? l21::Colour::White : l21::Colour::Black;
}

/// Whether pinned colours extend to a colouring in which every vertex of degree >=
/// min_degree has exactly one same-coloured neighbour. Plain backtracking in id order,
/// pruning a vertex once it has two same-coloured neighbours or all neighbours fixed.
inline bool colouring_extends(const Graph& g, const std::vector<int>& pinned, int min_degree)
{
    const int n = g.num_vertices();
    std::vector<int> colour(pinned);
    colour.resize(n, -1);
    auto vertex_ok = [&](int v) {
        if (g.degree(v) < min_degree || colour[v] < 0)
            return true;
        int same = 0, open = 0;
        for (VertexId w : g.neighbours(v)) {
            if (colour[w] < 0)
                ++open;
            else
                same += colour[w] == colour[v];
        }
        return same <= 1 && same + open >= 1;
    };
    auto local_ok = [&](int v) {
        if (!vertex_ok(v))
            return false;
        for (VertexId w : g.neighbours(v))
            if (!vertex_ok(w))
                return false;
        return true;
    };
    for (int v = 0; v < n; ++v)
        if (!vertex_ok(v))
            return false;
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (colour[v] < 0)
            order.push_back(v);
    auto recurse = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size())
            return true;
        const int v = order[i];
        for (int c = 0; c < 2; ++c) {
            colour[v] = c;
            if (local_ok(v) && self(self, i + 1))
                return true;
        }
        colour[v] = -1;
        return false;
    };
    return recurse(recurse, 0);
}

/// Distance-one and distance-two conflict check for a full labelling.
inline bool labelling_ok(const Graph& g, const std::vector<int>& label, int k)
{
    const auto adj = adjacency(g);
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v)
        if (label[v] < 0 || label[v] > k)
            return false;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            if (adj[v][w]) {
                if (std::abs(label[v] - label[w]) < 2)
                    return false;
                continue;
            }
            bool common = false;
            for (int x = 0; x < n && !common; ++x)
                common = adj[v][x] && adj[w][x];
            if (common && label[v] == label[w])
                return false;
        }
    return true;
}

/// The same conditions phrased per vertex: neighbours at least two apart from it and
/// pairwise distinct among themselves. Linear in the sum of squared degrees.
inline bool labelling_ok_sparse(const Graph& g, const std::vector<int>& label, int k)
{
    if (static_cast<int>(label.size()) != g.num_vertices())
        return false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (label[v] < 0 || label[v] > k)
            return false;
        const auto nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (std::abs(label[v] - label[nb[i]]) < 2)
                return false;
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (label[nb[i]] == label[nb[j]])
                    return false;
        }
    }
    return true;
}

/// Plain backtracking over vertices in id order; each vertex is checked against the
/// already-labelled ones at distance one and two. Pins fix labels up front.
class LabelSearch {
public:
    LabelSearch(const Graph& g, int k, std::vector<std::pair<VertexId, int>> pins = {})
        : g_(g), k_(k), adj_(adjacency(g)), label_(g.num_vertices(), -1)
    {
        const int n = g.num_vertices();
        near_.assign(n, std::vector<bool>(n, false));
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (v != w && !adj_[v][w])
                    for (int x = 0; x < n; ++x)
                        if (adj_[v][x] && adj_[w][x])
                            near_[v][w] = true;
        for (auto [v, value] : pins)
            pinned_.emplace_back(v, value);
    }

    /// Calls visit on every valid labelling; stops when visit returns false.
    template <typename F>
    void run(F&& visit)
    {
        for (auto [v, value] : pinned_)
            label_[v] = value;
        for (auto [v, value] : pinned_)
            if (!fits(v, value))
                return;
        stop_ = false;
        recurse(0, visit);
    }

    bool feasible()
    {
        bool found = false;
        run([&](const std::vector<int>&) {
            found = true;
            return false;
        });
        return found;
    }

private:
    bool fits(int v, int value) const
    {
        for (int w = 0; w < g_.num_vertices(); ++w) {
            if (w == v || label_[w] < 0)
                continue;
            if (adj_[v][w] && std::abs(value - label_[w]) < 2)
                return false;
            if (near_[v][w] && value == label_[w])
                return false;
        }
        return true;
    }

    bool is_pinned(int v) const
    {
        for (auto [p, value] : pinned_)
            if (p == v)
                return true;
        return false;
    }

    template <typename F>
    void recurse(int v, F& visit)
    {
        if (stop_)
            return;
        if (v == g_.num_vertices()) {
            if (!visit(label_))
                stop_ = true;
            return;
        }
        if (is_pinned(v)) {
            recurse(v + 1, visit);
            return;
        }
        for (int value = 0; value <= k_ && !stop_; ++value)
            if (fits(v, value)) {
                label_[v] = value;
                recurse(v + 1, visit);
                label_[v] = -1;
            }
    }

    const Graph& g_;
    int k_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<bool>> near_;
    std::vector<int> label_;
    std::vector<std::pair<VertexId, int>> pinned_;
    bool stop_ = false;
};

/// Clause-by-clause NAE check, independent of the library's evaluator.
inline bool nae_ok(const l21::Nae3SatFormula& f, const std::vector<bool>& value)
{
    for (const auto& clause : f.clauses) {
        int trues = 0;
        for (const auto& lit : clause)
            trues += value[lit.var - 1] == lit.positive;
        if (trues == 0 || trues == 3)
            return false;
    }
    return true;
}

inline std::vector<std::vector<bool>> nae_solutions(const l21::Nae3SatFormula& f)
{
    std::vector<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
        std::vector<bool> value(f.num_vars);
        for (int v = 0; v < f.num_vars; ++v)
            value[v] = (mask >> v) & 1;
        if (nae_ok(f, value))
            out.push_back(value);
    }
    return out;
}

/// Erdos-Renyi graph with n vertices and edge probability p.
inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(l21::Role::Original, "v" + std::to_string(v));
    std::bernoulli_distribution coin(p);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng))
                g.add_edge(a, b);
    return g;
}

/// Boundary behaviour of the edge gadget, written out by hand for L(u), L(v) in {0, k}.
inline std::set<std::array<int, 4>> edge_gadget_table(int k)
{
    return {
        {0, 0, 2, k}, {0, 0, k, 2}, {0, 0, k - 2, k}, {0, 0, k, k - 2},
        {k, k, 2, 0}, {k, k, 0, 2}, {k, k, k - 2, 0}, {k, k, 0, k - 2},
        {k, 0, 1, k - 1},
        {0, k, k - 1, 1},
    };
}

} // namespace oracle
