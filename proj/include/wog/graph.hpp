#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "wog/monomial.hpp"

namespace wog {

inline constexpr std::size_t kMaxVertices = 16;

/// Oriented edge from -> to, 0-based vertices.
struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph; edges stored as (u, v) with u < v, sorted.
class SimpleGraph {
public:
    SimpleGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(n), adj_(n, 0)
    {
        if (n == 0 || n > kMaxVertices)
            throw Error(ErrorCode::InvalidGraph, "vertex count must be in 1.." + std::to_string(kMaxVertices));
        for (auto& [u, v] : edges) {
            if (u >= n || v >= n)
                throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
            if (u == v)
                throw Error(ErrorCode::InvalidGraph, "loops are not allowed");
            if (u > v)
                std::swap(u, v);
            if (adj_[u] >> v & 1)
                throw Error(ErrorCode::InvalidGraph, "repeated edge");
            adj_[u] |= 1u << v;
            adj_[v] |= 1u << u;
        }
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
    }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    /// Neighbourhood bitmask of v.
    std::uint32_t neighbours(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_.at(v))); }
    bool has_edge(std::size_t u, std::size_t v) const { return u < n_ && v < n_ && (adj_[u] >> v & 1); }
    bool is_leaf(std::size_t v) const { return degree(v) == 1; }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// A simple graph with one orientation per edge and a positive weight per vertex.
class WeightedOrientedGraph {
public:
    WeightedOrientedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::uint32_t> weights)
        : n_(n), edges_(std::move(edges)), weights_(std::move(weights))
    {
        if (n == 0 || n > kMaxVertices)
            throw Error(ErrorCode::InvalidGraph, "vertex count must be in 1.." + std::to_string(kMaxVertices));
        if (weights_.size() != n)
            throw Error(ErrorCode::InvalidGraph, "expected " + std::to_string(n) + " weights, got " +
                                                     std::to_string(weights_.size()));
        for (auto w : weights_)
            if (w < 1)
                throw Error(ErrorCode::InvalidGraph, "weights must be positive");
        std::vector<std::uint32_t> seen(n, 0);
        for (const auto& e : edges_) {
            if (e.from >= n || e.to >= n)
                throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
            if (e.from == e.to)
                throw Error(ErrorCode::InvalidGraph, "loops are not allowed");
            if (seen[e.from] >> e.to & 1)
                throw Error(ErrorCode::InvalidGraph, "at most one edge per vertex pair");
            seen[e.from] |= 1u << e.to;
            seen[e.to] |= 1u << e.from;
        }
    }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
    std::uint32_t weight(std::size_t v) const { return weights_.at(v); }

    SimpleGraph underlying() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> es;
        es.reserve(edges_.size());
        for (const auto& e : edges_)
            es.emplace_back(e.from, e.to);
        return SimpleGraph(n_, std::move(es));
    }

    bool has_edge(const Edge& e) const { return std::find(edges_.begin(), edges_.end(), e) != edges_.end(); }

    std::size_t in_degree(std::size_t v) const
    {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.to == v; }));
    }

    std::size_t out_degree(std::size_t v) const
    {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.from == v; }));
    }

    std::size_t degree(std::size_t v) const { return in_degree(v) + out_degree(v); }
    bool is_leaf(std::size_t v) const { return degree(v) == 1; }

    /// Equal as weighted oriented graphs (edge order ignored).
    friend bool operator==(const WeightedOrientedGraph& a, const WeightedOrientedGraph& b)
    {
        if (a.n_ != b.n_ || a.weights_ != b.weights_ || a.edges_.size() != b.edges_.size())
            return false;
        auto ea = a.edges_, eb = b.edges_;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea == eb;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> weights_;
};

/// x_u * x_v^w(v) for the edge u -> v.
inline Monomial edge_generator(const WeightedOrientedGraph& g, const Edge& e)
{
    std::vector<Monomial::Exponent> exps(g.num_vertices(), 0);
    exps[e.from] = 1;
    exps[e.to] = g.weight(e.to);
    return Monomial(std::move(exps));
}

/// I(G, w) = (x_u * x_v^w(v) : u -> v an edge of G).
inline MonomialIdeal edge_ideal(const WeightedOrientedGraph& g)
{
    if (g.num_edges() == 0)
        throw Error(ErrorCode::NoEdges, "edge ideal of an edgeless graph is zero");
    std::vector<Monomial> gens;
    gens.reserve(g.num_edges());
    for (const auto& e : g.edges())
        gens.push_back(edge_generator(g, e));
    return MonomialIdeal(RingContext(g.num_vertices()), std::move(gens));
}

/// Unweighted edge ideal I(G).
inline MonomialIdeal edge_ideal(const SimpleGraph& g)
{
    if (g.num_edges() == 0)
        throw Error(ErrorCode::NoEdges, "edge ideal of an edgeless graph is zero");
    std::vector<Monomial> gens;
    for (const auto& [u, v] : g.edges()) {
        std::vector<Monomial::Exponent> e(g.num_vertices(), 0);
        e[u] = 1;
        e[v] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(RingContext(g.num_vertices()), std::move(gens));
}

// ---- structural predicates on the underlying graph ----

inline std::vector<std::size_t> connected_components(const SimpleGraph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> comp(n, n);
    std::size_t next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != n)
            continue;
        std::queue<std::size_t> todo;
        todo.push(s);
        comp[s] = next;
        while (!todo.empty()) {
            const auto v = todo.front();
            todo.pop();
            for (std::uint32_t nb = g.neighbours(v); nb; nb &= nb - 1) {
                const auto u = static_cast<std::size_t>(std::countr_zero(nb));
                if (comp[u] == n) {
                    comp[u] = next;
                    todo.push(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const SimpleGraph& g)
{
    const auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

/// Every induced cycle, as a vertex sequence starting at its smallest vertex.
/// Exhaustive over vertex subsets.
inline std::vector<std::vector<std::size_t>> induced_cycles(const SimpleGraph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::size_t>> cycles;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        if (std::popcount(subset) < 3)
            continue;
        bool two_regular = true;
        for (std::uint32_t bits = subset; bits && two_regular; bits &= bits - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(bits));
            two_regular = std::popcount(g.neighbours(v) & subset) == 2;
        }
        if (!two_regular)
            continue;
        // walk the cycle; the subset is one cycle iff the walk covers it
        const auto start = static_cast<std::size_t>(std::countr_zero(subset));
        std::vector<std::size_t> walk{start};
        std::size_t prev = start;
        std::size_t cur = static_cast<std::size_t>(std::countr_zero(g.neighbours(start) & subset));
        while (cur != start) {
            walk.push_back(cur);
            const std::uint32_t nb = g.neighbours(cur) & subset & ~(1u << prev);
            prev = cur;
            cur = static_cast<std::size_t>(std::countr_zero(nb));
        }
        if (walk.size() == static_cast<std::size_t>(std::popcount(subset)))
            cycles.push_back(std::move(walk));
    }
    return cycles;
}

inline bool is_tree(const SimpleGraph& g)
{
    return is_connected(g) && induced_cycles(g).empty();
}

inline bool is_unicyclic(const SimpleGraph& g)
{
    return is_connected(g) && induced_cycles(g).size() == 1;
}

/// Two-colouring; equivalent to having no induced odd cycle.
inline bool is_bipartite(const SimpleGraph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<std::size_t> todo;
        todo.push(s);
        while (!todo.empty()) {
            const auto v = todo.front();
            todo.pop();
            for (std::uint32_t nb = g.neighbours(v); nb; nb &= nb - 1) {
                const auto u = static_cast<std::size_t>(std::countr_zero(nb));
                if (colour[u] == -1) {
                    colour[u] = 1 - colour[v];
                    todo.push(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_connected(const WeightedOrientedGraph& g) { return is_connected(g.underlying()); }
inline bool is_tree(const WeightedOrientedGraph& g) { return is_tree(g.underlying()); }
inline bool is_unicyclic(const WeightedOrientedGraph& g) { return is_unicyclic(g.underlying()); }
inline bool is_bipartite(const WeightedOrientedGraph& g) { return is_bipartite(g.underlying()); }
inline std::vector<std::vector<std::size_t>> induced_cycles(const WeightedOrientedGraph& g)
{
    return induced_cycles(g.underlying());
}

} // namespace wog
