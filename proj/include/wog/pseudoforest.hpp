#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "wog/graph.hpp"
#include "wog/monomial.hpp"

namespace wog {

/**
 * Definitional check for a naturally oriented maximal pseudo-forest: every
 * component is unicyclic, its cycle is oriented one way round, and the trees
 * hanging off the cycle are oriented away from it.
 */
inline bool is_naturally_oriented_max_pseudoforest(const WeightedOrientedGraph& g)
{
    const auto und = g.underlying();
    const auto comp = connected_components(und);
    const auto cycles = induced_cycles(und);
    const std::size_t n = g.num_vertices();
    const std::size_t num_comp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    std::vector<std::size_t> cycles_in(num_comp, 0);
    for (const auto& c : cycles)
        ++cycles_in[comp[c.front()]];
    if (std::any_of(cycles_in.begin(), cycles_in.end(), [](std::size_t k) { return k != 1; }))
        return false;

    std::vector<char> on_cycle(n, 0);
    for (const auto& c : cycles) {
        const std::size_t len = c.size();
        bool forward = true, backward = true;
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t a = c[i], b = c[(i + 1) % len];
            forward = forward && g.has_edge({a, b});
            backward = backward && g.has_edge({b, a});
        }
        if (!forward && !backward)
            return false;
        for (auto v : c)
            on_cycle[v] = 1;
    }

    // distance from the cycle; tree edges must go from nearer to farther
    std::vector<std::size_t> dist(n, n);
    std::vector<std::size_t> frontier;
    for (std::size_t v = 0; v < n; ++v)
        if (on_cycle[v]) {
            dist[v] = 0;
            frontier.push_back(v);
        }
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto v : frontier)
            for (std::uint32_t nb = und.neighbours(v); nb; nb &= nb - 1) {
                const auto u = static_cast<std::size_t>(std::countr_zero(nb));
                if (dist[u] == n) {
                    dist[u] = dist[v] + 1;
                    next.push_back(u);
                }
            }
        frontier = std::move(next);
    }
    for (const auto& e : g.edges()) {
        if (on_cycle[e.from] && on_cycle[e.to])
            continue;
        if (dist[e.to] != dist[e.from] + 1)
            return false;
    }
    return true;
}

/// Equivalent characterisation: every vertex has in-degree exactly one.
inline bool has_unit_in_degrees(const WeightedOrientedGraph& g)
{
    std::vector<std::size_t> indeg(g.num_vertices(), 0);
    for (const auto& e : g.edges())
        ++indeg[e.to];
    return std::all_of(indeg.begin(), indeg.end(), [](std::size_t d) { return d == 1; });
}

/// One chosen in-edge per vertex; together they span the pseudo-forest H.
struct PseudoForestCertificate {
    std::vector<Edge> chosen_in_edge;

    WeightedOrientedGraph subgraph(const WeightedOrientedGraph& g) const
    {
        return WeightedOrientedGraph(g.num_vertices(), chosen_in_edge, g.weights());
    }
};

/**
 * Searches for a spanning naturally oriented maximal pseudo-forest H of G
 * whose vertices are leaves of H or have weight >= 2. Such an H exists iff
 * depth S/I(G, w) = 0.
 *
 * Backtracking assigns each vertex one in-edge, visiting vertices by
 * decreasing degree and candidates by increasing source. A weight-1 vertex
 * must stay a leaf of H, so it may never be the source of a chosen edge.
 */
inline std::optional<PseudoForestCertificate> depth_zero_certificate(const WeightedOrientedGraph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });

    std::vector<std::vector<Edge>> candidates(n);
    for (const auto& e : g.edges())
        candidates[e.to].push_back(e);
    for (auto& c : candidates)
        std::sort(c.begin(), c.end());

    std::vector<Edge> chosen(n);
    std::vector<std::size_t> in_h(n, 0), out_h(n, 0);

    auto leaf_rule_ok = [&](std::size_t v) {
        // a weight-1 vertex can only end as a leaf: in-degree 1, out-degree 0
        return g.weight(v) >= 2 || out_h[v] == 0;
    };

    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == n)
            return true;
        const std::size_t v = order[k];
        for (const auto& e : candidates[v]) {
            ++out_h[e.from];
            ++in_h[v];
            if (leaf_rule_ok(e.from) && leaf_rule_ok(v)) {
                chosen[v] = e;
                if (self(self, k + 1))
                    return true;
            }
            --out_h[e.from];
            --in_h[v];
        }
        return false;
    };
    if (!search(search, 0))
        return std::nullopt;
    return PseudoForestCertificate{chosen};
}

/// Combinatorial dominance of the generator of edge u -> v in Mingens(I(G, w)):
/// u or v is a leaf, or u -> v is the only edge into v and w(v) > 1.
inline bool dominant_generator_test(const WeightedOrientedGraph& g, const Edge& e)
{
    if (!g.has_edge(e))
        throw Error(ErrorCode::NotAnEdge, "edge " + std::to_string(e.from + 1) + "->" +
                                              std::to_string(e.to + 1) + " is not in the graph");
    if (g.is_leaf(e.from) || g.is_leaf(e.to))
        return true;
    return g.in_degree(e.to) == 1 && g.weight(e.to) > 1;
}

/// G is a naturally oriented maximal pseudo-forest whose vertices are all
/// leaves or of weight >= 2; equivalently Mingens(I(G, w)) is a dominant set
/// of cardinality n.
inline bool dominant_set_graph_test(const WeightedOrientedGraph& g)
{
    if (!is_naturally_oriented_max_pseudoforest(g))
        return false;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (!g.is_leaf(v) && g.weight(v) < 2)
            return false;
    return true;
}

struct PseudoForestInvariants {
    std::size_t pdim;
    std::int64_t reg;
    friend bool operator==(const PseudoForestInvariants&, const PseudoForestInvariants&) = default;
};

/// pdim = |E|, reg = sum of weights - |E|.
inline PseudoForestInvariants pseudoforest_invariants(const WeightedOrientedGraph& g)
{
    if (!dominant_set_graph_test(g))
        throw Error(ErrorCode::NotDominantPseudoForest,
                    "graph is not a naturally oriented pseudo-forest with leaf-or-heavy vertices");
    const auto total = std::accumulate(g.weights().begin(), g.weights().end(), std::int64_t{0});
    return {g.num_edges(), total - static_cast<std::int64_t>(g.num_edges())};
}

} // namespace wog
