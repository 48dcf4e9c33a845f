#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wog/graph.hpp"
#include "wog/resolutions.hpp"

namespace wog {

/// Path 1 - 2 - ... - n, edges oriented toward the larger index, all weights 1.
inline WeightedOrientedGraph path(std::size_t n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidParameters, "path needs a vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return WeightedOrientedGraph(n, std::move(edges), std::vector<std::uint32_t>(n, 1));
}

/// Cycle 1 -> 2 -> ... -> n -> 1.
inline WeightedOrientedGraph cycle_naturally_oriented(std::size_t n, std::vector<std::uint32_t> weights)
{
    if (n < 3)
        throw Error(ErrorCode::InvalidParameters, "cycles need at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return WeightedOrientedGraph(n, std::move(edges), std::move(weights));
}

enum class StarOrientation { TowardLeaves, TowardCentre };

/// Star with centre vertex 1 and leaves 2..n.
inline WeightedOrientedGraph star(std::size_t n, std::vector<std::uint32_t> weights,
                                  StarOrientation orientation = StarOrientation::TowardLeaves)
{
    if (n < 2)
        throw Error(ErrorCode::InvalidParameters, "star needs at least 2 vertices");
    std::vector<Edge> edges;
    for (std::size_t leaf = 1; leaf < n; ++leaf)
        edges.push_back(orientation == StarOrientation::TowardLeaves ? Edge{0, leaf} : Edge{leaf, 0});
    return WeightedOrientedGraph(n, std::move(edges), std::move(weights));
}

enum class CompleteOrientation { TowardLarger, TowardSmaller };

inline WeightedOrientedGraph complete(std::size_t n, std::vector<std::uint32_t> weights,
                                      CompleteOrientation orientation = CompleteOrientation::TowardLarger)
{
    if (n < 2)
        throw Error(ErrorCode::InvalidParameters, "complete graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.push_back(orientation == CompleteOrientation::TowardLarger ? Edge{i, j} : Edge{j, i});
    return WeightedOrientedGraph(n, std::move(edges), std::move(weights));
}

/**
 * The depth-zero family G_{t,l,r}: a complete graph on x1, x2, x3, y1..yt
 * with leaves z1..zl hanging off x1. Vertex order is x1, x2, x3, y1..yt,
 * z1..zl. Weights are w(x1) = 2 + r, w(x2) = w(x3) = 2, all others 1. The
 * triangle is the directed cycle x1 -> x3 -> x2 -> x1, so that the triangle
 * generators are x1^(2+r) x2, x2^2 x3, x3^2 x1. Edges x_i y_j point to y_j and
 * x1 z_j point to z_j.
 *
 * The y_i y_j edges may be oriented arbitrarily: bit k of y_orientation (in
 * lexicographic order of pairs i < j) set means y_j -> y_i, clear means
 * y_i -> y_j. The default orients every one toward the larger index.
 */
inline WeightedOrientedGraph family_G(std::size_t t, std::size_t l, std::uint32_t r,
                                      std::uint64_t y_orientation = 0)
{
    const std::size_t n = 3 + t + l;
    if (n > kMaxVertices)
        throw Error(ErrorCode::InvalidParameters, "G_{t,l,r} exceeds the vertex cap");
    const std::size_t x1 = 0, x2 = 1, x3 = 2;
    auto y = [](std::size_t j) { return 3 + j; };
    auto z = [t](std::size_t j) { return 3 + t + j; };

    std::vector<std::uint32_t> weights(n, 1);
    weights[x1] = 2 + r;
    weights[x2] = 2;
    weights[x3] = 2;

    std::vector<Edge> edges{{x2, x1}, {x3, x2}, {x1, x3}};
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t xi : {x1, x2, x3})
            edges.push_back({xi, y(j)});
    std::size_t bit = 0;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j, ++bit) {
            if (bit < 64 && (y_orientation >> bit & 1))
                edges.push_back({y(j), y(i)});
            else
                edges.push_back({y(i), y(j)});
        }
    for (std::size_t j = 0; j < l; ++j)
        edges.push_back({x1, z(j)});
    return WeightedOrientedGraph(n, std::move(edges), std::move(weights));
}

/// family_G with the y_i y_j orientations drawn from a seeded generator.
inline WeightedOrientedGraph family_G_random(std::size_t t, std::size_t l, std::uint32_t r, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return family_G(t, l, r, rng());
}

/**
 * Bipartite witness of pdim n and regularity r >= 4: the directed 4-cycle
 * 1 -> 2 -> 3 -> 4 -> 1 with w = (2, 2, 2, r - 2) and leaves 5..n of weight 1
 * hanging off vertex 1, oriented away from it.
 */
inline WeightedOrientedGraph bipartite_cycle_with_leaves(std::size_t n, std::uint32_t r)
{
    if (n < 4 || r < 4)
        throw Error(ErrorCode::InvalidParameters, "needs n >= 4 and r >= 4");
    std::vector<std::uint32_t> weights(n, 1);
    weights[0] = weights[1] = weights[2] = 2;
    weights[3] = r - 2;
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (std::size_t leaf = 4; leaf < n; ++leaf)
        edges.push_back({0, leaf});
    return WeightedOrientedGraph(n, std::move(edges), std::move(weights));
}

/**
 * Weight lift of an unweighted graph at vertex x: every edge at x points to x,
 * other edges point to the larger index, w(x) = r + 1 and all other weights
 * are 1. The edge ideal is I(G) with x replaced by x^(r+1).
 */
inline WeightedOrientedGraph lift_graph(const SimpleGraph& g, std::size_t x, std::uint32_t r)
{
    if (x >= g.num_vertices())
        throw Error(ErrorCode::InvalidParameters, "lift vertex out of range");
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (u == x)
            edges.push_back({v, u});
        else
            edges.push_back({u, v});
    }
    std::vector<std::uint32_t> weights(g.num_vertices(), 1);
    weights[x] = r + 1;
    return WeightedOrientedGraph(g.num_vertices(), std::move(edges), std::move(weights));
}

/// Lift at the regularity witness of I(G).
inline WeightedOrientedGraph lift_graph(const SimpleGraph& g, std::uint32_t r,
                                        const FieldChoice& field = FieldChoice::rationals())
{
    return lift_graph(g, find_reg_witness_variable(edge_ideal(g), field), r);
}

} // namespace wog
