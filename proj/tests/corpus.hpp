#pragma once

// Seeded random ideals and graphs shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "wog/graph.hpp"
#include "wog/monomial.hpp"

namespace corpus {

using Rng = std::mt19937_64;

/// Random nonunit monomial with at most max_support variables, exponents 1..max_exp.
inline wog::Monomial random_monomial(Rng& rng, std::size_t n, std::size_t max_support, std::uint32_t max_exp)
{
    std::vector<std::uint32_t> e(n, 0);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(n, max_support))(rng);
    std::vector<std::size_t> vars(n);
    for (std::size_t i = 0; i < n; ++i)
        vars[i] = i;
    std::shuffle(vars.begin(), vars.end(), rng);
    for (std::size_t i = 0; i < k; ++i)
        e[vars[i]] = std::uniform_int_distribution<std::uint32_t>(1, max_exp)(rng);
    return wog::Monomial(std::move(e));
}

/// Up to max_gens generators in up to max_vars variables.
inline wog::MonomialIdeal random_ideal(Rng& rng, std::size_t max_vars = 8, std::size_t max_gens = 10,
                                       std::uint32_t max_exp = 3)
{
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vars)(rng);
    const std::size_t q = std::uniform_int_distribution<std::size_t>(1, max_gens)(rng);
    std::vector<wog::Monomial> gens;
    for (std::size_t i = 0; i < q; ++i)
        gens.push_back(random_monomial(rng, n, 3, max_exp));
    return wog::MonomialIdeal(wog::RingContext(n), std::move(gens));
}

inline wog::MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t max_vars = 7, std::size_t max_gens = 8)
{
    return random_ideal(rng, max_vars, max_gens, 1);
}

/// The fixed-seed corpus used by the property tests.
inline std::vector<wog::MonomialIdeal> ideal_corpus(std::size_t count, std::uint64_t seed = 20261015)
{
    Rng rng(seed);
    std::vector<wog::MonomialIdeal> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_ideal(rng));
    return out;
}

/// Random connected weighted oriented graph: a random spanning tree plus extra edges.
inline wog::WeightedOrientedGraph random_connected_wog(Rng& rng, std::size_t n, std::uint32_t max_weight,
                                                      double extra_edge_probability = 0.3)
{
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    std::vector<wog::Edge> edges;
    auto add = [&](std::size_t u, std::size_t v) {
        used[u][v] = used[v][u] = 1;
        if (rng() & 1)
            std::swap(u, v);
        edges.push_back({u, v});
    };
    for (std::size_t v = 1; v < n; ++v)
        add(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
    std::bernoulli_distribution extra(extra_edge_probability);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!used[u][v] && extra(rng))
                add(u, v);
    std::vector<std::uint32_t> w(n);
    for (auto& x : w)
        x = std::uniform_int_distribution<std::uint32_t>(1, max_weight)(rng);
    return wog::WeightedOrientedGraph(n, std::move(edges), std::move(w));
}

/**
 * Random dominant naturally oriented maximal pseudo-forest on n vertices: a
 * few directed cycles, then every remaining vertex hangs off an earlier one.
 * Non-leaves get weight >= 2, leaves any weight in 1..max_weight.
 */
inline wog::WeightedOrientedGraph random_dominant_pseudoforest(Rng& rng, std::size_t n, std::uint32_t max_weight)
{
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<wog::Edge> edges;
    std::size_t placed = 0;
    // first cycle always, further ones while room remains
    do {
        const std::size_t room = n - placed;
        const std::size_t len = std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(room, 5))(rng);
        for (std::size_t i = 0; i < len; ++i)
            edges.push_back({perm[placed + i], perm[placed + (i + 1) % len]});
        placed += len;
    } while (n - placed >= 3 && (rng() % 3 == 0));
    for (; placed < n; ++placed) {
        const std::size_t parent = perm[std::uniform_int_distribution<std::size_t>(0, placed - 1)(rng)];
        edges.push_back({parent, perm[placed]});
    }

    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : edges) {
        ++degree[e.from];
        ++degree[e.to];
    }
    std::vector<std::uint32_t> w(n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t lo = degree[v] == 1 ? 1 : 2;
        w[v] = std::uniform_int_distribution<std::uint32_t>(lo, std::max(lo, max_weight))(rng);
    }
    return wog::WeightedOrientedGraph(n, std::move(edges), std::move(w));
}

} // namespace corpus
