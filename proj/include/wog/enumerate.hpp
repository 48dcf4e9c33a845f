#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wog/graph.hpp"
#include "wog/linalg.hpp"

namespace wog {

inline constexpr std::size_t kMaxEnumerationVertices = 7;

enum class ClassFilter { All, Tree, Bipartite };

inline std::string to_string(ClassFilter f)
{
    switch (f) {
    case ClassFilter::All: return "all";
    case ClassFilter::Tree: return "tree";
    case ClassFilter::Bipartite: return "bipartite";
    }
    return "all";
}

inline ClassFilter parse_class_filter(const std::string& s)
{
    if (s == "all")
        return ClassFilter::All;
    if (s == "tree")
        return ClassFilter::Tree;
    if (s == "bipartite")
        return ClassFilter::Bipartite;
    throw Error(ErrorCode::InvalidParameters, "unknown graph class '" + s + "'");
}

namespace detail {

/// Upper-triangle adjacency bits, pair (i, j) with i < j at a fixed index.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n)
{
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::uint32_t encode(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                            const std::vector<std::size_t>& perm)
{
    std::uint32_t code = 0;
    for (const auto& [u, v] : edges) {
        auto a = perm[u], b = perm[v];
        if (a > b)
            std::swap(a, b);
        code |= 1u << pair_index(a, b, n);
    }
    return code;
}

inline SimpleGraph decode(std::size_t n, std::uint32_t code)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (code >> pair_index(i, j, n) & 1)
                edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

} // namespace detail

/// Canonical code: the minimum adjacency encoding over all n! relabelings.
inline std::uint32_t canonical_code(const SimpleGraph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > kMaxEnumerationVertices)
        throw Error(ErrorCode::NTooLarge, "canonical labeling supports n <= 7");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint32_t best = ~0u;
    do {
        best = std::min(best, detail::encode(n, g.edges(), perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// The graph relabeled into its canonical form.
inline SimpleGraph canonical_form(const SimpleGraph& g)
{
    return detail::decode(g.num_vertices(), canonical_code(g));
}

/**
 * Connected simple graphs on n labeled vertices. With dedup, one canonical
 * representative per isomorphism class, grown from the classes on n - 1
 * vertices (every connected graph has a non-cut vertex), sorted by
 * (edge count, canonical code).
 */
inline std::vector<SimpleGraph> enumerate_connected_graphs(std::size_t n, bool dedup)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidParameters, "n must be positive");
    if (n > kMaxEnumerationVertices)
        throw Error(ErrorCode::NTooLarge, "exhaustive enumeration supports n <= 7");

    if (!dedup) {
        const std::size_t pairs = n * (n - 1) / 2;
        std::vector<SimpleGraph> out;
        for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
            auto g = detail::decode(n, code);
            if (is_connected(g))
                out.push_back(std::move(g));
        }
        return out;
    }

    std::set<std::pair<std::size_t, std::uint32_t>> classes{{0, 0}}; // n = 1
    for (std::size_t m = 2; m <= n; ++m) {
        std::set<std::pair<std::size_t, std::uint32_t>> grown;
        for (const auto& [edges, code] : classes) {
            const auto base = detail::decode(m - 1, code);
            for (std::uint32_t nbrs = 1; nbrs < (1u << (m - 1)); ++nbrs) {
                auto es = base.edges();
                for (std::size_t v = 0; v + 1 < m; ++v)
                    if (nbrs >> v & 1)
                        es.emplace_back(v, m - 1);
                SimpleGraph g(m, std::move(es));
                grown.emplace(g.num_edges(), canonical_code(g));
            }
        }
        classes = std::move(grown);
    }
    std::vector<SimpleGraph> out;
    for (const auto& [edges, code] : classes)
        out.push_back(detail::decode(n, code));
    return out;
}

/// Caps and filters for an exhaustive run.
struct EnumerationConfig {
    std::size_t n = 4;
    std::uint32_t weight_cap = 1;
    std::int64_t reg_cap = 3;
    ClassFilter class_filter = ClassFilter::All;
    bool dedup = true;
    FieldChoice field = FieldChoice::rationals();
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    std::size_t jobs = 0;

    void validate() const
    {
        if (n < 2)
            throw Error(ErrorCode::InvalidParameters, "enumeration needs n >= 2");
        if (n > kMaxEnumerationVertices)
            throw Error(ErrorCode::NTooLarge, "exhaustive enumeration supports n <= 7");
        if (weight_cap < 1)
            throw Error(ErrorCode::InvalidParameters, "weight cap must be >= 1");
    }
};

/// Position of a WOG in the enumeration order; smaller is earlier.
struct Ordinal {
    std::size_t graph_index = 0;
    std::uint64_t orientation = 0;
    std::uint64_t weight_index = 0;
    friend bool operator==(const Ordinal&, const Ordinal&) = default;
    friend auto operator<=>(const Ordinal&, const Ordinal&) = default;
};

inline bool passes_filter(const SimpleGraph& g, ClassFilter f)
{
    switch (f) {
    case ClassFilter::All: return true;
    case ClassFilter::Tree: return is_tree(g);
    case ClassFilter::Bipartite: return is_bipartite(g);
    }
    return true;
}

inline std::vector<SimpleGraph> underlying_graphs(const EnumerationConfig& cfg)
{
    cfg.validate();
    std::vector<SimpleGraph> out;
    for (auto& g : enumerate_connected_graphs(cfg.n, cfg.dedup))
        if (passes_filter(g, cfg.class_filter))
            out.push_back(std::move(g));
    return out;
}

namespace detail {

inline WeightedOrientedGraph orient(const SimpleGraph& g, std::uint64_t orientation,
                                    std::vector<std::uint32_t> weights)
{
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    std::size_t k = 0;
    for (const auto& [u, v] : g.edges()) {
        if (orientation >> k & 1)
            edges.push_back({v, u});
        else
            edges.push_back({u, v});
        ++k;
    }
    return WeightedOrientedGraph(g.num_vertices(), std::move(edges), std::move(weights));
}

template <class Fn>
void for_each_weighting(const SimpleGraph& g, std::uint64_t orientation, std::uint32_t cap, Fn&& fn)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> w(n, 1);
    std::uint64_t index = 0;
    while (true) {
        fn(orient(g, orientation, w), index++);
        std::size_t v = n;
        while (v > 0) {
            --v;
            if (w[v] < cap) {
                ++w[v];
                break;
            }
            w[v] = 1;
            if (v == 0)
                return;
        }
    }
}

} // namespace detail

/**
 * Folds over every WOG of the configuration: each underlying graph passing the
 * class filter, each of its 2^|E| orientations, each weight vector in
 * [1, W]^n. Work is sharded into (graph, orientation) units handed to worker
 * threads; every worker folds into its own State and the partial states are
 * merged once at the end.
 *
 * visit(State&, const WeightedOrientedGraph&, const Ordinal&)
 * merge(State& into, State&& from)
 */
template <class State, class Visit, class Merge>
State fold_wogs(const EnumerationConfig& cfg, Visit visit, Merge merge)
{
    const auto graphs = underlying_graphs(cfg);
    std::vector<std::pair<std::size_t, std::uint64_t>> units;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
        for (std::uint64_t o = 0; o < (std::uint64_t{1} << graphs[gi].num_edges()); ++o)
            units.emplace_back(gi, o);

    std::size_t jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<std::size_t>(jobs, std::max<std::size_t>(units.size(), 1));

    std::atomic<std::size_t> next{0};
    auto work = [&](State& state) {
        for (std::size_t u = next++; u < units.size(); u = next++) {
            const auto [gi, o] = units[u];
            detail::for_each_weighting(graphs[gi], o, cfg.weight_cap,
                                       [&](const WeightedOrientedGraph& g, std::uint64_t wi) {
                                           visit(state, g, Ordinal{gi, o, wi});
                                       });
        }
    };

    std::vector<State> states(jobs);
    if (jobs == 1) {
        work(states[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j)
            pool.emplace_back(work, std::ref(states[j]));
        for (auto& t : pool)
            t.join();
    }
    State result = std::move(states[0]);
    for (std::size_t j = 1; j < jobs; ++j)
        merge(result, std::move(states[j]));
    return result;
}

/// Every WOG of the configuration, in enumeration order.
inline std::vector<WeightedOrientedGraph> enumerate_wogs(EnumerationConfig cfg)
{
    cfg.jobs = 1;
    return fold_wogs<std::vector<WeightedOrientedGraph>>(
        cfg, [](auto& out, const WeightedOrientedGraph& g, const Ordinal&) { out.push_back(g); },
        [](auto& into, auto&& from) { into.insert(into.end(), from.begin(), from.end()); });
}

} // namespace wog
