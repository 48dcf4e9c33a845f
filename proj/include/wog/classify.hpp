#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wog/betti.hpp"
#include "wog/enumerate.hpp"
#include "wog/graph.hpp"
#include "wog/height.hpp"
#include "wog/pseudoforest.hpp"

namespace wog {

struct InvariantTuple {
    std::size_t depth = 0;
    std::size_t dim = 0;
    std::int64_t reg = 0;
    std::size_t pdim = 0;
    friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

inline InvariantTuple compute_invariants(const WeightedOrientedGraph& g,
                                         const FieldChoice& field = FieldChoice::rationals())
{
    const auto ideal = edge_ideal(g);
    const auto table = betti_table(ideal, field);
    return {table.depth(), krull_dim(ideal), table.reg(), table.pdim()};
}

using Tuple = std::vector<std::int64_t>;
using TupleSet = std::set<Tuple>;

/// Which coordinates of the invariant tuple an Atlas keeps.
enum class Projection {
    DepthDim,     ///< (depth, dim)
    DepthDimReg,  ///< (depth, dim, reg)
    BettiSize,    ///< (pdim, reg)
};

inline std::string to_string(Projection p)
{
    switch (p) {
    case Projection::DepthDim: return "dd";
    case Projection::DepthDimReg: return "ddr";
    case Projection::BettiSize: return "betti_size";
    }
    return "dd";
}

inline Projection parse_projection(const std::string& s)
{
    if (s == "dd")
        return Projection::DepthDim;
    if (s == "ddr")
        return Projection::DepthDimReg;
    if (s == "betti_size")
        return Projection::BettiSize;
    throw Error(ErrorCode::ParseError, "unknown projection '" + s + "'");
}

inline std::vector<std::string> coordinate_names(Projection p)
{
    switch (p) {
    case Projection::DepthDim: return {"depth", "dim"};
    case Projection::DepthDimReg: return {"depth", "dim", "reg"};
    case Projection::BettiSize: return {"pdim", "reg"};
    }
    return {};
}

inline Tuple project(const InvariantTuple& t, Projection p)
{
    const auto depth = static_cast<std::int64_t>(t.depth);
    const auto dim = static_cast<std::int64_t>(t.dim);
    switch (p) {
    case Projection::DepthDim: return {depth, dim};
    case Projection::DepthDimReg: return {depth, dim, t.reg};
    case Projection::BettiSize: return {static_cast<std::int64_t>(t.pdim), t.reg};
    }
    return {};
}

struct AtlasEntry {
    WeightedOrientedGraph witness;
    Ordinal ordinal;
};

/**
 * Projected invariant tuples with one witness each. The stored witness is the
 * one earliest in enumeration order, so merging partial atlases is
 * associative and commutative and the result does not depend on sharding.
 */
class Atlas {
public:
    Atlas() = default;
    Atlas(EnumerationConfig cfg, Projection projection) : config_(cfg), projection_(projection) {}

    const EnumerationConfig& config() const noexcept { return config_; }
    Projection projection() const noexcept { return projection_; }
    std::size_t n() const noexcept { return config_.n; }
    const std::map<Tuple, AtlasEntry>& tuples() const noexcept { return tuples_; }
    std::uint64_t graphs_seen() const noexcept { return graphs_seen_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    bool contains(const Tuple& t) const { return tuples_.count(t) > 0; }

    TupleSet tuple_set() const
    {
        TupleSet out;
        for (const auto& [t, e] : tuples_)
            out.insert(t);
        return out;
    }

    void record(const Tuple& t, const WeightedOrientedGraph& g, const Ordinal& ord)
    {
        ++graphs_seen_;
        insert(t, AtlasEntry{g, ord});
    }

    void merge(const Atlas& other)
    {
        graphs_seen_ += other.graphs_seen_;
        for (const auto& [t, e] : other.tuples_)
            insert(t, e);
    }

    /// Reset header fields after a sharded fold built the tuples.
    void set_header(EnumerationConfig cfg, Projection projection)
    {
        config_ = cfg;
        projection_ = projection;
    }

    void set_graphs_seen(std::uint64_t k) { graphs_seen_ = k; }

    friend bool operator==(const Atlas& a, const Atlas& b)
    {
        if (a.projection_ != b.projection_ || a.tuples_.size() != b.tuples_.size())
            return false;
        return std::equal(a.tuples_.begin(), a.tuples_.end(), b.tuples_.begin(), [](const auto& x, const auto& y) {
            return x.first == y.first && x.second.witness == y.second.witness &&
                   x.second.ordinal == y.second.ordinal;
        });
    }

private:
    void insert(const Tuple& t, const AtlasEntry& e)
    {
        auto it = tuples_.find(t);
        if (it == tuples_.end())
            tuples_.emplace(t, e);
        else if (e.ordinal < it->second.ordinal)
            it->second = e;
    }

    EnumerationConfig config_{};
    Projection projection_ = Projection::DepthDim;
    std::map<Tuple, AtlasEntry> tuples_;
    std::uint64_t graphs_seen_ = 0;
};

/// Enumerates every WOG of cfg and records its projected invariant tuple.
inline Atlas compute_atlas(const EnumerationConfig& cfg, Projection projection)
{
    auto atlas = fold_wogs<Atlas>(
        cfg,
        [&](Atlas& a, const WeightedOrientedGraph& g, const Ordinal& ord) {
            a.record(project(compute_invariants(g, cfg.field), projection), g, ord);
        },
        [](Atlas& into, Atlas&& from) { into.merge(from); });
    atlas.set_header(cfg, projection);
    return atlas;
}

inline Atlas compute_dd_set(const EnumerationConfig& cfg) { return compute_atlas(cfg, Projection::DepthDim); }
inline Atlas compute_ddr_set(const EnumerationConfig& cfg) { return compute_atlas(cfg, Projection::DepthDimReg); }
inline Atlas compute_betti_size_set(const EnumerationConfig& cfg)
{
    return compute_atlas(cfg, Projection::BettiSize);
}

/// Recomputes every witness; true iff each reproduces its stored tuple.
inline bool reverify(const Atlas& atlas)
{
    for (const auto& [t, e] : atlas.tuples())
        if (project(compute_invariants(e.witness, atlas.config().field), atlas.projection()) != t)
            return false;
    return true;
}

// ---- closed forms ----

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

inline bool in_dd_unweighted(std::size_t n, std::int64_t a, std::int64_t b)
{
    const auto nn = static_cast<std::int64_t>(n);
    if (a < 1 || a > b || b > nn - 1)
        return false;
    return a <= b + 1 - ceil_div(b, nn - b);
}

inline bool in_dd_wo(std::size_t n, std::int64_t a, std::int64_t b)
{
    return in_dd_unweighted(n, a, b) || (a == 0 && b >= 1 && b <= static_cast<std::int64_t>(n) - 2);
}

inline bool in_ddr_wo(std::size_t n, std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (in_dd_unweighted(n, a, b))
        return c >= 1;
    return a == 0 && b >= 1 && b <= static_cast<std::int64_t>(n) - 2 && c >= 3;
}

inline void require_tree_scope(std::size_t n)
{
    if (n < 4)
        throw Error(ErrorCode::NOutOfScope, "tree and bipartite classifications need n >= 4");
}

inline bool in_tree_wo(std::size_t n, std::int64_t p, std::int64_t r)
{
    require_tree_scope(n);
    const auto nn = static_cast<std::int64_t>(n);
    return p >= ceil_div(nn, 2) && p <= nn - 1 && r >= 1;
}

inline bool in_bpt_wo(std::size_t n, std::int64_t p, std::int64_t r)
{
    return in_tree_wo(n, p, r) || (p == static_cast<std::int64_t>(n) && r >= 4);
}

inline TupleSet closed_form_dd_unweighted(std::size_t n)
{
    if (n < 2)
        throw Error(ErrorCode::InvalidParameters, "needs n >= 2");
    TupleSet out;
    for (std::int64_t b = 1; b < static_cast<std::int64_t>(n); ++b)
        for (std::int64_t a = 1; a <= b; ++a)
            if (in_dd_unweighted(n, a, b))
                out.insert({a, b});
    return out;
}

inline TupleSet closed_form_dd_wo(std::size_t n)
{
    auto out = closed_form_dd_unweighted(n);
    for (std::int64_t b = 1; b <= static_cast<std::int64_t>(n) - 2; ++b)
        out.insert({0, b});
    return out;
}

/// The reg coordinate ranges over 1..reg_cap.
inline TupleSet closed_form_ddr_wo(std::size_t n, std::int64_t reg_cap)
{
    TupleSet out;
    for (const auto& t : closed_form_dd_wo(n))
        for (std::int64_t c = 1; c <= reg_cap; ++c)
            if (in_ddr_wo(n, t[0], t[1], c))
                out.insert({t[0], t[1], c});
    return out;
}

inline TupleSet closed_form_tree_wo(std::size_t n, std::int64_t reg_cap)
{
    require_tree_scope(n);
    TupleSet out;
    for (std::int64_t p = 0; p <= static_cast<std::int64_t>(n); ++p)
        for (std::int64_t r = 1; r <= reg_cap; ++r)
            if (in_tree_wo(n, p, r))
                out.insert({p, r});
    return out;
}

inline TupleSet closed_form_bpt_wo(std::size_t n, std::int64_t reg_cap)
{
    require_tree_scope(n);
    TupleSet out;
    for (std::int64_t p = 0; p <= static_cast<std::int64_t>(n); ++p)
        for (std::int64_t r = 1; r <= reg_cap; ++r)
            if (in_bpt_wo(n, p, r))
                out.insert({p, r});
    return out;
}

// ---- theorem verification ----

enum class Verdict { Pass, Falsified, Inconclusive };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Falsified: return "FALSIFIED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "PASS";
}

/// Exit code of the verify command for a verdict.
inline int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Falsified: return 1;
    case Verdict::Inconclusive: return 3;
    }
    return 0;
}

struct Counterexample {
    WeightedOrientedGraph graph;
    std::string detail;
};

struct VerificationReport {
    std::string theorem;
    EnumerationConfig config;
    Verdict verdict = Verdict::Pass;
    std::uint64_t graphs_checked = 0;

    // set theorems
    std::optional<Projection> projection;
    TupleSet enumerated;
    TupleSet expected;
    /// Enumerated tuples outside the closed form: each falsifies.
    std::map<Tuple, WeightedOrientedGraph> unsound;
    /// Truncated closed-form tuples not met under the caps.
    TupleSet unrealized;
    std::optional<std::string> truncation;

    // per-graph theorems
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::vector<Counterexample> counterexamples;

    std::vector<std::string> notes;
};

inline const std::vector<std::string>& theorem_names()
{
    static const std::vector<std::string> names{"dd_wo",  "ddr_wo", "tree_wo", "bpt_wo", "depth_zero_characterization",
                                                "pseudoforest_formulas", "dd_unweighted"};
    return names;
}

namespace detail {

inline constexpr std::size_t kMaxCounterexamples = 10;

inline void finish_set_report(VerificationReport& rep, const Atlas& atlas, const TupleSet& expected,
                              auto&& member)
{
    rep.projection = atlas.projection();
    rep.graphs_checked = atlas.graphs_seen();
    rep.enumerated = atlas.tuple_set();
    rep.expected = expected;
    for (const auto& [t, e] : atlas.tuples())
        if (!member(t))
            rep.unsound.emplace(t, e.witness);
    for (const auto& t : expected)
        if (!atlas.contains(t))
            rep.unrealized.insert(t);
    if (!rep.unsound.empty())
        rep.verdict = Verdict::Falsified;
    else if (!rep.unrealized.empty())
        rep.verdict = Verdict::Inconclusive;
    else
        rep.verdict = Verdict::Pass;
}

struct CaseTally {
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::pair<Ordinal, Counterexample>> examples;

    void fail(const WeightedOrientedGraph& g, const Ordinal& ord, std::string detail)
    {
        ++mismatches;
        examples.emplace_back(ord, Counterexample{g, std::move(detail)});
        keep_earliest();
    }

    void merge(CaseTally&& o)
    {
        cases += o.cases;
        mismatches += o.mismatches;
        for (auto& e : o.examples)
            examples.push_back(std::move(e));
        keep_earliest();
    }

    void keep_earliest()
    {
        std::sort(examples.begin(), examples.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (examples.size() > kMaxCounterexamples)
            examples.erase(examples.begin() + kMaxCounterexamples, examples.end());
    }
};

inline void finish_case_report(VerificationReport& rep, CaseTally&& tally, std::uint64_t graphs)
{
    rep.graphs_checked = graphs;
    rep.cases = tally.cases;
    rep.mismatches = tally.mismatches;
    for (auto& [ord, ce] : tally.examples)
        rep.counterexamples.push_back(std::move(ce));
    rep.verdict = tally.mismatches == 0 ? Verdict::Pass : Verdict::Falsified;
}

inline std::uint64_t count_wogs(const EnumerationConfig& cfg)
{
    std::uint64_t total = 0;
    std::uint64_t weights = 1;
    for (std::size_t i = 0; i < cfg.n; ++i)
        weights *= cfg.weight_cap;
    for (const auto& g : underlying_graphs(cfg))
        total += (std::uint64_t{1} << g.num_edges()) * weights;
    return total;
}

inline std::string tuple_text(const Tuple& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

} // namespace detail

/**
 * Checks a classification statement on every WOG of the configuration.
 *
 * Set theorems: every enumerated tuple must satisfy the untruncated
 * membership predicate (a violation falsifies), and every closed-form tuple
 * with reg <= reg_cap should be realized; gaps make the verdict
 * inconclusive. The class filter is fixed by the theorem: tree_wo uses trees,
 * bpt_wo bipartite graphs, the rest all connected graphs.
 *
 * depth_zero_characterization: a certificate exists iff depth = 0, and every
 * returned certificate is a valid naturally oriented pseudo-forest.
 * pseudoforest_formulas: the graph test agrees with dominance of Mingens of
 * size n, and where it holds (pdim, reg) = (|E|, sum w - |E|).
 * dd_unweighted: at weight cap 1, the depth >= 1 part of DD equals Kanno's set.
 */
inline VerificationReport verify_theorem(const std::string& name, EnumerationConfig cfg)
{
    if (std::find(theorem_names().begin(), theorem_names().end(), name) == theorem_names().end())
        throw Error(ErrorCode::UnknownTheorem, "unknown theorem '" + name + "'");
    cfg.validate();

    VerificationReport rep;
    rep.theorem = name;
    const auto n = cfg.n;
    const auto truncation_label = [&] {
        return "reg coordinate verified for 1 <= reg <= " + std::to_string(cfg.reg_cap) +
               " only; higher values follow from the weight lift and are not re-checked";
    };

    if (name == "dd_wo") {
        cfg.class_filter = ClassFilter::All;
        rep.config = cfg;
        const auto atlas = compute_dd_set(cfg);
        detail::finish_set_report(rep, atlas, closed_form_dd_wo(n),
                                  [&](const Tuple& t) { return in_dd_wo(n, t[0], t[1]); });
    } else if (name == "dd_unweighted") {
        cfg.class_filter = ClassFilter::All;
        cfg.weight_cap = 1;
        rep.config = cfg;
        const auto atlas = compute_dd_set(cfg);
        // weight 1 makes every ideal squarefree, hence depth >= 1
        detail::finish_set_report(rep, atlas, closed_form_dd_unweighted(n),
                                  [&](const Tuple& t) { return in_dd_unweighted(n, t[0], t[1]); });
        rep.notes.push_back("weight cap forced to 1");
    } else if (name == "ddr_wo") {
        cfg.class_filter = ClassFilter::All;
        rep.config = cfg;
        const auto atlas = compute_ddr_set(cfg);
        detail::finish_set_report(rep, atlas, closed_form_ddr_wo(n, cfg.reg_cap),
                                  [&](const Tuple& t) { return in_ddr_wo(n, t[0], t[1], t[2]); });
        rep.truncation = truncation_label();
    } else if (name == "tree_wo" || name == "bpt_wo") {
        require_tree_scope(n);
        const bool tree = name == "tree_wo";
        cfg.class_filter = tree ? ClassFilter::Tree : ClassFilter::Bipartite;
        rep.config = cfg;
        const auto atlas = compute_betti_size_set(cfg);
        const auto expected = tree ? closed_form_tree_wo(n, cfg.reg_cap) : closed_form_bpt_wo(n, cfg.reg_cap);
        detail::finish_set_report(rep, atlas, expected, [&](const Tuple& t) {
            return tree ? in_tree_wo(n, t[0], t[1]) : in_bpt_wo(n, t[0], t[1]);
        });
        rep.truncation = truncation_label();
    } else if (name == "depth_zero_characterization") {
        cfg.class_filter = ClassFilter::All;
        rep.config = cfg;
        auto tally = fold_wogs<detail::CaseTally>(
            cfg,
            [&](detail::CaseTally& t, const WeightedOrientedGraph& g, const Ordinal& ord) {
                ++t.cases;
                const auto cert = depth_zero_certificate(g);
                const auto depth = betti_table(edge_ideal(g), cfg.field).depth();
                if (cert.has_value() != (depth == 0)) {
                    t.fail(g, ord, "depth " + std::to_string(depth) + ", certificate " +
                                       (cert ? "found" : "absent"));
                    return;
                }
                if (cert) {
                    const auto h = cert->subgraph(g);
                    bool ok = is_naturally_oriented_max_pseudoforest(h);
                    for (std::size_t v = 0; v < n && ok; ++v)
                        ok = h.is_leaf(v) || g.weight(v) >= 2;
                    if (!ok)
                        t.fail(g, ord, "certificate is not a leaf-or-heavy natural pseudo-forest");
                }
            },
            [](detail::CaseTally& into, detail::CaseTally&& from) { into.merge(std::move(from)); });
        detail::finish_case_report(rep, std::move(tally), detail::count_wogs(cfg));
    } else { // pseudoforest_formulas
        cfg.class_filter = ClassFilter::All;
        rep.config = cfg;
        auto tally = fold_wogs<detail::CaseTally>(
            cfg,
            [&](detail::CaseTally& t, const WeightedOrientedGraph& g, const Ordinal& ord) {
                const auto ideal = edge_ideal(g);
                const bool graph_test = dominant_set_graph_test(g);
                const bool algebra_test = ideal.size() == n && is_dominant_set(ideal.mingens());
                if (graph_test != algebra_test) {
                    ++t.cases;
                    t.fail(g, ord, std::string("graph test ") + (graph_test ? "true" : "false") +
                                       ", Mingens dominance " + (algebra_test ? "true" : "false"));
                    return;
                }
                if (!graph_test)
                    return;
                ++t.cases;
                const auto table = betti_table(ideal, cfg.field);
                const auto expect = pseudoforest_invariants(g);
                if (table.pdim() != expect.pdim || table.reg() != expect.reg)
                    t.fail(g, ord, "engine (pdim, reg) = " +
                                       detail::tuple_text({static_cast<std::int64_t>(table.pdim()), table.reg()}) +
                                       ", formula " +
                                       detail::tuple_text({static_cast<std::int64_t>(expect.pdim), expect.reg}));
            },
            [](detail::CaseTally& into, detail::CaseTally&& from) { into.merge(std::move(from)); });
        detail::finish_case_report(rep, std::move(tally), detail::count_wogs(cfg));
    }
    return rep;
}

} // namespace wog
