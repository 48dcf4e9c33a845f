#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wog/betti.hpp"
#include "wog/monomial.hpp"

namespace wog {

/// Minimal Taylor resolution <=> Mingens(I) is a dominant set.
inline bool is_taylor_minimal(const MonomialIdeal& ideal)
{
    return is_dominant_set(ideal.mingens());
}

/// Definitional check: every Taylor coefficient lcm(sigma)/lcm(sigma \ m) is
/// a proper monomial, i.e. the differential lands in the maximal ideal.
inline bool is_taylor_minimal_by_definition(const MonomialIdeal& ideal, const BettiConfig& cfg = {})
{
    const auto lat = detail::build_lcm_lattice(ideal, cfg);
    const std::size_t total = std::size_t{1} << lat.q;
    for (std::size_t sigma = 1; sigma < total; ++sigma)
        for (std::size_t bits = sigma; bits; bits &= bits - 1) {
            const std::size_t face = sigma & ~(bits & (~bits + 1));
            if (lat.group[face] == lat.group[sigma])
                return false;
        }
    return true;
}

struct TaylorInvariants {
    std::size_t pdim;
    std::int64_t reg;
    friend bool operator==(const TaylorInvariants&, const TaylorInvariants&) = default;
};

/// (q, deg lcm(Mingens) - q), valid only when the Taylor resolution is minimal.
inline TaylorInvariants reg_if_taylor_minimal(const MonomialIdeal& ideal)
{
    if (!is_taylor_minimal(ideal))
        throw Error(ErrorCode::TaylorNotMinimal, "Mingens is not a dominant set");
    const auto q = ideal.size();
    return {q, static_cast<std::int64_t>(ideal.lcm_all().degree()) - static_cast<std::int64_t>(q)};
}

/// J + K.
inline MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k)
{
    if (j.context() != k.context())
        throw Error(ErrorCode::ContextMismatch, "sum of ideals in different rings");
    auto gens = j.mingens();
    gens.insert(gens.end(), k.mingens().begin(), k.mingens().end());
    return MonomialIdeal(j.context(), std::move(gens));
}

/// J intersect K, generated by pairwise lcms.
inline MonomialIdeal ideal_intersection(const MonomialIdeal& j, const MonomialIdeal& k)
{
    if (j.context() != k.context())
        throw Error(ErrorCode::ContextMismatch, "intersection of ideals in different rings");
    std::vector<Monomial> gens;
    gens.reserve(j.size() * k.size());
    for (const auto& a : j.mingens())
        for (const auto& b : k.mingens())
            gens.push_back(lcm(a, b));
    return MonomialIdeal(j.context(), std::move(gens));
}

/// All generators share one degree d and every nonzero beta_{i,a}(S/I) with
/// i >= 1 sits at deg a = i + d - 1.
inline bool has_linear_resolution(const MonomialIdeal& ideal,
                                  const FieldChoice& field = FieldChoice::rationals())
{
    const auto d = ideal.mingens().front().degree();
    for (const auto& g : ideal.mingens())
        if (g.degree() != d)
            return false;
    const auto table = betti_table(ideal, field);
    for (const auto& [key, b] : table.entries())
        if (key.first >= 1 && key.second.degree() != key.first + d - 1)
            return false;
    return true;
}

struct SplittingReport {
    /// Splitting variable; empty when the caller supplied the partition.
    std::optional<std::size_t> x;
    MonomialIdeal j;
    MonomialIdeal k;
    MonomialIdeal j_cap_k;
    bool k_linear = false;
    bool j_linear = false;
    bool pdim_identity_holds = false;
    bool reg_identity_holds = false;
    /// beta_{i,a}(I) = beta_{i,a}(J) + beta_{i,a}(K) + beta_{i-1,a}(J cap K) for every (i, a).
    bool betti_identity_holds = false;
};

namespace detail {

inline SplittingReport evaluate_splitting(std::optional<std::size_t> x, const MonomialIdeal& j,
                                          const MonomialIdeal& k, const FieldChoice& field)
{
    const auto i_ideal = ideal_sum(j, k);
    auto jk = ideal_intersection(j, k);
    SplittingReport rep{x, j, k, jk};
    rep.k_linear = has_linear_resolution(k, field);
    rep.j_linear = has_linear_resolution(j, field);

    const auto bi = betti_table(i_ideal, field);
    const auto bj = betti_table(j, field);
    const auto bk = betti_table(k, field);
    const auto bjk = betti_table(jk, field);

    const auto pd_rhs = std::max({bj.pdim(), bk.pdim(), bjk.pdim() + 1});
    const auto reg_rhs = std::max({bj.reg(), bk.reg(), bjk.reg() - 1});
    rep.pdim_identity_holds = bi.pdim() == pd_rhs;
    rep.reg_identity_holds = bi.reg() == reg_rhs;

    // compare on the union of all supports; S/- index i corresponds to ideal index i-1
    std::vector<BettiTable::Key> keys;
    for (const auto* t : {&bi, &bj, &bk})
        for (const auto& [key, b] : t->entries())
            if (key.first >= 1)
                keys.push_back(key);
    for (const auto& [key, b] : bjk.entries())
        if (key.first >= 1)
            keys.emplace_back(key.first + 1, key.second);
    rep.betti_identity_holds = std::all_of(keys.begin(), keys.end(), [&](const BettiTable::Key& key) {
        const auto& [i, a] = key;
        const std::uint64_t correction = i >= 2 ? bjk.beta(i - 1, a) : 0;
        return bi.beta(i, a) == bj.beta(i, a) + bk.beta(i, a) + correction;
    });
    return rep;
}

} // namespace detail

/**
 * Splits Mingens(I) into J (generators divisible by x) and K (the rest) and
 * evaluates the projective dimension and regularity identities of a Betti
 * splitting. Both identities are guaranteed when J has a linear resolution;
 * linearity of K alone does not suffice.
 */
inline SplittingReport betti_splitting_check(const MonomialIdeal& ideal, std::size_t x,
                                             const FieldChoice& field = FieldChoice::rationals())
{
    if (x >= ideal.num_vars())
        throw Error(ErrorCode::InvalidParameters, "splitting variable out of range");
    std::vector<Monomial> jg, kg;
    for (const auto& g : ideal.mingens())
        (g[x] > 0 ? jg : kg).push_back(g);
    if (jg.empty() || kg.empty())
        throw Error(ErrorCode::TrivialSplit, "one side of the split is the zero ideal");
    return detail::evaluate_splitting(x, MonomialIdeal(ideal.context(), std::move(jg)),
                                      MonomialIdeal(ideal.context(), std::move(kg)), field);
}

/// Same report for an explicit partition I = J + K of the generators.
inline SplittingReport betti_splitting_check(const RingContext& ctx, std::vector<Monomial> j_gens,
                                             std::vector<Monomial> k_gens,
                                             const FieldChoice& field = FieldChoice::rationals())
{
    if (j_gens.empty() || k_gens.empty())
        throw Error(ErrorCode::TrivialSplit, "one side of the split is the zero ideal");
    return detail::evaluate_splitting(std::nullopt, MonomialIdeal(ctx, std::move(j_gens)),
                                      MonomialIdeal(ctx, std::move(k_gens)), field);
}

/// Replace x by x^(r+1) in every generator.
inline MonomialIdeal substitute_power(const MonomialIdeal& ideal, std::size_t x, std::uint32_t r)
{
    if (x >= ideal.num_vars())
        throw Error(ErrorCode::InvalidParameters, "substitution variable out of range");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.mingens()) {
        std::vector<Monomial::Exponent> e(g.exponents().begin(), g.exponents().end());
        e[x] *= (r + 1);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.context(), std::move(gens));
}

/// Smallest variable dividing a multidegree a with beta_{i,a}(S/I) != 0 and
/// deg a - i = reg S/I. Substituting x -> x^(r+1) there keeps pdim and adds r
/// to the regularity.
inline std::size_t find_reg_witness_variable(const MonomialIdeal& ideal,
                                             const FieldChoice& field = FieldChoice::rationals())
{
    if (!ideal.is_squarefree())
        throw Error(ErrorCode::NotSquarefree, "witness search needs a squarefree ideal");
    const auto table = betti_table(ideal, field);
    const auto r = table.reg();
    std::size_t best = ideal.num_vars();
    for (const auto& [key, b] : table.entries()) {
        if (key.first == 0 ||
            static_cast<std::int64_t>(key.second.degree()) - static_cast<std::int64_t>(key.first) != r)
            continue;
        const auto supp = key.second.support();
        if (!supp.empty())
            best = std::min(best, supp.front());
    }
    return best;
}

} // namespace wog
