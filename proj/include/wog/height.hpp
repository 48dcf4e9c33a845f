#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "wog/monomial.hpp"

namespace wog {

namespace detail {

inline std::vector<std::uint32_t> support_masks(const MonomialIdeal& ideal)
{
    if (ideal.num_vars() > 31)
        throw Error(ErrorCode::InvalidParameters, "height search supports at most 31 variables");
    std::vector<std::uint32_t> masks;
    masks.reserve(ideal.size());
    for (const auto& g : ideal.mingens()) {
        std::uint32_t mask = 0;
        for (auto i : g.support())
            mask |= 1u << i;
        masks.push_back(mask);
    }
    return masks;
}

inline void hitting_set_branch(const std::vector<std::uint32_t>& masks, std::uint32_t chosen,
                               int depth, int& best)
{
    if (depth >= best)
        return;
    const std::uint32_t* missed = nullptr;
    for (const auto& m : masks)
        if ((m & chosen) == 0) {
            if (!missed || std::popcount(m) < std::popcount(*missed))
                missed = &m;
        }
    if (!missed) {
        best = depth;
        return;
    }
    if (depth + 1 >= best)
        return;
    // some variable of the smallest uncovered support must be chosen
    for (std::uint32_t bits = *missed; bits; bits &= bits - 1)
        hitting_set_branch(masks, chosen | (bits & -bits), depth + 1, best);
}

} // namespace detail

/// ht I as an exact minimum hitting set of the generator supports, found by
/// scanning variable subsets in order of size.
inline std::size_t height_exhaustive(const MonomialIdeal& ideal)
{
    const auto masks = detail::support_masks(ideal);
    const std::size_t n = ideal.num_vars();
    if (n > 24)
        throw Error(ErrorCode::InvalidParameters, "exhaustive height search capped at 24 variables");
    std::size_t best = n;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        const auto size = static_cast<std::size_t>(std::popcount(subset));
        if (size >= best)
            continue;
        bool hits = true;
        for (auto m : masks)
            if ((m & subset) == 0) {
                hits = false;
                break;
            }
        if (hits)
            best = size;
    }
    return best;
}

/// ht I by branch-and-bound on the smallest uncovered generator support.
inline std::size_t height(const MonomialIdeal& ideal)
{
    const auto masks = detail::support_masks(ideal);
    int best = static_cast<int>(ideal.num_vars()) + 1;
    detail::hitting_set_branch(masks, 0, 0, best);
    return static_cast<std::size_t>(best);
}

/// dim S/I = n - ht I.
inline std::size_t krull_dim(const MonomialIdeal& ideal)
{
    return ideal.num_vars() - height(ideal);
}

} // namespace wog
