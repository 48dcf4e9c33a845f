#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wog/linalg.hpp"
#include "wog/monomial.hpp"

namespace wog {

/**
 * Multigraded Betti numbers of S/I, stored sparsely as
 * (homological index, multidegree) -> beta with beta > 0.
 */
class BettiTable {
public:
    using Key = std::pair<std::size_t, Monomial>;

    explicit BettiTable(std::size_t num_vars) : num_vars_(num_vars) {}

    void add(std::size_t i, const Monomial& degree, std::uint64_t beta)
    {
        if (beta == 0)
            return;
        if (degree.num_vars() != num_vars_)
            throw Error(ErrorCode::ContextMismatch, "Betti multidegree in foreign ring");
        entries_[{i, degree}] += beta;
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }

    std::uint64_t beta(std::size_t i, const Monomial& degree) const
    {
        auto it = entries_.find({i, degree});
        return it == entries_.end() ? 0 : it->second;
    }

    std::size_t pdim() const
    {
        std::size_t p = 0;
        for (const auto& [key, b] : entries_)
            p = std::max(p, key.first);
        return p;
    }

    std::size_t depth() const { return num_vars_ - pdim(); }

    /// max over nonzero entries of deg a - i.
    std::int64_t reg() const
    {
        std::int64_t r = 0;
        for (const auto& [key, b] : entries_)
            r = std::max(r, static_cast<std::int64_t>(key.second.degree()) -
                                static_cast<std::int64_t>(key.first));
        return r;
    }

    /// Sum of beta_{i,a} over all a.
    std::uint64_t total(std::size_t i) const
    {
        std::uint64_t t = 0;
        for (const auto& [key, b] : entries_)
            if (key.first == i)
                t += b;
        return t;
    }

    /// Coarse graded numbers beta_{i, i+row} keyed by (i, row).
    std::map<std::pair<std::size_t, std::int64_t>, std::uint64_t> graded() const
    {
        std::map<std::pair<std::size_t, std::int64_t>, std::uint64_t> out;
        for (const auto& [key, b] : entries_)
            out[{key.first, static_cast<std::int64_t>(key.second.degree()) -
                                static_cast<std::int64_t>(key.first)}] += b;
        return out;
    }

    /// Conventional grid: columns are i, rows are deg - i.
    std::string to_text() const
    {
        const auto g = graded();
        const std::size_t p = pdim();
        const std::int64_t r = reg();
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{""}, totals{"total:"};
        for (std::size_t i = 0; i <= p; ++i) {
            header.push_back(std::to_string(i));
            totals.push_back(std::to_string(total(i)));
        }
        cells.push_back(header);
        cells.push_back(totals);
        for (std::int64_t row = 0; row <= r; ++row) {
            std::vector<std::string> line{std::to_string(row) + ":"};
            for (std::size_t i = 0; i <= p; ++i) {
                auto it = g.find({i, row});
                line.push_back(it == g.end() ? "." : std::to_string(it->second));
            }
            cells.push_back(line);
        }
        std::vector<std::size_t> width(p + 2, 0);
        for (const auto& line : cells)
            for (std::size_t c = 0; c < line.size(); ++c)
                width[c] = std::max(width[c], line[c].size());
        std::ostringstream os;
        for (const auto& line : cells) {
            for (std::size_t c = 0; c < line.size(); ++c) {
                if (c)
                    os << ' ';
                os << std::string(width[c] - line[c].size(), ' ') << line[c];
            }
            os << '\n';
        }
        return os.str();
    }

    /// Entrywise sum; associative and commutative, used to fold strand results.
    void merge(const BettiTable& other)
    {
        if (other.num_vars_ != num_vars_)
            throw Error(ErrorCode::ContextMismatch, "merging Betti tables of different rings");
        for (const auto& [key, b] : other.entries_)
            entries_[key] += b;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::size_t num_vars_;
    std::map<Key, std::uint64_t> entries_;
};

struct BettiConfig {
    /// 2^q Taylor basis elements are enumerated.
    std::size_t max_generators = 20;
};

namespace detail {

/// lcm of every subset of the generators, indexed by bitmask, flattened.
struct LcmLattice {
    std::size_t q = 0;
    std::size_t n = 0;
    std::vector<Monomial::Exponent> exps;
    std::vector<std::uint32_t> group;   // lcm class id per mask
    std::vector<std::uint32_t> representative; // one mask per class

    const Monomial::Exponent* row(std::uint32_t mask) const { return exps.data() + std::size_t{mask} * n; }

    Monomial monomial(std::uint32_t mask) const
    {
        return Monomial(std::vector<Monomial::Exponent>(row(mask), row(mask) + n));
    }
};

inline LcmLattice build_lcm_lattice(const MonomialIdeal& ideal, const BettiConfig& cfg)
{
    const auto& gens = ideal.mingens();
    if (gens.size() > cfg.max_generators || gens.size() > 30)
        throw Error(ErrorCode::TooManyGenerators,
                    std::to_string(gens.size()) + " generators exceed the cap of " +
                        std::to_string(std::min<std::size_t>(cfg.max_generators, 30)));
    LcmLattice lat;
    lat.q = gens.size();
    lat.n = ideal.num_vars();
    const std::size_t total = std::size_t{1} << lat.q;
    const std::size_t n = lat.n;
    lat.exps.assign(total * n, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t prev = mask & (mask - 1);
        auto* dst = lat.exps.data() + mask * n;
        const auto* src = lat.exps.data() + prev * n;
        const auto& g = gens[low];
        for (std::size_t v = 0; v < n; ++v)
            dst[v] = std::max(src[v], g[v]);
    }

    // pack each lcm into 64 bits when the exponent ranges allow it
    const Monomial top = ideal.lcm_all();
    std::vector<unsigned> shift(n);
    unsigned bits = 0;
    for (std::size_t v = 0; v < n; ++v) {
        shift[v] = bits;
        bits += static_cast<unsigned>(std::bit_width(top[v]));
    }
    lat.group.assign(total, 0);
    if (bits <= 64) {
        std::unordered_map<std::uint64_t, std::uint32_t> ids;
        ids.reserve(total);
        for (std::size_t mask = 0; mask < total; ++mask) {
            std::uint64_t key = 0;
            const auto* r = lat.exps.data() + mask * n;
            for (std::size_t v = 0; v < n; ++v)
                if (top[v])
                    key |= std::uint64_t{r[v]} << shift[v];
            auto [it, fresh] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
            if (fresh)
                lat.representative.push_back(static_cast<std::uint32_t>(mask));
            lat.group[mask] = it->second;
        }
    } else {
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> ids;
        for (std::size_t mask = 0; mask < total; ++mask) {
            auto [it, fresh] =
                ids.try_emplace(lat.monomial(static_cast<std::uint32_t>(mask)),
                                static_cast<std::uint32_t>(ids.size()));
            if (fresh)
                lat.representative.push_back(static_cast<std::uint32_t>(mask));
            lat.group[mask] = it->second;
        }
    }
    return lat;
}

} // namespace detail

/**
 * Betti numbers of S/I as homology of the Taylor complex tensored with the
 * field, one multidegree strand at a time. In the strand of multidegree a the
 * basis is {sigma : lcm(sigma) = a} and the differential keeps exactly the
 * faces sigma \ {m} whose lcm is still a.
 */
inline BettiTable betti_table(const MonomialIdeal& ideal,
                              const FieldChoice& field = FieldChoice::rationals(),
                              const BettiConfig& cfg = {})
{
    const auto lat = detail::build_lcm_lattice(ideal, cfg);
    const std::size_t total = std::size_t{1} << lat.q;
    const std::size_t classes = lat.representative.size();

    // masks bucketed by (class, popcount)
    std::vector<std::uint32_t> order(total);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (lat.group[a] != lat.group[b])
            return lat.group[a] < lat.group[b];
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint32_t> pos(total, 0);

    BettiTable table(ideal.num_vars());
    std::size_t start = 0;
    for (std::size_t cls = 0; cls < classes; ++cls) {
        std::size_t end = start;
        while (end < total && lat.group[order[end]] == cls)
            ++end;
        const Monomial degree = lat.monomial(order[start]);
        if (end - start == 1) {
            table.add(static_cast<std::size_t>(std::popcount(order[start])), degree, 1);
            start = end;
            continue;
        }

        // level boundaries and positions inside each level
        std::vector<std::size_t> level_begin(lat.q + 2);
        for (std::size_t lv = 0, k = start; lv <= lat.q + 1; ++lv) {
            while (k < end && static_cast<std::size_t>(std::popcount(order[k])) < lv)
                ++k;
            level_begin[lv] = k;
        }
        auto level_size = [&](std::size_t lv) { return level_begin[lv + 1] - level_begin[lv]; };
        for (std::size_t lv = 0; lv <= lat.q; ++lv)
            for (std::size_t k = level_begin[lv]; k < level_begin[lv + 1]; ++k)
                pos[order[k]] = static_cast<std::uint32_t>(k - level_begin[lv]);

        // rank of d_i : C_i -> C_{i-1} for every level
        std::vector<std::size_t> ranks(lat.q + 2, 0);
        for (std::size_t lv = 1; lv <= lat.q; ++lv) {
            if (level_size(lv) == 0 || level_size(lv - 1) == 0)
                continue;
            IntMatrix d(level_size(lv), level_size(lv - 1));
            for (std::size_t k = level_begin[lv]; k < level_begin[lv + 1]; ++k) {
                const std::uint32_t sigma = order[k];
                int j = 0;
                for (std::uint32_t bits = sigma; bits; bits &= bits - 1, ++j) {
                    const std::uint32_t face = sigma & ~(bits & (~bits + 1));
                    if (lat.group[face] != cls)
                        continue;
                    d(pos[sigma], pos[face]) = (j % 2 == 0) ? 1 : -1;
                }
            }
            ranks[lv] = rank(d, field);
        }
        for (std::size_t lv = 0; lv <= lat.q; ++lv) {
            const std::size_t dim = level_size(lv);
            if (dim == 0)
                continue;
            const std::size_t b = dim - ranks[lv] - ranks[lv + 1];
            table.add(lv, degree, b);
        }
        start = end;
    }
    return table;
}

/**
 * Independent route to a single Betti number: beta_{i,a}(S/I) is the rank of
 * reduced homology in degree i-2 of the upper Koszul simplicial complex
 * { squarefree W subset of supp(a) : x^a / x^W in I }.
 */
inline std::uint64_t betti_via_upper_koszul(const MonomialIdeal& ideal, const Monomial& a,
                                            std::size_t i,
                                            const FieldChoice& field = FieldChoice::rationals())
{
    ideal.lcm_all().check_same_context(a);
    if (i < 1)
        throw Error(ErrorCode::InvalidMultidegree, "upper Koszul formula needs i >= 1");
    if (!a.divides(ideal.lcm_all()))
        throw Error(ErrorCode::InvalidMultidegree, "multidegree does not divide lcm(Mingens)");

    const auto supp = a.support();
    const std::size_t k = supp.size();
    if (k > 24)
        throw Error(ErrorCode::InvalidMultidegree, "support too large for simplicial search");
    const std::size_t faces_total = std::size_t{1} << k;

    std::vector<char> in_complex(faces_total, 0);
    std::vector<Monomial::Exponent> shifted(a.num_vars());
    for (std::size_t w = 0; w < faces_total; ++w) {
        for (std::size_t v = 0; v < a.num_vars(); ++v)
            shifted[v] = a[v];
        for (std::size_t b = 0; b < k; ++b)
            if (w >> b & 1)
                shifted[supp[b]] -= 1;
        in_complex[w] = ideal.contains(Monomial(shifted)) ? 1 : 0;
    }

    // faces of size s
    auto faces_of_size = [&](std::size_t s) {
        std::vector<std::uint32_t> out;
        for (std::size_t w = 0; w < faces_total; ++w)
            if (in_complex[w] && static_cast<std::size_t>(std::popcount(w)) == s)
                out.push_back(static_cast<std::uint32_t>(w));
        return out;
    };
    // boundary from size-s faces to size-(s-1) faces
    auto boundary_rank = [&](std::size_t s) -> std::size_t {
        if (s == 0 || s > k)
            return 0;
        const auto hi = faces_of_size(s);
        const auto lo = faces_of_size(s - 1);
        if (hi.empty() || lo.empty())
            return 0;
        std::unordered_map<std::uint32_t, std::size_t> index;
        for (std::size_t t = 0; t < lo.size(); ++t)
            index[lo[t]] = t;
        IntMatrix d(hi.size(), lo.size());
        for (std::size_t r = 0; r < hi.size(); ++r) {
            int j = 0;
            for (std::uint32_t bits = hi[r]; bits; bits &= bits - 1, ++j) {
                const std::uint32_t face = hi[r] & ~(bits & (~bits + 1));
                d(r, index.at(face)) = (j % 2 == 0) ? 1 : -1;
            }
        }
        return rank(d, field);
    };

    const std::size_t s = i - 1; // reduced degree i-2 <-> faces of size i-1
    if (s > k)
        return 0;
    const std::size_t dim = faces_of_size(s).size();
    if (dim == 0)
        return 0;
    return dim - boundary_rank(s) - boundary_rank(s + 1);
}

inline std::size_t pdim(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::rationals())
{
    return betti_table(ideal, field).pdim();
}

/// Auslander-Buchsbaum: depth = n - pdim.
inline std::size_t depth(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::rationals())
{
    return betti_table(ideal, field).depth();
}

inline std::int64_t reg(const MonomialIdeal& ideal, const FieldChoice& field = FieldChoice::rationals())
{
    return betti_table(ideal, field).reg();
}

} // namespace wog
