#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wog/error.hpp"

namespace wog {

/// Polynomial ring k[x1..xn]: the number of variables and their print names.
class RingContext {
public:
    explicit RingContext(std::size_t num_vars) : names_(num_vars)
    {
        if (num_vars == 0)
            throw Error(ErrorCode::InvalidParameters, "ring needs at least one variable");
        for (std::size_t i = 0; i < num_vars; ++i)
            names_[i] = "x" + std::to_string(i + 1);
    }

    explicit RingContext(std::vector<std::string> names) : names_(std::move(names))
    {
        if (names_.empty())
            throw Error(ErrorCode::InvalidParameters, "ring needs at least one variable");
        std::unordered_set<std::string> seen;
        for (const auto& name : names_) {
            if (name.empty())
                throw Error(ErrorCode::InvalidParameters, "empty variable name");
            if (!seen.insert(name).second)
                throw Error(ErrorCode::InvalidParameters, "duplicate variable name " + name);
        }
    }

    std::size_t num_vars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    std::vector<std::string> names_;
};

/// A monomial stored as a dense exponent vector. The zero vector is 1.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1)
    {
        Monomial m(num_vars);
        m.exps_.at(index) = power;
        return m;
    }

    std::size_t num_vars() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept
    {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const noexcept
    {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool is_squarefree() const noexcept
    {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0)
                out.push_back(i);
        return out;
    }

    bool divides(const Monomial& other) const
    {
        check_same_context(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i])
                return false;
        return true;
    }

    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const
    {
        if (!divides(other))
            throw Error(ErrorCode::InvalidParameters, "quotient of non-multiple");
        std::vector<Exponent> q(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            q[i] = other.exps_[i] - exps_[i];
        return Monomial(std::move(q));
    }

    Monomial operator*(const Monomial& other) const
    {
        check_same_context(other);
        std::vector<Exponent> p(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            p[i] = exps_[i] + other.exps_[i];
        return Monomial(std::move(p));
    }

    void check_same_context(const Monomial& other) const
    {
        if (other.exps_.size() != exps_.size())
            throw Error(ErrorCode::ContextMismatch,
                        "monomials over " + std::to_string(exps_.size()) + " and " +
                            std::to_string(other.exps_.size()) + " variables");
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string(const RingContext& ctx) const
    {
        if (ctx.num_vars() != exps_.size())
            throw Error(ErrorCode::ContextMismatch, "printing monomial in foreign ring");
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0)
                continue;
            if (!first)
                os << '*';
            first = false;
            os << ctx.name(i);
            if (exps_[i] > 1)
                os << '^' << exps_[i];
        }
        if (first)
            os << '1';
        return os.str();
    }

    std::string to_string() const { return to_string(RingContext(std::max<std::size_t>(exps_.size(), 1))); }

private:
    std::vector<Exponent> exps_;
};

inline std::ostream& operator<<(std::ostream& os, const Monomial& m)
{
    return os << (m.num_vars() == 0 ? std::string("1") : m.to_string());
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto e : m.exponents()) {
            h ^= e;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    a.check_same_context(b);
    std::vector<Monomial::Exponent> out(a.num_vars());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return Monomial(std::move(out));
}

/// Componentwise maximum of the exponent vectors.
inline Monomial lcm_of(std::span<const Monomial> ms)
{
    if (ms.empty())
        throw Error(ErrorCode::EmptySet, "lcm of an empty set");
    Monomial acc = ms.front();
    for (const auto& m : ms.subspan(1))
        acc = lcm(acc, m);
    return acc;
}

/// m strongly divides m2: m | m2 and every variable of m still divides m2 / m.
inline bool strongly_divides(const Monomial& m, const Monomial& m2)
{
    if (!m.divides(m2))
        return false;
    for (std::size_t i = 0; i < m.num_vars(); ++i)
        if (m[i] > 0 && m2[i] - m[i] == 0)
            return false;
    return true;
}

/// m is dominant in M when dropping it changes lcm(M).
inline bool is_dominant_in(const Monomial& m, std::span<const Monomial> set)
{
    std::size_t hits = 0;
    for (const auto& x : set) {
        x.check_same_context(m);
        if (x == m)
            ++hits;
    }
    if (hits == 0)
        throw Error(ErrorCode::NotAMember, "monomial not in the set");
    if (hits > 1)
        return false;
    if (set.size() == 1)
        return true;
    std::vector<Monomial> rest;
    rest.reserve(set.size() - 1);
    for (const auto& x : set)
        if (!(x == m))
            rest.push_back(x);
    return lcm_of(set) != lcm_of(rest);
}

inline bool is_dominant_set(std::span<const Monomial> set)
{
    if (set.empty())
        throw Error(ErrorCode::EmptySet, "dominance of an empty set");
    return std::all_of(set.begin(), set.end(),
                       [&](const Monomial& m) { return is_dominant_in(m, set); });
}

/// A proper nonzero monomial ideal, held by its minimal generators.
/// Generators are kept in decreasing lex order of exponent vectors.
class MonomialIdeal {
public:
    MonomialIdeal(RingContext ctx, std::vector<Monomial> gens) : ctx_(std::move(ctx))
    {
        if (gens.empty())
            throw Error(ErrorCode::EmptyGenerators, "ideal needs at least one generator");
        for (const auto& g : gens) {
            if (g.num_vars() != ctx_.num_vars())
                throw Error(ErrorCode::ContextMismatch, "generator has " +
                                                            std::to_string(g.num_vars()) +
                                                            " exponents, ring has " +
                                                            std::to_string(ctx_.num_vars()));
            if (g.is_one())
                throw Error(ErrorCode::UnitGenerator, "the monomial 1 generates the unit ideal");
        }
        std::sort(gens.begin(), gens.end(), std::greater<>());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
                redundant = j != i && gens[j].divides(gens[i]);
            if (!redundant)
                kept.push_back(gens[i]);
        }
        gens_ = std::move(kept);
    }

    const RingContext& context() const noexcept { return ctx_; }
    std::size_t num_vars() const noexcept { return ctx_.num_vars(); }
    const std::vector<Monomial>& mingens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool contains(const Monomial& m) const
    {
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const Monomial& g) { return g.divides(m); });
    }

    bool is_squarefree() const
    {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& g) { return g.is_squarefree(); });
    }

    Monomial lcm_all() const { return lcm_of(gens_); }

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i)
                out += ", ";
            out += gens_[i].to_string(ctx_);
        }
        return out + ")";
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    RingContext ctx_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimize_generators(const RingContext& ctx, std::vector<Monomial> gens)
{
    return MonomialIdeal(ctx, std::move(gens));
}

/// Context is inferred from the generators (default names x1..xn).
inline MonomialIdeal minimize_generators(std::vector<Monomial> gens)
{
    if (gens.empty())
        throw Error(ErrorCode::EmptyGenerators, "ideal needs at least one generator");
    RingContext ctx(std::max<std::size_t>(gens.front().num_vars(), 1));
    return MonomialIdeal(ctx, std::move(gens));
}

} // namespace wog
