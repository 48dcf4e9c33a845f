#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wog/error.hpp"

namespace wog {

/// Coefficient field: the rationals or GF(p).
class FieldChoice {
public:
    static FieldChoice rationals() { return FieldChoice(0); }
    static FieldChoice gf2() { return FieldChoice(2); }

    static FieldChoice prime(std::uint32_t p)
    {
        if (!is_prime(p))
            throw Error(ErrorCode::InvalidParameters, std::to_string(p) + " is not prime");
        if (p > (1u << 31))
            throw Error(ErrorCode::InvalidParameters, "prime fields limited to p < 2^31");
        return FieldChoice(p);
    }

    bool is_rationals() const noexcept { return p_ == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

    static bool is_prime(std::uint32_t p)
    {
        if (p < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

    friend bool operator==(const FieldChoice&, const FieldChoice&) = default;

private:
    explicit FieldChoice(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Dense row-major integer matrix; boundary maps only ever hold 0 and +-1.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

namespace detail {

inline std::size_t rank_gf2(const IntMatrix& m)
{
    const std::size_t words = (m.cols + 63) / 64;
    std::vector<std::uint64_t> bits(m.rows * words, 0);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m(r, c) & 1)
                bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < m.rows && !(bits[pivot * words + w] & bit))
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < words; ++k)
                std::swap(bits[pivot * words + k], bits[rank * words + k]);
        for (std::size_t r = rank + 1; r < m.rows; ++r)
            if (bits[r * words + w] & bit)
                for (std::size_t k = w; k < words; ++k)
                    bits[r * words + k] ^= bits[rank * words + k];
        ++rank;
    }
    return rank;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1)
            acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

inline std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p)
{
    std::vector<std::uint64_t> a(m.data.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t v = m.data[i] % static_cast<std::int64_t>(p);
        a[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * m.cols + c]; };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows && at(pivot, c) == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        if (pivot != rank)
            for (std::size_t k = c; k < m.cols; ++k)
                std::swap(at(pivot, k), at(rank, k));
        const std::uint64_t inv = pow_mod(at(rank, c), p - 2, p);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            if (at(r, c) == 0)
                continue;
            const std::uint64_t f = at(r, c) * inv % p;
            for (std::size_t k = c; k < m.cols; ++k)
                at(r, k) = (at(r, k) + (p - f) * at(rank, k)) % p;
        }
        ++rank;
    }
    return rank;
}

struct CheckedInt64 {
    using value_type = std::int64_t;
    static bool mul(value_type a, value_type b, value_type& out) { return !__builtin_mul_overflow(a, b, &out); }
    static bool sub(value_type a, value_type b, value_type& out)
    {
        // INT64_MIN has no absolute value; treat it as overflow
        return !__builtin_sub_overflow(a, b, &out) && out != std::numeric_limits<value_type>::min();
    }
    static value_type abs(value_type a) { return a < 0 ? -a : a; }
    static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
};

struct BigInt {
    using value_type = boost::multiprecision::cpp_int;
    static bool mul(const value_type& a, const value_type& b, value_type& out)
    {
        out = a * b;
        return true;
    }
    static bool sub(const value_type& a, const value_type& b, value_type& out)
    {
        out = a - b;
        return true;
    }
    static value_type abs(const value_type& a) { return boost::multiprecision::abs(a); }
    static value_type gcd(const value_type& a, const value_type& b) { return boost::multiprecision::gcd(a, b); }
};

/// Fraction-free elimination over Z with primitive-part reduction after each
/// row update. Returns nullopt if Ops overflows.
template <class Ops>
std::optional<std::size_t> rank_integer(const IntMatrix& m)
{
    using Int = typename Ops::value_type;
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            a[r][c] = Int(m(r, c));

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        // smallest nonzero magnitude pivot keeps entries small
        std::size_t pivot = m.rows;
        for (std::size_t r = rank; r < m.rows; ++r) {
            if (a[r][c] == 0)
                continue;
            if (pivot == m.rows || Ops::abs(a[r][c]) < Ops::abs(a[pivot][c]))
                pivot = r;
            if (Ops::abs(a[pivot][c]) == 1)
                break;
        }
        if (pivot == m.rows)
            continue;
        std::swap(a[pivot], a[rank]);
        const auto& prow = a[rank];
        const Int p = prow[c];
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            auto& row = a[r];
            if (row[c] == 0)
                continue;
            const Int g = Ops::gcd(Ops::abs(p), Ops::abs(row[c]));
            const Int scale_row = p / g;
            const Int scale_piv = row[c] / g;
            Int content = 0;
            for (std::size_t k = c; k < m.cols; ++k) {
                Int lhs, rhs;
                if (!Ops::mul(row[k], scale_row, lhs) || !Ops::mul(prow[k], scale_piv, rhs) ||
                    !Ops::sub(lhs, rhs, row[k]))
                    return std::nullopt;
                if (row[k] != 0)
                    content = Ops::gcd(content, Ops::abs(row[k]));
            }
            if (content > 1)
                for (std::size_t k = c; k < m.cols; ++k)
                    row[k] /= content;
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Exact rank of an integer matrix over the chosen field.
inline std::size_t rank(const IntMatrix& m, const FieldChoice& field)
{
    if (m.rows == 0 || m.cols == 0)
        return 0;
    if (field.characteristic() == 2)
        return detail::rank_gf2(m);
    if (!field.is_rationals())
        return detail::rank_mod_p(m, field.characteristic());
    if (auto r = detail::rank_integer<detail::CheckedInt64>(m))
        return *r;
    return *detail::rank_integer<detail::BigInt>(m);
}

} // namespace wog
