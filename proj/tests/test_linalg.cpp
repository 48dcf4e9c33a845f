#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "wog/linalg.hpp"

using namespace wog;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::int64_t lo, std::int64_t hi,
                        double density = 0.6)
{
    IntMatrix m(r, c);
    std::uniform_int_distribution<std::int64_t> val(lo, hi);
    std::bernoulli_distribution nz(density);
    for (auto& x : m.data)
        x = nz(rng) ? val(rng) : 0;
    return m;
}

// Rank over Q by exact rational elimination.
std::size_t rational_rank(const IntMatrix& m)
{
    std::vector<std::vector<cpp_rational>> a(m.rows, std::vector<cpp_rational>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t p = rank;
        while (p < m.rows && a[p][c] == 0)
            ++p;
        if (p == m.rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows; ++r)
            if (r != rank && a[r][c] != 0) {
                const cpp_rational f = a[r][c] / a[rank][c];
                for (std::size_t k = c; k < m.cols; ++k)
                    a[r][k] -= f * a[rank][k];
            }
        ++rank;
    }
    return rank;
}

// Determinant by cofactor expansion, reduced mod p when p > 0.
cpp_int det(const std::vector<std::vector<cpp_int>>& a, std::uint64_t p)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    cpp_int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        std::vector<std::vector<cpp_int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<cpp_int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(row);
        }
        const cpp_int term = a[0][j] * det(minor, p);
        total += (j % 2 == 0) ? term : cpp_int(-term);
    }
    return p ? cpp_int(((total % p) + p) % p) : total;
}

// Rank as the largest size of a nonvanishing minor.
std::size_t minors_rank(const IntMatrix& m, std::uint64_t p)
{
    const std::size_t k_max = std::min(m.rows, m.cols);
    std::size_t best = 0;
    for (std::uint32_t rows = 1; rows < (1u << m.rows); ++rows)
        for (std::uint32_t cols = 1; cols < (1u << m.cols); ++cols) {
            const auto k = static_cast<std::size_t>(std::popcount(rows));
            if (k != static_cast<std::size_t>(std::popcount(cols)) || k <= best || k > k_max)
                continue;
            std::vector<std::vector<cpp_int>> sub;
            for (std::size_t r = 0; r < m.rows; ++r) {
                if (!(rows >> r & 1))
                    continue;
                std::vector<cpp_int> row;
                for (std::size_t c = 0; c < m.cols; ++c)
                    if (cols >> c & 1)
                        row.push_back(m(r, c));
                sub.push_back(row);
            }
            if (det(sub, p) != 0)
                best = k;
        }
    return best;
}

} // namespace

TEST(FieldChoice, Names)
{
    EXPECT_EQ(FieldChoice::rationals().name(), "QQ");
    EXPECT_EQ(FieldChoice::gf2().name(), "GF(2)");
    EXPECT_EQ(FieldChoice::prime(7).characteristic(), 7u);
    EXPECT_THROW(FieldChoice::prime(9), Error);
    EXPECT_THROW(FieldChoice::prime(1), Error);
}

TEST(Rank, EmptyAndIdentity)
{
    EXPECT_EQ(rank(IntMatrix(0, 3), FieldChoice::rationals()), 0u);
    IntMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id(i, i) = 1;
    for (auto f : {FieldChoice::rationals(), FieldChoice::gf2(), FieldChoice::prime(3)})
        EXPECT_EQ(rank(id, f), 3u);
}

TEST(Rank, CharacteristicDependence)
{
    // [[1,1],[1,-1]] has determinant -2
    IntMatrix m(2, 2);
    m(0, 0) = m(0, 1) = m(1, 0) = 1;
    m(1, 1) = -1;
    EXPECT_EQ(rank(m, FieldChoice::rationals()), 2u);
    EXPECT_EQ(rank(m, FieldChoice::gf2()), 1u);
    EXPECT_EQ(rank(m, FieldChoice::prime(3)), 2u);
}

TEST(Rank, MatchesMinorsOracle)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -1, 1);
        EXPECT_EQ(rank(m, FieldChoice::rationals()), minors_rank(m, 0));
        EXPECT_EQ(rank(m, FieldChoice::gf2()), minors_rank(m, 2));
        EXPECT_EQ(rank(m, FieldChoice::prime(3)), minors_rank(m, 3));
    }
}

TEST(Rank, LargeEntriesFallBackToBigIntegers)
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 6 + rng() % 5, c = 6 + rng() % 5;
        auto m = random_matrix(rng, r, c, -4'000'000'000'000LL, 4'000'000'000'000LL, 0.9);
        if (trial % 2 == 0) // force a dependency
            for (std::size_t k = 0; k < c; ++k)
                m(r - 1, k) = m(0, k) - m(1, k);
        EXPECT_EQ(rank(m, FieldChoice::rationals()), rational_rank(m));
    }
}

TEST(Rank, SignedUnitMatricesAgreeWithRationalElimination)
{
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = random_matrix(rng, 2 + rng() % 20, 2 + rng() % 20, -1, 1, 0.4);
        EXPECT_EQ(rank(m, FieldChoice::rationals()), rational_rank(m));
    }
}
