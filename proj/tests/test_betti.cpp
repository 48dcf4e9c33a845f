#include <gtest/gtest.h>

#include <iostream>
#include <set>

#include "corpus.hpp"
#include "wog/betti.hpp"
#include "wog/families.hpp"
#include "wog/resolutions.hpp"

using namespace wog;

namespace {

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

std::set<Monomial> lcm_lattice(const MonomialIdeal& ideal)
{
    std::set<Monomial> out;
    const auto& g = ideal.mingens();
    for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
        Monomial m(ideal.num_vars());
        for (std::size_t k = 0; k < g.size(); ++k)
            if (mask >> k & 1)
                m = lcm(m, g[k]);
        out.insert(m);
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST(BettiTable, SingleGenerator)
{
    const auto t = betti_table(minimize_generators({mono({1, 1})}));
    EXPECT_EQ(t.entries().size(), 2u);
    EXPECT_EQ(t.beta(0, mono({0, 0})), 1u);
    EXPECT_EQ(t.beta(1, mono({1, 1})), 1u);
    EXPECT_EQ(t.pdim(), 1u);
    EXPECT_EQ(t.reg(), 1);
    EXPECT_EQ(t.depth(), 1u);
}

TEST(BettiTable, WeightedTriangle)
{
    const auto t = betti_table(edge_ideal(cycle_naturally_oriented(3, {2, 2, 2})));
    EXPECT_EQ(t.pdim(), 3u);
    EXPECT_EQ(t.reg(), 3);
}

TEST(BettiTable, PathOnFour)
{
    const auto ideal = edge_ideal(path(4));
    const auto t = betti_table(ideal);
    EXPECT_EQ(t.pdim(), 2u);
    EXPECT_EQ(t.reg(), 1);
    for (const auto& [key, b] : t.entries())
        if (key.first >= 1) {
            EXPECT_EQ(betti_via_upper_koszul(ideal, key.second, key.first), b);
        }
}

TEST(BettiTable, StarAndFamilyMember)
{
    const auto s = betti_table(edge_ideal(star(5, {1, 1, 1, 1, 1})));
    EXPECT_EQ(s.pdim(), 4u);
    EXPECT_EQ(s.depth(), 1u);
    EXPECT_EQ(s.reg(), 1);

    const auto g = family_G(0, 0, 1);
    EXPECT_EQ(g.weights(), (std::vector<std::uint32_t>{3, 2, 2}));
    const auto t = betti_table(edge_ideal(g));
    EXPECT_EQ(t.depth(), 0u);
    EXPECT_EQ(t.reg(), 4);

    const auto e = betti_table(edge_ideal(path(2)));
    EXPECT_EQ(e.depth(), 1u);
    EXPECT_EQ(e.num_vars(), 2u);
}

TEST(BettiTable, TextGrid)
{
    const auto text = betti_table(edge_ideal(path(3))).to_text();
    EXPECT_NE(text.find("total: 1 2 1"), std::string::npos) << text;
    EXPECT_NE(text.find("0: 1 . ."), std::string::npos) << text;
    EXPECT_NE(text.find("1: . 2 1"), std::string::npos) << text;
}

TEST(BettiTable, TooManyGenerators)
{
    BettiConfig cfg;
    cfg.max_generators = 2;
    try {
        (void)betti_table(edge_ideal(path(4)), FieldChoice::rationals(), cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooManyGenerators);
    }
}

TEST(UpperKoszul, Examples)
{
    const auto single = minimize_generators({mono({1, 1})});
    EXPECT_EQ(betti_via_upper_koszul(single, mono({1, 1}), 1), 1u);
    EXPECT_EQ(betti_via_upper_koszul(single, mono({1, 0}), 1), 0u);

    const auto tri = edge_ideal(cycle_naturally_oriented(3, {2, 2, 2}));
    EXPECT_EQ(betti_via_upper_koszul(tri, tri.lcm_all(), 3), 1u);

    EXPECT_THROW((void)betti_via_upper_koszul(single, mono({2, 1}), 1), Error);
    EXPECT_THROW((void)betti_via_upper_koszul(single, mono({1, 1}), 0), Error);
}

TEST(UpperKoszul, VanishesOffTheLcmLattice)
{
    corpus::Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const auto ideal = corpus::random_ideal(rng, 4, 5, 2);
        const auto lattice = lcm_lattice(ideal);
        const auto top = ideal.lcm_all();
        // every divisor of the top lcm
        std::vector<std::uint32_t> e(ideal.num_vars(), 0);
        while (true) {
            const Monomial a(e);
            if (!lattice.count(a)) {
                for (std::size_t i = 1; i <= ideal.size() + 1; ++i)
                    EXPECT_EQ(betti_via_upper_koszul(ideal, a, i), 0u);
            }
            std::size_t v = 0;
            while (v < e.size() && e[v] == top[v])
                e[v++] = 0;
            if (v == e.size())
                break;
            ++e[v];
        }
    }
}

TEST(OracleEquivalence, TaylorStrandsMatchUpperKoszul)
{
    const auto ideals = corpus::ideal_corpus(30, 555);
    for (const auto& ideal : ideals)
        for (auto field : {FieldChoice::rationals(), FieldChoice::gf2()}) {
            const auto t = betti_table(ideal, field);
            for (const auto& a : lcm_lattice(ideal))
                for (std::size_t i = 1; i <= ideal.size(); ++i)
                    ASSERT_EQ(t.beta(i, a), betti_via_upper_koszul(ideal, a, i, field))
                        << ideal.to_string() << " i=" << i << " a=" << a << " over " << field.name();
        }
}

TEST(BettiTable, StructuralInvariants)
{
    for (const auto& ideal : corpus::ideal_corpus(60, 808)) {
        const auto t = betti_table(ideal);
        const auto lattice = lcm_lattice(ideal);
        std::size_t zero_entries = 0;
        for (const auto& [key, b] : t.entries()) {
            if (key.first == 0) {
                ++zero_entries;
                EXPECT_TRUE(key.second.is_one());
                EXPECT_EQ(b, 1u);
            } else {
                EXPECT_TRUE(lattice.count(key.second));
            }
        }
        EXPECT_EQ(zero_entries, 1u);
        EXPECT_LE(t.pdim(), ideal.size());
        EXPECT_LE(t.pdim(), ideal.num_vars());
        EXPECT_EQ(t.depth() + t.pdim(), ideal.num_vars());
        std::size_t min_degree = ideal.mingens().front().degree();
        for (const auto& g : ideal.mingens())
            min_degree = std::min(min_degree, g.degree());
        EXPECT_GE(t.reg(), static_cast<std::int64_t>(min_degree) - 1);
    }
}

TEST(BettiTable, PrimeFieldMatchesRationalsOnCorpus)
{
    for (const auto& ideal : corpus::ideal_corpus(40, 4242))
        EXPECT_EQ(betti_table(ideal, FieldChoice::prime(3)), betti_table(ideal, FieldChoice::rationals()));
}

TEST(BettiTable, CharacteristicCrossCheckIsRecorded)
{
    // Betti numbers may depend on the characteristic; report, do not assume.
    std::size_t differ = 0;
    const auto ideals = corpus::ideal_corpus(80, 2718);
    for (const auto& ideal : ideals)
        if (!(betti_table(ideal, FieldChoice::gf2()) == betti_table(ideal, FieldChoice::rationals()))) {
            ++differ;
            std::cout << "characteristic-dependent Betti table: " << ideal.to_string() << '\n';
        }
    std::cout << "GF(2) vs QQ: " << differ << " of " << ideals.size() << " corpus ideals differ\n";
    SUCCEED();
}

TEST(BettiTable, MergeIsEntrywiseSum)
{
    BettiTable a(2), b(2);
    a.add(1, mono({1, 1}), 2);
    b.add(1, mono({1, 1}), 3);
    b.add(2, mono({1, 1}), 1);
    BettiTable ab = a, ba = b;
    ab.merge(b);
    ba.merge(a);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(ab.beta(1, mono({1, 1})), 5u);
    EXPECT_THROW(a.merge(BettiTable(3)), Error);
}

TEST(TaylorMinimal, BinomialTotals)
{
    for (const auto& ideal : corpus::ideal_corpus(150, 99)) {
        if (!is_taylor_minimal(ideal))
            continue;
        const auto t = betti_table(ideal);
        for (std::size_t i = 0; i <= ideal.size(); ++i)
            EXPECT_EQ(t.total(i), binomial(ideal.size(), i));
        const auto inv = reg_if_taylor_minimal(ideal);
        EXPECT_EQ(inv.pdim, t.pdim());
        EXPECT_EQ(inv.reg, t.reg());
    }
}
