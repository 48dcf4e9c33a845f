#include <gtest/gtest.h>

#include <iostream>

#include "corpus.hpp"
#include "wog/families.hpp"
#include "wog/resolutions.hpp"

using namespace wog;

namespace {

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

} // namespace

TEST(TaylorMinimal, Examples)
{
    EXPECT_TRUE(is_taylor_minimal(edge_ideal(cycle_naturally_oriented(3, {2, 3, 2}))));
    EXPECT_FALSE(is_taylor_minimal(edge_ideal(cycle_naturally_oriented(3, {1, 1, 1}))));
    EXPECT_TRUE(is_taylor_minimal(minimize_generators({mono({2, 1})})));
}

TEST(TaylorMinimal, DominanceMatchesDefinition)
{
    for (const auto& ideal : corpus::ideal_corpus(300, 31337))
        EXPECT_EQ(is_taylor_minimal(ideal), is_taylor_minimal_by_definition(ideal)) << ideal.to_string();
}

TEST(TaylorMinimal, Formula)
{
    EXPECT_EQ(reg_if_taylor_minimal(edge_ideal(cycle_naturally_oriented(3, {2, 2, 2}))), (TaylorInvariants{3, 3}));
    EXPECT_EQ(reg_if_taylor_minimal(edge_ideal(WeightedOrientedGraph(2, {{0, 1}}, {1, 5}))),
              (TaylorInvariants{1, 5}));
    EXPECT_EQ(reg_if_taylor_minimal(edge_ideal(star(4, {1, 1, 1, 1}))), (TaylorInvariants{3, 1}));
    EXPECT_EQ(code_of([] { (void)reg_if_taylor_minimal(edge_ideal(cycle_naturally_oriented(3, {1, 1, 1}))); }),
              ErrorCode::TaylorNotMinimal);
}

TEST(Splitting, DisjointEdges)
{
    const auto ideal = minimize_generators({mono({1, 1, 0, 0}), mono({0, 0, 1, 1})});
    const auto rep = betti_splitting_check(ideal, 0);
    EXPECT_EQ(rep.j.mingens(), (std::vector<Monomial>{mono({1, 1, 0, 0})}));
    EXPECT_EQ(rep.k.mingens(), (std::vector<Monomial>{mono({0, 0, 1, 1})}));
    EXPECT_EQ(rep.j_cap_k.mingens(), (std::vector<Monomial>{mono({1, 1, 1, 1})}));
    EXPECT_TRUE(rep.k_linear);
    EXPECT_TRUE(rep.j_linear);
    EXPECT_TRUE(rep.pdim_identity_holds);
    EXPECT_TRUE(rep.reg_identity_holds);
    EXPECT_TRUE(rep.betti_identity_holds);
}

TEST(Splitting, TrivialSplit)
{
    const auto ideal = minimize_generators({mono({1, 1})});
    EXPECT_EQ(code_of([&] { (void)betti_splitting_check(ideal, 0); }), ErrorCode::TrivialSplit);
    EXPECT_EQ(code_of([&] {
                  (void)betti_splitting_check(ideal.context(), {}, {mono({1, 1})});
              }),
              ErrorCode::TrivialSplit);
}

TEST(Splitting, FamilyGGeneratorPartition)
{
    // G_{t+1,l,r}: J = y_{t+1} (x1, x2, x3, y1..yt), K = the edge ideal of G_{t,l,r}
    for (std::size_t t = 0; t <= 1; ++t)
        for (std::size_t l = 0; l <= 1; ++l)
            for (std::uint32_t r = 0; r <= 1; ++r) {
                const auto big = family_G(t + 1, l, r);
                const auto ideal = edge_ideal(big);
                const std::size_t y_new = 3 + t;
                std::vector<Monomial> jg, kg;
                for (const auto& g : ideal.mingens())
                    (g[y_new] > 0 ? jg : kg).push_back(g);
                const auto rep = betti_splitting_check(ideal.context(), jg, kg);
                EXPECT_TRUE(rep.pdim_identity_holds) << "t=" << t << " l=" << l << " r=" << r;
                EXPECT_TRUE(rep.reg_identity_holds) << "t=" << t << " l=" << l << " r=" << r;
                EXPECT_TRUE(rep.betti_identity_holds) << "t=" << t << " l=" << l << " r=" << r;
            }
}

TEST(Splitting, IdentitiesWheneverJIsLinear)
{
    corpus::Rng rng(2024);
    std::size_t checked = 0, k_linear_failures = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto ideal = corpus::random_ideal(rng, 6, 7, 2);
        for (std::size_t x = 0; x < ideal.num_vars(); ++x) {
            std::size_t in_j = 0;
            for (const auto& g : ideal.mingens())
                in_j += g[x] > 0;
            if (in_j == 0 || in_j == ideal.size())
                continue;
            const auto rep = betti_splitting_check(ideal, x);
            if (rep.k_linear && !(rep.pdim_identity_holds && rep.reg_identity_holds))
                ++k_linear_failures;
            if (!rep.j_linear)
                continue;
            ++checked;
            EXPECT_TRUE(rep.pdim_identity_holds) << ideal.to_string() << " x=" << x;
            EXPECT_TRUE(rep.reg_identity_holds) << ideal.to_string() << " x=" << x;
            EXPECT_TRUE(rep.betti_identity_holds) << ideal.to_string() << " x=" << x;
        }
    }
    std::cout << "splittings with linear J checked: " << checked
              << "; linear K but identities fail: " << k_linear_failures << '\n';
    EXPECT_GT(checked, 50u);
}

TEST(Splitting, LinearKIsNotEnough)
{
    // (x1^2 x2^2, x1 x3, x2 x3^2) split at x2: K = (x1 x3) is linear
    const auto ideal = minimize_generators({mono({2, 2, 0}), mono({1, 0, 1}), mono({0, 1, 2})});
    const auto rep = betti_splitting_check(ideal, 1);
    EXPECT_TRUE(rep.k_linear);
    EXPECT_FALSE(rep.j_linear);
    EXPECT_FALSE(rep.pdim_identity_holds);
    EXPECT_FALSE(rep.reg_identity_holds);
    EXPECT_FALSE(rep.betti_identity_holds);
}

TEST(Substitution, Examples)
{
    const auto single = minimize_generators({mono({1, 1})});
    EXPECT_EQ(substitute_power(single, 1, 2).mingens(), (std::vector<Monomial>{mono({1, 3})}));
    EXPECT_EQ(substitute_power(single, 1, 0), single);

    const auto p4 = edge_ideal(path(4));
    const auto x = find_reg_witness_variable(p4);
    const auto lifted = betti_table(substitute_power(p4, x, 3));
    EXPECT_EQ(lifted.pdim(), 2u);
    EXPECT_EQ(lifted.reg(), 4);
}

TEST(Substitution, WitnessExamples)
{
    EXPECT_EQ(find_reg_witness_variable(minimize_generators({mono({1, 1})})), 0u);
    EXPECT_EQ(code_of([] { (void)find_reg_witness_variable(minimize_generators({mono({2, 1})})); }),
              ErrorCode::NotSquarefree);

    const auto c5 = edge_ideal(cycle_naturally_oriented(5, {1, 1, 1, 1, 1}));
    const auto t = betti_table(c5);
    const auto x = find_reg_witness_variable(c5);
    bool attained = false;
    for (const auto& [key, b] : t.entries())
        if (key.first >= 1 && static_cast<std::int64_t>(key.second.degree()) - static_cast<std::int64_t>(key.first) ==
                                  t.reg())
            attained = attained || key.second[x] > 0;
    EXPECT_TRUE(attained);
}

TEST(Substitution, LiftLemmaOnSquarefreeCorpus)
{
    corpus::Rng rng(77);
    for (int trial = 0; trial < 120; ++trial) {
        const auto ideal = corpus::random_squarefree_ideal(rng, 7, 8);
        const auto base = betti_table(ideal);
        const auto x = find_reg_witness_variable(ideal);
        for (std::uint32_t r = 0; r <= 3; ++r) {
            const auto lifted = betti_table(substitute_power(ideal, x, r));
            EXPECT_EQ(lifted.pdim(), base.pdim()) << ideal.to_string() << " r=" << r;
            EXPECT_EQ(lifted.reg(), base.reg() + r) << ideal.to_string() << " r=" << r;
        }
    }
}

TEST(Weighting, DepthAndRegularityMonotone)
{
    corpus::Rng rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = corpus::random_connected_wog(rng, 2 + trial % 5, 3);
        const auto weighted = betti_table(edge_ideal(g));
        const auto plain = betti_table(edge_ideal(g.underlying()));
        EXPECT_LE(weighted.depth(), plain.depth());
        EXPECT_GE(weighted.reg(), plain.reg());
    }
}

TEST(Linearity, Examples)
{
    EXPECT_TRUE(has_linear_resolution(edge_ideal(star(4, {1, 1, 1, 1}))));
    EXPECT_TRUE(has_linear_resolution(edge_ideal(path(4))));
    EXPECT_FALSE(has_linear_resolution(edge_ideal(cycle_naturally_oriented(5, {1, 1, 1, 1, 1}))));
    EXPECT_FALSE(has_linear_resolution(minimize_generators({mono({1, 1, 0}), mono({0, 2, 1})})));
}
