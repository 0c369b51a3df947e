#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;
using test::P;

TEST(Groebner, KnownBasis) {
    auto syms = make_symbols({"x", "y"});
    auto g = buchberger({P("x^2+y^2-1", syms), P("x-y", syms)}, MonomialOrdering(OrderKind::lex));
    auto expect = buchberger({P("x-y", syms), P("2*y^2-1", syms)}, MonomialOrdering(OrderKind::lex));
    EXPECT_TRUE(ideal_equal(g, expect));
    EXPECT_EQ(g.size(), 2u);
    EXPECT_TRUE(g.contains(P("x^2-y^2", syms)));
    EXPECT_FALSE(g.contains(P("x", syms)));
}

TEST(Groebner, TrivialAndZeroIdeals) {
    auto syms = make_symbols({"a", "b"});
    auto g = buchberger({P("a*b-1", syms), P("a", syms)});
    EXPECT_TRUE(g.is_trivial());
    EXPECT_TRUE(g.reduce(P("a^3+b", syms)).is_zero());
    std::vector<ParamPoly> none;
    auto z = buchberger(std::span<const ParamPoly>(none), syms);
    EXPECT_TRUE(z.is_zero_ideal());
    EXPECT_EQ(z.reduce(P("a+b", syms)), P("a+b", syms));
    EXPECT_THROW(buchberger(std::vector<ParamPoly>{}), std::invalid_argument);
}

TEST(Groebner, AdjoinMatchesRecompute) {
    auto syms = make_symbols({"a", "b", "c"});
    auto g = buchberger({P("a+b+c", syms), P("a*b-c^2", syms)});
    auto extra = P("b^3-a", syms);
    auto h = g.adjoin(extra);
    auto direct = buchberger({P("a+b+c", syms), P("a*b-c^2", syms), extra});
    EXPECT_TRUE(ideal_equal(h, direct));
}

TEST(Groebner, NoRealRootQuadratic) {
    auto syms = make_symbols({"h"});
    EXPECT_TRUE(no_real_root_quadratic(P("3*h^2-3*h+1", syms)));
    EXPECT_FALSE(no_real_root_quadratic(P("h^2-h", syms)));
    EXPECT_FALSE(no_real_root_quadratic(P("4*h^2-4*h+1", syms)));
    EXPECT_THROW(no_real_root_quadratic(P("h^3", syms)), std::invalid_argument);
}

/// Reduced-basis properties on random small ideals.
class GroebnerRandom : public ::testing::TestWithParam<OrderKind> {};

TEST_P(GroebnerRandom, SPolynomialsReduceToZeroAndReduceIsIdempotent) {
    std::mt19937_64 rng(2024 + static_cast<int>(GetParam()));
    auto syms = make_symbols({"a", "b", "c"});
    MonomialOrdering ord(GetParam());
    for (int i = 0; i < 25; ++i) {
        std::vector<ParamPoly> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(test::random_poly(rng, syms, 3, 3));
        auto g = buchberger(std::span<const ParamPoly>(gens), syms, ord);
        const auto& G = g.generators();
        for (std::size_t x = 0; x < G.size(); ++x)
            for (std::size_t y = x + 1; y < G.size(); ++y)
                EXPECT_TRUE(g.reduce(s_polynomial(G[x], G[y], ord)).is_zero());
        for (const auto& p : gens) EXPECT_TRUE(g.contains(p));
        auto q = test::random_poly(rng, syms, 4, 5);
        auto r = g.reduce(q);
        EXPECT_EQ(g.reduce(r), r);
        EXPECT_TRUE(g.contains(q - r));
    }
}

TEST_P(GroebnerRandom, TrivialityIsOrderingInvariant) {
    std::mt19937_64 rng(99);
    auto syms = make_symbols({"a", "b", "c"});
    for (int i = 0; i < 15; ++i) {
        std::vector<ParamPoly> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(test::random_poly(rng, syms, 2, 3));
        auto g1 = buchberger(std::span<const ParamPoly>(gens), syms, MonomialOrdering(GetParam()));
        auto g2 = buchberger(std::span<const ParamPoly>(gens), syms, MonomialOrdering(OrderKind::lex));
        EXPECT_EQ(g1.is_trivial(), g2.is_trivial());
        for (const auto& p : g2.generators()) EXPECT_TRUE(g1.contains(p));
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, GroebnerRandom, ::testing::Values(OrderKind::lex, OrderKind::grlex, OrderKind::grevlex));

TEST(Groebner, BudgetStopsWork) {
    auto syms = make_symbols({"a", "b", "c", "d"});
    Budget spent(std::chrono::duration<double>(-1.0));
    std::vector<ParamPoly> gens{P("a^3*b-c*d^2+1", syms), P("b^3-a*c*d", syms), P("c^3*a-d+b^2", syms)};
    EXPECT_THROW(buchberger(std::span<const ParamPoly>(gens), syms, MonomialOrdering(), &spent), BudgetExceeded);
}
