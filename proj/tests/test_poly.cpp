#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;
using test::P;

TEST(Monomial, DivisionAndLcm) {
    Monomial a({2, 0, 1}), b({1, 3, 0});
    EXPECT_TRUE(divides(Monomial({1, 0, 1}), a));
    EXPECT_FALSE(divides(b, a));
    EXPECT_EQ(lcm(a, b), Monomial({2, 3, 1}));
    EXPECT_EQ(quotient(a, Monomial({1, 0, 0})), Monomial({1, 0, 1}));
    EXPECT_FALSE(coprime(a, b));
    EXPECT_TRUE(coprime(Monomial({1, 0, 0}), Monomial({0, 2, 0})));
    EXPECT_EQ(a.degree(), 3u);
}

TEST(Ordering, ThreeKindsDiffer) {
    // x*z^2 against y^3 and x^2 against y*z^3 over (x, y, z), x largest.
    Monomial xz2({1, 0, 2}), y3({0, 3, 0});
    EXPECT_TRUE(MonomialOrdering(OrderKind::lex).greater(xz2, y3));
    EXPECT_TRUE(MonomialOrdering(OrderKind::grlex).greater(xz2, y3));
    EXPECT_TRUE(MonomialOrdering(OrderKind::grevlex).greater(y3, xz2));
    Monomial x2({2, 0, 0}), yz3({0, 1, 3});
    EXPECT_TRUE(MonomialOrdering(OrderKind::lex).greater(x2, yz3));
    EXPECT_TRUE(MonomialOrdering(OrderKind::grevlex).greater(yz3, x2));
}

TEST(Ordering, WithSmallestRanksLast) {
    auto syms = make_symbols({"a", "b", "h"});
    auto ord = MonomialOrdering::with_smallest(OrderKind::lex, *syms, {"a"});
    // a is now the smallest variable: b beats a^5.
    EXPECT_TRUE(ord.greater(Monomial({0, 1, 0}), Monomial({5, 0, 0})));
    EXPECT_THROW(MonomialOrdering::with_smallest(OrderKind::lex, *syms, {"q"}), std::invalid_argument);
    EXPECT_THROW(parse_order_kind("revlex"), std::invalid_argument);
}

TEST(ParamPoly, RingAxiomsRandom) {
    std::mt19937_64 rng(11);
    auto syms = make_symbols({"a", "b", "c"});
    for (int i = 0; i < 60; ++i) {
        auto x = test::random_poly(rng, syms, 3, 4), y = test::random_poly(rng, syms, 3, 4),
             z = test::random_poly(rng, syms, 3, 4);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_TRUE((x - x).is_zero());
        EXPECT_EQ(x * ParamPoly::constant(Rational(1), syms), x);
    }
}

TEST(ParamPoly, SubstituteAndEval) {
    auto syms = make_symbols({"a", "b"});
    auto p = P("a^2*b - 3*b + 1/2", syms);
    EXPECT_EQ(p.eval({{"a", Rational(2)}, {"b", rat_make(1, 3)}}), rat_make(1, 3) * 4 - Rational(1) + rat_make(1, 2));
    auto q = p.substitute({{"a", Rational(1)}});
    EXPECT_EQ(q, P("-2*b + 1/2", syms));
    EXPECT_THROW(p.substitute({{"a", Rational(1)}}, false), std::exception);
    EXPECT_EQ(p.degree_in(0), 2u);
    EXPECT_EQ(p.total_degree(), 3u);
    EXPECT_EQ(P("(a+b)^3", syms), P("a^3+3*a^2*b+3*a*b^2+b^3", syms));
}

TEST(ParamPoly, PrintParseRoundTrip) {
    std::mt19937_64 rng(3);
    auto syms = make_symbols({"a", "b", "c", "d"});
    for (int i = 0; i < 100; ++i) {
        auto p = test::random_poly(rng, syms, 4, 6) * rat_make(3, 7);
        EXPECT_EQ(parse_poly(p.str(), syms), p) << p.str();
    }
}

TEST(ParamPoly, SymbolMismatchRejected) {
    auto p = P("a", make_symbols({"a"}));
    auto q = P("b", make_symbols({"b"}));
    EXPECT_THROW(p + q, std::invalid_argument);
}
