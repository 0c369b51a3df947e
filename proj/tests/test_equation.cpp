#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;

TEST(Equation, RescaleKeepsMultiplicity) {
    auto eq = parse_equation("family: quartic\nB: pl: intercept=b; slopes=a,c\nA: pl: intercept=e; slopes=d,f\n");
    Assignment pt{{"a", Rational(1)}, {"b", rat_make(-1, 2)}, {"c", Rational(2)},
                  {"d", Rational(3)}, {"e", Rational(-1)},    {"f", rat_make(1, 3)}};
    auto base = multiplicity_at(eq, pt, 10);
    for (auto u : {Rational(2), rat_make(-3, 5)}) {
        auto sc = rescale(eq, u);
        EXPECT_EQ(sc.family(), Family::scaled_quartic);
        auto m = multiplicity_at(sc, pt, 10);
        EXPECT_EQ(m.k, base.k);
        // V_k(1) scales by u^{k-1} under z -> z/u.
        EXPECT_EQ(m.leading_value, base.leading_value / u.pow(static_cast<unsigned>(base.k - 1)));
    }
    EXPECT_EQ(rescale(eq, Rational(1)).family(), Family::quartic);
}

TEST(Equation, SymbolicRescaleNeedsDivisibility) {
    auto eq = parse_equation("family: cubic\nB: u*t\nA: u^2*(t-1)\n");
    auto u = parse_poly("u", eq.symbols());
    auto sc = rescale(eq, u);
    EXPECT_EQ(sc.B().value_at(Rational(1)), ParamPoly::constant(Rational(1), eq.symbols()));
    auto bad = parse_equation("family: cubic\nB: u*t\nA: t\n");
    EXPECT_THROW(rescale(bad, parse_poly("u", bad.symbols())), std::domain_error);
    EXPECT_THROW(rescale(eq, Rational(0)), std::domain_error);
}

TEST(Equation, SubstituteFixesSymbols) {
    auto eq = parse_equation("family: scaled-quartic\nlead: k\nB: 2*t-1\nA: b\n");
    auto s = eq.substitute({{"k", Rational(2)}});
    EXPECT_EQ(s.lead(), ParamPoly::constant(Rational(2), eq.symbols()));
    EXPECT_EQ(to_string(eq.family()), "scaled-quartic");
    EXPECT_THROW(parse_family("quintic"), std::invalid_argument);
}
