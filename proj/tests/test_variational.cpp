#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;

TEST(Variational, ZeroCoefficients) {
    auto cubic = parse_equation("family: cubic\nA: 0\nB: 0\n");
    auto v = v_sequence(cubic, 6);
    for (int k = 2; k <= 6; ++k) EXPECT_TRUE(v.at_one(k).is_zero());
    EXPECT_EQ(multiplicity_at(cubic, {}, 8).status, MultiplicityStatus::center_up_to_k);

    auto quartic = parse_equation("family: quartic\nA: 0\nB: 0\n");
    auto m = multiplicity_at(quartic, {}, 8);
    EXPECT_EQ(m.k, 4);
    EXPECT_EQ(m.leading_value, Rational(-4));
    EXPECT_EQ(m.stability, Stability::unstable);
    // z' = z^4: z(1) = c (1 - 3c^3)^{-1/3} = c + c^4 + 2 c^7 + ...
    auto a = a_sequence(quartic, 7);
    EXPECT_EQ(a.at_one(4), Rational(1) * ParamPoly::constant(Rational(1), quartic.symbols()));
    EXPECT_EQ(a.at_one(7).constant_value(), Rational(2));
}

TEST(Variational, FirstCoefficientsAreIntegrals) {
    auto eq = parse_equation("family: cubic\nB: a + 2*b*t + 3*c*t^2\nA: d + 2*e*t + 3*f*t^2\n");
    auto v = v_sequence(eq, 3);
    EXPECT_EQ(v.at_one(2), parse_poly("-2*(a+b+c)", eq.symbols()));
    EXPECT_EQ(v.at_one(3), parse_poly("3*(a+b+c)^2-3*(d+e+f)", eq.symbols()));
}

TEST(Variational, EtaIdealForQuadraticCubic) {
    auto eq = parse_equation("family: cubic\nB: a + 2*b*t + 3*c*t^2\nA: d + 2*e*t + 3*f*t^2\n");
    auto seq = eta_sequence(eq, 4);
    auto expect = buchberger(std::vector<ParamPoly>{parse_poly("e*c-f*b", eq.symbols()), parse_poly("a+b+c", eq.symbols()),
                                                   parse_poly("f+e+d", eq.symbols())});
    EXPECT_TRUE(ideal_equal(seq.basis(4), expect));
    EXPECT_EQ(seq.trivial_at, 0);
}

TEST(Variational, EtaIndependentOfCoefficientReduction) {
    auto eq = parse_equation("family: quartic\nB: pl: intercept=b; slopes=a,c\nA: pl: intercept=e; slopes=d,f\n");
    EtaOptions fast, plain;
    plain.reduce_coefficients = false;
    auto s1 = eta_sequence(eq, 6, fast), s2 = eta_sequence(eq, 6, plain);
    for (int k = 2; k <= 6; ++k) EXPECT_EQ(s1.eta(k), s2.eta(k)) << k;
}

TEST(Variational, DualityAtRandomPoints) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-6, 6);
    auto eq = parse_equation("family: quartic\nB: a + 2*b*t\nA: c + d*t\n");
    for (int i = 0; i < 10; ++i) {
        Assignment pt{{"a", Rational(d(rng))}, {"b", Rational(d(rng))}, {"c", Rational(d(rng))}, {"d", Rational(d(rng))}};
        auto m = multiplicity_at(eq, pt, 10);
        ASSERT_EQ(m.status, MultiplicityStatus::finite);
        auto a = a_sequence(eq.substitute(pt, false), m.k);
        for (int j = 2; j < m.k; ++j) EXPECT_TRUE(a.at_one(j).is_zero());
        EXPECT_EQ(a.at_one(m.k).constant_value(), -m.leading_value / Rational(m.k));
    }
}

TEST(Variational, StabilityRule) {
    EXPECT_EQ(stability_from(Rational(3)), Stability::stable);
    EXPECT_EQ(stability_from(Rational(-1)), Stability::unstable);
    EXPECT_EQ(stability_from(Rational(0)), Stability::undetermined);
    EXPECT_THROW(v_sequence(parse_equation("family: cubic\nA: 0\nB: 0\n"), 1), std::invalid_argument);
}
