#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;

TEST(NumVerify, ZeroCubicIsIdentity) {
    NumericEquation<long double> ne(parse_equation("family: cubic\nA: 0\nB: 0\n"), Assignment{});
    for (long double c : {0.3L, -0.7L, 0.01L}) EXPECT_NEAR(static_cast<double>(flow(ne, c).value), static_cast<double>(c), 1e-12);
    EXPECT_EQ(displacement(ne, 0.0L), 0.0L);
}

TEST(NumVerify, QuarticClosedForm) {
    NumericEquation<long double> ne(parse_equation("family: quartic\nA: 0\nB: 0\n"), Assignment{});
    const long double c = 0.1L;
    const long double exact = c * std::pow(1 - 3 * c * c * c, -1.0L / 3);
    EXPECT_NEAR(static_cast<double>(flow(ne, c).value), static_cast<double>(exact), 1e-15);
    EXPECT_NEAR(static_cast<double>(displacement(ne, c)), 1.0020047e-4, 1e-10);
}

TEST(NumVerify, EscapeReported) {
    NumericEquation<long double> ne(parse_equation("family: quartic\nA: 0\nB: 0\n"), Assignment{});
    // Blow-up time of z' = z^4 from c = 1 is 1/3.
    EXPECT_TRUE(flow(ne, 1.0L).escaped);
    EXPECT_THROW(displacement(ne, 1.0L), EscapeError);
    FlowOptions bad;
    bad.step = 0;
    EXPECT_THROW(flow(ne, 0.1L, bad), std::invalid_argument);
}

TEST(NumVerify, StepHalvingConvergesAtFourthOrder) {
    auto eq = parse_equation("family: cubic\nA: pl: intercept=1; slopes=-3,5; breaks=1/3\nB: t^2-1/2\n");
    NumericEquation<long double> ne(eq, Assignment{});
    const long double c = 0.4L;
    auto at = [&](long double h) { return flow(ne, c, FlowOptions{h, 1e6L}).value; };
    long double e1 = std::fabs(at(1.0L / 16) - at(1.0L / 1024)), e2 = std::fabs(at(1.0L / 32) - at(1.0L / 1024));
    EXPECT_GT(static_cast<double>(e1 / e2), 12.0);
}

TEST(NumVerify, SymmetricEquationGivesSymmetricOrbit) {
    auto eq = parse_equation("family: cubic\nA: (2*t-1)^3\nB: 3*(2*t-1)\n");
    ASSERT_TRUE(symmetry_check(eq));
    NumericEquation<long double> ne(eq, Assignment{});
    std::vector<long double> times, samples;
    for (int i = 1; i < 8; ++i) {
        times.push_back(0.5L + i / 16.0L);
        times.push_back(0.5L - i / 16.0L);
    }
    auto r = flow(ne, 0.05L, FlowOptions{1.0L / 4096, 1e6L}, times, &samples);
    ASSERT_FALSE(r.escaped);
    for (std::size_t i = 0; i < times.size(); i += 2) EXPECT_LT(std::fabs(static_cast<double>(samples[i] - samples[i + 1])), 1e-8);
}

TEST(NumVerify, LadderFitsQuarticMultiplicity) {
    NumericEquation<long double> ne(parse_equation("family: quartic\nA: 0\nB: 0\n"), Assignment{});
    auto m = estimate_multiplicity(ne);
    EXPECT_EQ(m.verdict, NumericVerdict::finite);
    EXPECT_EQ(m.k, 4);
    EXPECT_NEAR(static_cast<double>(m.coeff), 1.0, 0.02);
    std::ostringstream csv;
    write_csv(csv, m.points);
    EXPECT_EQ(csv.str().rfind("c,q,noise,escaped,signal\n", 0), 0u);
}

TEST(NumVerify, CenterLooksFlat) {
    auto eq = parse_equation("family: cubic\nA: pl: intercept=1/2; slopes=-3,1,1,-3\nB: pl: intercept=0; slopes=1,-1,-1,1\n");
    NumericEquation<long double> ne(eq, Assignment{});
    EXPECT_EQ(estimate_multiplicity(ne).verdict, NumericVerdict::center_like);
    for (long double c : {0.01L, -0.01L, 0.05L, -0.05L})
        EXPECT_LT(std::fabs(static_cast<double>(displacement(ne, c, FlowOptions{1.0L / 4096, 1e6L}))), 1e-9);
}

TEST(NumVerify, SignMatchesSymbolicCoefficient) {
    auto eq = parse_equation("family: cubic\nB: a + 2*b*t + 3*c*t^2\nA: d + 2*e*t + 3*f*t^2\n");
    Assignment pt{{"a", Rational(1)}, {"b", Rational(-1)}, {"c", Rational(0)},
                  {"d", Rational(2)}, {"e", Rational(-1)}, {"f", Rational(-1)}};
    auto m = multiplicity_at(eq, pt, 8);
    ASSERT_EQ(m.status, MultiplicityStatus::finite);
    const double ak = (-m.leading_value / Rational(m.k)).to_double();
    NumericEquation<long double> ne(eq, pt);
    for (long double c : {0.01L, -0.01L}) {
        double q = static_cast<double>(displacement(ne, c));
        EXPECT_GT(q * ak * std::pow(static_cast<double>(c), m.k), 0.0);
    }
}

TEST(NumVerify, MissingSymbolRejected) {
    auto eq = parse_equation("family: cubic\nA: a\nB: 0\n");
    EXPECT_THROW(NumericEquation<long double>(eq, Assignment{}), std::invalid_argument);
}

TEST(Variety, RationalSampleLiesOnVariety) {
    auto syms = make_symbols({"a", "b", "c"});
    std::vector<ParamPoly> gens{parse_poly("a+b+c", syms), parse_poly("2*b-c", syms)};
    auto g = buchberger(std::span<const ParamPoly>(gens), syms, MonomialOrdering(OrderKind::lex));
    std::mt19937_64 rng(1);
    auto pt = sample_rational_point(g, rng);
    ASSERT_TRUE(pt);
    for (const auto& p : gens) EXPECT_TRUE(p.eval(*pt).is_zero());
    EXPECT_THROW(sample_rational_point(buchberger(gens), rng), std::invalid_argument);
}

TEST(Variety, RealSolveOfTriangularSystem) {
    auto syms = make_symbols({"x", "y"});
    std::vector<ParamPoly> gens{parse_poly("y^3-2", syms), parse_poly("x-y^2", syms)};
    auto g = buchberger(std::span<const ParamPoly>(gens), syms, MonomialOrdering(OrderKind::lex));
    auto pt = solve_real_point(g);
    ASSERT_TRUE(pt);
    EXPECT_NEAR(static_cast<double>(pt->at("y")), std::cbrt(2.0), 1e-15);
    EXPECT_NEAR(static_cast<double>(pt->at("x")), std::pow(2.0, 2.0 / 3), 1e-15);
    std::vector<ParamPoly> none{parse_poly("y^2+1", syms), parse_poly("x", syms)};
    EXPECT_FALSE(solve_real_point(buchberger(std::span<const ParamPoly>(none), syms, MonomialOrdering(OrderKind::lex))));
}
