#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;
using test::P;

namespace {
const Symbols syms = make_symbols({"a", "b"});
ParamPoly C(long n, long d = 1) { return ParamPoly::constant(rat_make(n, d), syms); }
}  // namespace

TEST(Piecewise, AntiderivativeIsContinuousAndStartsAtZero) {
    auto f = pl_from_slopes(P("b", syms), {P("a", syms), P("a+1", syms), C(-2)}, {rat_make(1, 3), rat_make(1, 2)});
    EXPECT_TRUE(f.is_continuous());
    auto F = f.antiderivative();
    EXPECT_TRUE(F.is_continuous());
    EXPECT_TRUE(F.value_at(Rational(0)).is_zero());
    EXPECT_EQ(F.derivative().refine(f.breakpoints()).segments().size(), f.segments().size());
    EXPECT_TRUE((F.derivative() - f).is_zero());
    EXPECT_EQ(F.value_at(Rational(1)), f.integrate01());
}

TEST(Piecewise, IntegralOfKnownFunctions) {
    // int_0^1 (2t - 1) = 0; int_0^1 t^2 = 1/3.
    EXPECT_TRUE(PiecewisePoly::from_poly({C(-1), C(2)}).integrate01().is_zero());
    EXPECT_EQ(PiecewisePoly::from_poly({C(0), C(0), C(1)}).integrate01(), C(1, 3));
    // Tent: slope 1 then -1 on halves, area 1/4.
    auto tent = pl_from_slopes(C(0), {C(1), C(-1)}, {rat_make(1, 2)});
    EXPECT_EQ(tent.integrate01(), C(1, 4));
    EXPECT_EQ(tent.value_at(rat_make(1, 2)), C(1, 2));
}

TEST(Piecewise, ProductOnMergedBreaks) {
    auto f = pl_from_slopes(C(0), {C(1), C(-1)}, {rat_make(1, 2)});
    auto g = pl_from_slopes(C(1), {C(0), C(0), C(3)}, {rat_make(1, 3), rat_make(2, 3)});
    auto h = f * g;
    EXPECT_EQ(h.breakpoints().size(), 5u);
    for (auto t : {rat_make(1, 5), rat_make(2, 5), rat_make(3, 5), rat_make(9, 10)})
        EXPECT_EQ(h.value_at(t), f.value_at(t) * g.value_at(t));
}

TEST(Piecewise, ReflectAndRefine) {
    auto f = PiecewisePoly::from_poly({C(0), C(1)});  // t
    auto r = f.reflect();                              // 1 - t
    EXPECT_EQ(r.value_at(rat_make(1, 4)), C(3, 4));
    std::vector<Rational> fine{Rational(0), rat_make(1, 4), rat_make(1, 2), Rational(1)};
    auto fr = f.refine(fine);
    EXPECT_EQ(fr.segments().size(), 3u);
    EXPECT_TRUE((fr - f).is_zero());
}

TEST(Piecewise, DiscontinuityDetected) {
    PiecewisePoly f(syms, {Rational(0), rat_make(1, 2), Rational(1)}, {TPoly(syms, {C(0)}), TPoly(syms, {C(1)})});
    EXPECT_FALSE(f.is_continuous());
    EXPECT_EQ(f.integrate01(), C(1, 2));
}

TEST(Piecewise, InvalidInputs) {
    EXPECT_THROW(PiecewisePoly(syms, {Rational(0), rat_make(1, 2)}, {TPoly(syms)}), std::invalid_argument);
    EXPECT_THROW(pl_from_slopes(C(0), {C(1)}, {rat_make(1, 2)}), std::invalid_argument);
    EXPECT_THROW(pl_from_slopes(C(0), {C(1), C(2)}, {Rational(1)}), std::invalid_argument);
    EXPECT_THROW(PiecewisePoly::from_poly({C(1)}).value_at(Rational(2)), std::domain_error);
    EXPECT_EQ(uniform_breaks(4), (std::vector<Rational>{rat_make(1, 4), rat_make(1, 2), rat_make(3, 4)}));
}
