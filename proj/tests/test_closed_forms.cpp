#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;

TEST(ClosedForms, IdealsMatchPipelineAtRationalBreakpoints) {
    auto s = TwoSegmentSymbolicBreak::standard();
    auto cf = eta345_closed(s);
    for (auto h : {rat_make(1, 2), rat_make(1, 3), rat_make(3, 7)}) {
        Assignment at{{"h", h}};
        auto eq = EquationSpec::quartic(s.a_at(h), s.b_poly().substitute(at));
        auto seq = eta_sequence(eq, 5);
        EXPECT_EQ(seq.eta(3), cf.eta3.substitute(at) * Rational(-3)) << h;
        std::vector<ParamPoly> g4{cf.eta3.substitute(at), cf.eta4.substitute(at)};
        EXPECT_TRUE(ideal_equal(seq.basis(4), buchberger(std::span<const ParamPoly>(g4), s.symbols))) << h;
        g4.push_back(cf.eta5.substitute(at));
        EXPECT_TRUE(ideal_equal(seq.basis(5), buchberger(std::span<const ParamPoly>(g4), s.symbols))) << h;
    }
}

TEST(ClosedForms, ContainsTheBreakpointQuadratic) {
    auto s = TwoSegmentSymbolicBreak::standard();
    auto cf = eta345_closed(s);
    auto ord = MonomialOrdering::with_smallest(OrderKind::lex, *s.symbols, {"h"});
    auto g = buchberger(std::vector<ParamPoly>{cf.eta3, cf.eta4, cf.eta5}, ord);
    auto q = parse_poly("3*h^2-3*h+1", s.symbols);
    bool found = false;
    for (const auto& p : g.generators()) {
        if (p.used_symbols() != SymbolList{"h"}) continue;
        found = found || p * q.coefficient(Monomial::unit(q.nvars(), 4, 2)) == q * p.coefficient(Monomial::unit(p.nvars(), 4, 2));
    }
    EXPECT_TRUE(found) << g.str();
    EXPECT_TRUE(no_real_root_quadratic(q));
}

TEST(ClosedForms, ValidatesInput) {
    auto s = TwoSegmentSymbolicBreak::standard();
    auto bad = s;
    bad.right = TPoly(s.symbols, {parse_poly("c", s.symbols), parse_poly("d", s.symbols)});
    EXPECT_THROW(eta345_closed(bad), std::invalid_argument);
    bad = s;
    bad.alpha = ParamPoly(s.symbols);
    EXPECT_THROW(eta345_closed(bad), std::invalid_argument);
    bad = s;
    bad.h = parse_poly("2*h", s.symbols);
    EXPECT_THROW(eta345_closed(bad), std::invalid_argument);
}
