#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;

TEST(EquationText, FamiliesAndCoefficientForms) {
    auto eq = parse_equation("# comment\nfamily: scaled-quartic\nlead: k\nB: poly: a*t - 1\nA: pl: intercept=b; slopes=c,d; breaks=1/3\n");
    EXPECT_EQ(eq.family(), Family::scaled_quartic);
    EXPECT_EQ(*eq.symbols(), (SymbolList{"a", "b", "c", "d", "k"}));
    EXPECT_EQ(eq.A().breakpoints(), (std::vector<Rational>{Rational(0), rat_make(1, 3), Rational(1)}));
    EXPECT_TRUE(eq.A().is_continuous());
    EXPECT_EQ(eq.B().value_at(Rational(1)), parse_poly("a-1", eq.symbols()));
}

TEST(EquationText, UniformGridByDefault) {
    auto eq = parse_equation("family: cubic\nA: pl: intercept=0; slopes=1,2,3,4\nB: 0\n");
    EXPECT_EQ(eq.A().breakpoints().size(), 5u);
    EXPECT_EQ(eq.A().breakpoints()[1], rat_make(1, 4));
}

TEST(EquationText, ExtraSymbols) {
    auto eq = parse_equation("family: cubic\nA: a\nB: 0\nsymbols: y\n");
    EXPECT_EQ(*eq.symbols(), (SymbolList{"a", "y"}));
}

TEST(EquationText, ErrorsHaveLineAndColumn) {
    auto expect_at = [](const std::string& text, int line) {
        try {
            parse_equation(text);
            ADD_FAILURE() << "no error for: " << text;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line(), line) << e.what();
            EXPECT_GE(e.column(), 1);
        }
    };
    expect_at("family: cubic\nA: 1 + * t\nB: 0\n", 2);
    expect_at("family: cubic\nA: 0\nA: 1\nB: 0\n", 3);
    expect_at("family: cubic\nA: 0\nB: 0\nC: 1\n", 4);
    expect_at("family: quintic\nA: 0\nB: 0\n", 1);
    expect_at("family: cubic\nA: 0\n", 3);
    expect_at("family: scaled-quartic\nA: 0\nB: 0\n", 4);
    expect_at("family: cubic\nA: pl: intercept=0; slopes=1,2; breaks=1/2,2/3\nB: 0\n", 2);
}

TEST(EquationText, Assignments) {
    auto a = parse_assignment("{a: 1, b: -2/3}");
    EXPECT_EQ(a.at("b"), rat_make(-2, 3));
    EXPECT_EQ(parse_assignment("a=1,b=2").size(), 2u);
    EXPECT_TRUE(parse_assignment("{}").empty());
    EXPECT_THROW(parse_assignment("{a 1}"), ParseError);
    EXPECT_THROW(parse_assignment("a=x"), ParseError);
}
