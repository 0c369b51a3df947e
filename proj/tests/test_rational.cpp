#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(rat_make(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), rat_make(5, 2));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_TRUE(Rational::parse("0/5").is_zero());
    EXPECT_EQ(rat_make(-3, 2).denominator(), 2);
}

TEST(Rational, Arithmetic) {
    Rational a = rat_make(1, 3), b = rat_make(-5, 7);
    EXPECT_EQ(a + b, rat_make(-8, 21));
    EXPECT_EQ(a - b, rat_make(22, 21));
    EXPECT_EQ(a * b, rat_make(-5, 21));
    EXPECT_EQ(a / b, rat_make(-7, 15));
    EXPECT_EQ(b.inverse(), rat_make(-7, 5));
    EXPECT_EQ(rat_make(2, 3).pow(5), rat_make(32, 243));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_TRUE(b < a);
    EXPECT_EQ(b.abs(), rat_make(5, 7));
    EXPECT_EQ(b.sign(), -1);
}

TEST(Rational, Errors) {
    EXPECT_THROW(rat_make(1, 0), std::domain_error);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
}

TEST(Rational, BigValuesStayExact) {
    Rational big = Rational::parse("41936/15335981015355");
    Rational sq = big * big;
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ(Rational(2).pow(200) / Rational(2).pow(199), Rational(2));
    EXPECT_NEAR(static_cast<double>(big.to_long_double()), 41936.0 / 15335981015355.0, 1e-25);
    Rational huge = Rational(3).pow(400) / Rational(2).pow(600);
    EXPECT_NEAR(static_cast<double>(huge.to_long_double() / std::pow(3.0L, 400) * std::pow(2.0L, 600)), 1.0, 1e-12);
}

TEST(Rational, FieldAxiomsOnSamples) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        auto r = [&] {
            int den = d(rng);
            return rat_make(d(rng), den == 0 ? 1 : den);
        };
        Rational a = r(), b = r(), c = r();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + (-a), Rational(0));
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rational(1));
    }
}
