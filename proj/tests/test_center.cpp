#include "support.hpp"

#include <gtest/gtest.h>

using namespace abelmult;

TEST(Center, PlSymmetryCertificate) {
    auto eq = parse_equation("family: cubic\nA: pl: intercept=1/2; slopes=-3,1,1,-3\nB: pl: intercept=0; slopes=1,-1,-1,1\n");
    EXPECT_TRUE(pl_center_check(eq));
    EXPECT_EQ(find_certificate(eq).kind, CertificateKind::pl_symmetry);
    EXPECT_EQ(multiplicity_at(eq, {}, 10).status, MultiplicityStatus::center_up_to_k);
}

TEST(Center, NestedGridsRefined) {
    // B on halves, A on quarters.
    auto eq = parse_equation("family: cubic\nA: pl: intercept=1/2; slopes=-3,1,1,-3\nB: 2*t-1\n");
    EXPECT_TRUE(pl_center_check(eq));
    auto bad = parse_equation("family: cubic\nA: pl: intercept=0; slopes=1,-2,1\nB: pl: intercept=0; slopes=1,-1\n");
    EXPECT_THROW(pl_center_check(bad), std::invalid_argument);
}

TEST(Center, PlCheckRejectsNonPalindromic) {
    auto eq = parse_equation("family: cubic\nA: pl: intercept=0; slopes=1,-2,2,-1\nB: 2*t-1\n");
    EXPECT_FALSE(pl_center_check(eq));
    EXPECT_THROW(pl_center_check(parse_equation("family: cubic\nA: t^2\nB: 0\n")), std::invalid_argument);
    EXPECT_THROW(pl_center_check(parse_equation("family: quartic\nA: 0\nB: 0\n")), std::invalid_argument);
}

TEST(Center, DataFormNeedsSameGrid) {
    auto s = make_symbols({});
    auto c = [&](int v) { return ParamPoly::constant(Rational(v), s); };
    PlData a{{c(1), c(-1), c(1)}, c(0)}, b{{c(2), c(2)}, c(0)};
    EXPECT_THROW(pl_center_check(a, b), std::invalid_argument);
    PlData b3{{c(2), c(0), c(2)}, c(0)};
    EXPECT_TRUE(pl_center_check(a, b3));
}

TEST(Center, SymmetryCertificate) {
    auto eq = parse_equation("family: cubic\nA: (2*t-1)^3\nB: 2*t-1\n");
    EXPECT_TRUE(symmetry_check(eq));
    EXPECT_EQ(find_certificate(eq).kind, CertificateKind::symmetry);
    EXPECT_EQ(multiplicity_at(eq, {}, 10).status, MultiplicityStatus::center_up_to_k);
}

TEST(Center, ProportionalCertificate) {
    auto eq = parse_equation("family: cubic\nA: 6*t^2-6*t+1\nB: 18*t^2-18*t+3\n");
    auto cert = proportional_check(eq);
    ASSERT_EQ(cert.kind, CertificateKind::proportional);
    EXPECT_EQ(*cert.lambda, Rational(3));
    EXPECT_TRUE(cert.s->value_at(Rational(1)).is_zero());
    EXPECT_EQ(multiplicity_at(eq, {}, 10).status, MultiplicityStatus::center_up_to_k);
    // Proportional but with nonzero mean: no certificate.
    EXPECT_FALSE(proportional_check(parse_equation("family: cubic\nA: 1\nB: 2\n")));
}

TEST(Center, NoCertificateIsNotANegativeClaim) {
    auto eq = parse_equation("family: cubic\nA: t\nB: 1\n");
    EXPECT_EQ(find_certificate(eq).kind, CertificateKind::none);
    EXPECT_EQ(multiplicity_at(eq, {}, 10).status, MultiplicityStatus::finite);
}

/// Soundness: whenever a certificate is issued, every eta vanishes.
TEST(Center, CertificatesImplyVanishingEtas) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int n : {2, 3, 4, 5, 6}) {
        std::vector<std::string> sa, sb;
        for (int k = 0; k < (n + 1) / 2; ++k) {
            sa.push_back(std::to_string(d(rng)));
            sb.push_back(std::to_string(d(rng)));
        }
        auto pal = [&](std::vector<std::string> h) {
            std::vector<std::string> full = h;
            for (int k = n / 2 - 1; k >= 0; --k) full.push_back(h[static_cast<std::size_t>(k)]);
            return full;
        };
        auto slopes_a = pal(sa), slopes_b = pal(sb);
        // Intercept chosen so the value at 1/2 vanishes.
        auto half = [&](const std::vector<std::string>& s) {
            Rational v(0);
            for (int k = 0; k < n; ++k) {
                Rational lo = rat_make(k, n), hi = rat_make(k + 1, n), mid = rat_make(1, 2);
                Rational len = std::min(hi, mid) - lo;
                if (len > Rational(0)) v += Rational::parse(s[static_cast<std::size_t>(k)]) * len;
            }
            return -v;
        };
        auto join = [](const std::vector<std::string>& v) { return cases::join(v, ","); };
        auto eq = parse_equation("family: cubic\nA: pl: intercept=" + half(slopes_a).str() + "; slopes=" + join(slopes_a) +
                                 "\nB: pl: intercept=" + half(slopes_b).str() + "; slopes=" + join(slopes_b) + "\n");
        ASSERT_TRUE(find_certificate(eq)) << n;
        auto v = v_sequence(eq, 8);
        for (int k = 2; k <= 8; ++k) EXPECT_TRUE(v.at_one(k).is_zero()) << "n=" << n << " k=" << k;
    }
}
