#ifndef ABELMULT_REGISTRY_HPP
#define ABELMULT_REGISTRY_HPP

#include "abelmult/center.hpp"
#include "abelmult/closed_forms.hpp"
#include "abelmult/equation_text.hpp"
#include "abelmult/variational.hpp"
#include "abelmult/variety.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace abelmult {

enum class ExpectKind { ideal_equality, eta_membership, mu_value, no_real_root };
enum class Outcome { pass, fail, skipped_budget, error };

inline std::string to_string(ExpectKind k) {
    switch (k) {
    case ExpectKind::ideal_equality: return "ideal-equality";
    case ExpectKind::eta_membership: return "eta-membership";
    case ExpectKind::mu_value: return "mu-value";
    case ExpectKind::no_real_root: return "no-real-root";
    }
    return "?";
}

inline std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::skipped_budget: return "SKIPPED-BUDGET";
    case Outcome::error: return "ERROR";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CaseReport {
    std::string id;
    std::string source;
    ExpectKind kind = ExpectKind::ideal_equality;
    Outcome outcome = Outcome::pass;
    std::optional<int> mu;
    std::vector<CheckResult> checks;
    double seconds = 0;
    std::string message;  ///< error or budget note
};

struct RunOptions {
    OrderKind ordering = OrderKind::grevlex;
    std::optional<double> budget_seconds;
};

/// Helpers handed to each case body; all Groebner work goes through the
/// selected ordering and the case's budget.
class CaseContext {
public:
    CaseContext(const RunOptions& opt, CaseReport& report)
        : opt_(opt), report_(report),
          budget_(opt.budget_seconds ? Budget(std::chrono::duration<double>(*opt.budget_seconds)) : Budget()) {}

    const Budget* budget() const { return &budget_; }
    MonomialOrdering ordering() const { return MonomialOrdering(opt_.ordering); }

    EquationSpec equation(const std::string& text) const { return parse_equation(text); }

    EtaSequence etas(const EquationSpec& eq, int K, const std::vector<std::string>& seed = {}) const {
        EtaOptions o;
        o.ordering = ordering();
        o.budget = &budget_;
        for (const auto& s : seed) o.seed.push_back(parse_poly(s, eq.symbols()));
        return eta_sequence(eq, K, o);
    }

    /// ";"-separated polynomials over the given symbols.
    static std::vector<ParamPoly> polys(const std::string& text, const Symbols& syms) {
        std::vector<ParamPoly> out;
        std::size_t p = 0;
        while (p <= text.size()) {
            std::size_t q = text.find(';', p);
            if (q == std::string::npos) q = text.size();
            if (q > p) out.push_back(parse_poly(text.substr(p, q - p), syms));
            p = q + 1;
        }
        return out;
    }

    GroebnerBasis ideal(const std::string& text, const Symbols& syms) const {
        auto gens = polys(text, syms);
        return buchberger(std::span<const ParamPoly>(gens), syms, ordering(), &budget_);
    }

    bool check(std::string name, bool ok, std::string detail = {}) {
        report_.checks.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    }

    /// G_L matches the expected basis and G_{L-1} does not.
    bool level(const EtaSequence& seq, int L, const std::string& expected, const Symbols& syms) {
        auto e = ideal(expected, syms);
        bool ok = seq.computed() >= L && ideal_equal(seq.basis(L), e);
        check("G" + std::to_string(L) + " ideal-equal to <" + expected + ">", ok,
              seq.computed() >= L ? "computed " + seq.basis(L).str() : "not reached");
        if (L > 2 && seq.computed() >= L - 1)
            check("G" + std::to_string(L - 1) + " differs", !ideal_equal(seq.basis(L - 1), e));
        return ok;
    }

    bool trivial_at(const EtaSequence& seq, int L, const std::string& label = {}) {
        bool reached = seq.computed() >= L;
        bool ok = reached && seq.basis(L).is_trivial() && !(L > 2 && seq.basis(L - 1).is_trivial());
        std::string detail = seq.trivial_at ? "first trivial at G" + std::to_string(seq.trivial_at) : "never trivial";
        check(label + "G" + std::to_string(L) + " = <1> (first time)", ok, detail);
        return ok;
    }

    /// eta_L - expected lies in the ideal G_{L-1}.
    bool eta_member(const EtaSequence& seq, int L, const std::string& expected) {
        bool reached = seq.computed() >= L;
        bool ok = false;
        std::string detail = "not reached";
        if (reached) {
            auto syms = seq.eta(L).symbols();
            auto e = parse_poly(expected, syms);
            ok = seq.basis(L - 1).contains(seq.eta(L) - e);
            detail = "computed eta" + std::to_string(L) + " = " + seq.eta(L).str();
        }
        check("eta" + std::to_string(L) + " == " + expected + " mod G" + std::to_string(L - 1), ok, detail);
        return ok;
    }

    void mu(int m) { report_.mu = m; }
    CaseReport& report() { return report_; }

private:
    RunOptions opt_;
    CaseReport& report_;
    Budget budget_;
};

struct CaseRecord {
    std::string id;
    std::string source;  ///< the claim being reproduced, in words
    ExpectKind kind = ExpectKind::ideal_equality;
    bool heavy = false;
    std::string equation;  ///< template in the equation-file grammar
    std::string expected;  ///< human-readable expected artifact
    std::function<void(CaseContext&)> body;
};

namespace cases {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

/// Center certificate at a rational point of the lex variety of `expected`.
inline void certificate_on_variety(CaseContext& ctx, const EquationSpec& eq, const std::string& expected) {
    auto gens = CaseContext::polys(expected, eq.symbols());
    auto g = buchberger(std::span<const ParamPoly>(gens), eq.symbols(), MonomialOrdering(OrderKind::lex), ctx.budget());
    std::mt19937_64 rng(12345);
    auto pt = sample_rational_point(g, rng);
    if (!pt) {
        ctx.check("center certificate on the variety", false, "no rational point sampled");
        return;
    }
    auto at = eq.substitute(*pt, false);
    auto cert = find_certificate(at);
    auto m = multiplicity_at(eq, *pt, 12);
    ctx.check("center certificate on the variety", cert && m.status == MultiplicityStatus::center_up_to_k,
              "certificate " + to_string(cert.kind) + ", multiplicity " + to_string(m.status));
}

inline std::string cubic_poly_1n_equation(int n) {
    const std::string s = "(t^2-t)";
    std::vector<std::string> terms{"a", "b*" + s, "(2*t-1)*e"};
    if (n >= 3) terms.push_back("(2*t-1)*f*" + s);
    if (n >= 4) terms.push_back("c*" + s + "^2");
    if (n >= 5) terms.push_back("(2*t-1)*g*" + s + "^2");
    if (n >= 6) terms.push_back("d*" + s + "^3");
    if (n >= 7) terms.push_back("(2*t-1)*h*" + s + "^3");
    return "family: cubic\nB: 2*t-1\nA: " + join(terms, " + ") + "\n";
}

inline std::string pl_slopes(const std::vector<std::string>& letters, int n) {
    return join(std::vector<std::string>(letters.begin(), letters.begin() + n), ",");
}

inline std::vector<CaseRecord> build() {
    std::vector<CaseRecord> r;

    auto center_case = [](std::string id, std::string source, std::string eqtext, std::string expected) {
        CaseRecord c{id, source, ExpectKind::ideal_equality, false, eqtext, "G4 = <" + expected + ">", {}};
        c.body = [eqtext, expected](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, 6);
            ctx.level(seq, 4, expected, eq.symbols());
            ctx.check("eta5 = eta6 = 0 mod G4", seq.eta(5).is_zero() && seq.eta(6).is_zero());
            certificate_on_variety(ctx, eq, expected);
            ctx.mu(4);
        };
        return c;
    };

    r.push_back(center_case("cubic-poly-22", "cubic, B and A quadratic: center ideal reached at G4, so mu = 4",
                            "family: cubic\nB: a + 2*b*t + 3*c*t^2\nA: d + 2*e*t + 3*f*t^2\n",
                            "e*c-f*b;a+b+c;f+e+d"));
    r.push_back(center_case("cubic-pl-22", "cubic, B and A two-segment piecewise linear: center ideal at G4, mu = 4",
                            "family: cubic\nB: pl: intercept=b; slopes=a,c\nA: pl: intercept=e; slopes=d,f\n",
                            "c*e-f*b;8*b+c+3*a;f+3*d+8*e"));

    {
        CaseRecord c{"cubic-poly-23",
                     "cubic, B quadratic, A cubic: G7 as listed; with gc != 0 the basis collapses and G8 = <1>, mu = 8",
                     ExpectKind::ideal_equality, false,
                     "family: cubic\nB: a + 2*b*t + 3*c*t^2\nA: d + 2*e*t + 3*f*t^2 + 4*g*t^3\n",
                     "G7 = <a+b+c, g+f+e+d, 1287gfc+1482g^2c+858gec-2gb^2c, -7ec+7fb+14gb+9gc, 39g^2bc-7gcb^3, "
                     "3gc^2+2gbc, -3gcb^3+13egbc>; saturated by gc: G8 = <1>",
                     {}};
        const std::string eqtext = c.equation;
        c.body = [eqtext](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, 8);
            ctx.level(seq, 7,
                      "a+b+c;g+f+e+d;1287*g*f*c+1482*g^2*c+858*g*e*c-2*g*b^2*c;-7*e*c+7*f*b+14*g*b+9*g*c;"
                      "39*g^2*b*c-7*g*c*b^3;3*g*c^2+2*g*b*c;-3*g*c*b^3+13*e*g*b*c",
                      eq.symbols());
            ctx.eta_member(seq, 8,
                           "-17/10405395*c*g^3+4/1486485*c*e*g^2-1/945945*c*g*e^2+41936/15335981015355*c*g*b^4");
            // gc != 0 through an auxiliary y with y g c = 1.
            auto eqy = ctx.equation(eqtext + "symbols: y\n");
            auto sat = ctx.etas(eqy, 8, {"y*g*c-1"});
            ctx.level(sat, 7, "3*a+b;7*e-9*g;2*g+f;3*c+2*b;7*d+2*g;-39*g+7*b^2;y*g*c-1", eqy.symbols());
            ctx.trivial_at(sat, 8, "gc != 0: ");
            ctx.mu(8);
        };
        r.push_back(c);
    }
    {
        CaseRecord c{"cubic-pl-23",
                     "cubic, B two-segment and A three-segment piecewise linear, jump c-a normalized to 1: "
                     "G8 forces A = 0, mu = 8",
                     ExpectKind::ideal_equality, false,
                     "family: cubic\nB: pl: intercept=b; slopes=a,a+1; breaks=1/2\n"
                     "A: pl: intercept=e; slopes=d,f,g; breaks=1/3,2/3\n",
                     "G8 = <4a+8b+1, d, e, f, g>", {}};
        const std::string eqtext = c.equation;
        c.body = [eqtext](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, 8);
            ctx.level(seq, 8, "4*a+8*b+1;d;e;f;g", eq.symbols());
            ctx.mu(8);
        };
        r.push_back(c);
    }

    struct Ladder {
        int n, level;
        std::string basis;
    };
    for (auto [n, L, basis] : std::vector<Ladder>{{2, 4, "a;b"},
                                                  {3, 4, "a;b"},
                                                  {4, 5, "a;b;c"},
                                                  {5, 5, "a;b;c"},
                                                  {6, 10, "a;b;c;d"},
                                                  {7, 11, "a;b;c;d"}}) {
        CaseRecord c{"cubic-poly-1" + std::to_string(n),
                     "cubic, B = 2t-1, A of degree " + std::to_string(n) + " in the (t^2-t) basis: G" +
                         std::to_string(L) + " = <" + basis + ">, mu = " + std::to_string(L),
                     ExpectKind::ideal_equality, n >= 6, cubic_poly_1n_equation(n),
                     "G" + std::to_string(L) + " = <" + basis + ">", {}};
        const std::string eqtext = c.equation;
        c.body = [eqtext, L, basis](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, L);
            ctx.level(seq, L, basis, eq.symbols());
            certificate_on_variety(ctx, eq, basis);
            ctx.mu(L);
        };
        r.push_back(c);
    }
    const std::vector<std::string> cubic_pl_letters{"a", "c", "d", "e", "f", "g", "h"};
    for (auto [n, L, basis] : std::vector<Ladder>{{2, 4, "a-c;c+2*b"},
                                                  {3, 4, "a-d;c+2*d+6*b"},
                                                  {4, 5, "a-e;4*b+d+e;c-d"},
                                                  {5, 5, "a-f;10*b+d+2*e+2*f;c-e"},
                                                  {6, 10, "a-g;6*b+e+f+g;c-f;d-e"},
                                                  {7, 11, "a-h;14*b+e+2*f+2*g+2*h;c-g;d-f"}}) {
        CaseRecord c{"cubic-pl-1" + std::to_string(n),
                     "cubic, B = 2t-1, A piecewise linear on " + std::to_string(n) + " uniform segments: G" +
                         std::to_string(L) + " = <" + basis + ">, mu = " + std::to_string(L),
                     ExpectKind::ideal_equality, false,
                     "family: cubic\nB: 2*t-1\nA: pl: intercept=b; slopes=" + pl_slopes(cubic_pl_letters, n) + "\n",
                     "G" + std::to_string(L) + " = <" + basis + ">", {}};
        const std::string eqtext = c.equation;
        c.body = [eqtext, L, basis](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, L);
            ctx.level(seq, L, basis, eq.symbols());
            certificate_on_variety(ctx, eq, basis);
            ctx.mu(L);
        };
        r.push_back(c);
    }

    auto quartic22 = [](std::string id, std::string source, std::string eqtext, std::string g7, std::string eta8) {
        CaseRecord c{id, source, ExpectKind::eta_membership, false, eqtext,
                     "G7 = <" + g7 + ">; eta8 == " + eta8 + "; G8 = <1>", {}};
        c.body = [eqtext, g7, eta8](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, 8);
            ctx.level(seq, 7, g7, eq.symbols());
            ctx.eta_member(seq, 8, eta8);
            ctx.trivial_at(seq, 8);
            ctx.mu(8);
        };
        return c;
    };
    r.push_back(quartic22("quartic-poly-22", "quartic, B and A quadratic: G7 as listed, eta8 a multiple of e^2, mu = 8",
                          "family: quartic\nB: a + 2*b*t + 3*c*t^2\nA: d + 2*e*t + 3*f*t^2\n",
                          "108*a-11*e^2;36*b+11*e^2;54*c-11*e^2;d+e;11*e^3-3240;f", "-11552/626535*e^2"));
    r.push_back(quartic22("quartic-pl-22",
                          "quartic, B and A two-segment piecewise linear: G7 as listed, eta8 a multiple of f^2, mu = 8",
                          "family: quartic\nB: pl: intercept=b; slopes=a,c\nA: pl: intercept=e; slopes=d,f\n",
                          "144*a+7*f^2;576*b-7*f^2;144*c-7*f^2;-f+d;f+2*e;-27648+7*f^3", "-2041/498960*f^2"));
    r.push_back(quartic22(
        "quartic-pl-22-at-3/7", "quartic piecewise linear (2,2) with the connection point moved to 3/7: still mu = 8",
        "family: quartic\nB: pl: intercept=b; slopes=a,c; breaks=3/7\nA: pl: intercept=e; slopes=d,f; breaks=3/7\n",
        "81486729*a+5324000*f^2;190135701*b-3327500*f^2;6036054*c-166375*f^2;9027*d-6836*f;21063*e+8810*f;"
        "2013137500*f^3-9344599297047",
        "-652948208/152171939367*f^2"));

    {
        CaseRecord c{"quartic-poly-23",
                     "quartic, B quadratic, A cubic: eta5 factors as (gc+210)(2b+3c)/1764; branch gc+210 = 0 "
                     "claimed trivial at G5, branch 2b+3c = 0 trivial at G10, mu = 10",
                     ExpectKind::eta_membership, false,
                     "family: quartic\nB: a + 2*b*t + 3*c*t^2\nA: d + 2*e*t + 3*f*t^2 + 4*g*t^3\n",
                     "eta5 == (gc+210)(2b+3c)/1764 mod G4; gc+210=0: G5 = <1>; 2b+3c=0: G10 = <1>", {}};
        const std::string eqtext = c.equation;
        c.body = [eqtext](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, 5);
            ctx.eta_member(seq, 5, "1/1764*(g*c+210)*(2*b+3*c)");
            auto b1 = ctx.etas(eq, 12, {"g*c+210"});
            const Assignment witness{{"a", Rational(-1)}, {"b", Rational(0)},    {"c", Rational(1)},
                                     {"d", Rational(0)},  {"e", Rational(-210)}, {"f", Rational(420)},
                                     {"g", Rational(-210)}};
            auto m = multiplicity_at(eq, witness, 12);
            ctx.check("gc+210 = 0: G5 = <1>", b1.computed() >= 5 && b1.basis(5).is_trivial(),
                      (b1.trivial_at ? "first trivial at G" + std::to_string(b1.trivial_at) : std::string("never trivial")) +
                          "; real point a=-1,b=0,c=1,d=0,e=-210,f=420,g=-210 lies on the branch and has multiplicity " +
                          std::to_string(m.k));
            auto b2 = ctx.etas(eq, 10, {"2*b+3*c"});
            ctx.trivial_at(b2, 10, "2b+3c = 0: ");
            ctx.mu(std::max(10, b1.trivial_at));
        };
        r.push_back(c);
    }
    {
        CaseRecord c{"quartic-pl-23",
                     "quartic, B two-segment, A three-segment piecewise linear: with c = a trivial at G5; with c-a "
                     "normalized to 1 (lead k) G9 as listed and G10 forces k = 0, mu = 10",
                     ExpectKind::ideal_equality, false,
                     "family: scaled-quartic\nlead: k\nB: pl: intercept=b; slopes=a,a+1; breaks=1/2\n"
                     "A: pl: intercept=e; slopes=d,f,g; breaks=1/3,2/3\n",
                     "c=a: G4 = <6eb+fb+2db+81, a+2b, 3f+18e+5d+g>, G5 = <1>; c-a=1: G9 as listed, "
                     "G10 = <g, 4a+8b+1, k, d, e, f>",
                     {}};
        const std::string eqtext = c.equation;
        c.body = [eqtext](CaseContext& ctx) {
            auto eq0 = ctx.equation("family: quartic\nB: pl: intercept=b; slopes=a,a; breaks=1/2\n"
                                    "A: pl: intercept=e; slopes=d,f,g; breaks=1/3,2/3\n");
            auto s0 = ctx.etas(eq0, 5);
            ctx.level(s0, 4, "6*e*b+f*b+2*d*b+81;a+2*b;3*f+18*e+5*d+g", eq0.symbols());
            ctx.trivial_at(s0, 5, "c = a: ");
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, 10);
            ctx.level(seq, 9,
                      "66735388183208154600960*f^4+5829122567397869818848*f^3-68783721774316079552*f*e+"
                      "139990051412348601632*f^2+1344723268054007200*e+146583972817817393*f;"
                      "17101027722240*e*f^2-5269542106752*f^3+733610765888*f*e-233959770968*f^2-6125396800*e+"
                      "1693244383*f;8*e*b-e;82432*e^2-17024*f*e-1904*f^2+920*e-269*f;8*f*b-f;2*g+6*e+f;4*a+8*b+1;"
                      "10368*k+32*e-11*f;f+6*e+2*d",
                      eq.symbols());
            ctx.eta_member(seq, 10,
                           "-104057406529615499/780994714281201717844377600*f^3"
                           "-867941774841100820209033/96522790757355293736025622524723200*f*e"
                           "+1666102537252531452515843/140396786556153154525128178217779200*f^2"
                           "+2196152718747243263819885/206810570805324733709188812087754752*e"
                           "-2900881012686053802785600993/951328625704493775062268535603671859200*f");
            ctx.level(seq, 10, "g;4*a+8*b+1;k;d;e;f", eq.symbols());
            ctx.mu(10);
        };
        r.push_back(c);
    }

    struct QLadder {
        int n, level;
        std::string basis;
    };
    for (auto [n, L, basis] : std::vector<QLadder>{{2, 5, "k;b+c;d"},
                                                   {3, 5, "k;b+c-e;d+2*e"},
                                                   {4, 9, "k;b+c-e;d+2*e;f"},
                                                   {5, 10, ""}}) {
        std::vector<std::string> terms{"b", "2*c*t", "3*d*t^2", "4*e*t^3", "5*f*t^4", "6*g*t^5"};
        terms.resize(static_cast<std::size_t>(n + 1));
        std::string eqtext = "family: scaled-quartic\nlead: k\nB: 2*t-1\nA: " + join(terms, " + ") + "\n";
        CaseRecord c{"quartic-poly-1" + std::to_string(n),
                     "quartic, B = 2t-1 after rescaling (lead k), A of degree " + std::to_string(n) + ": G" +
                         std::to_string(L) + " forces k = 0, mu = " + std::to_string(L),
                     basis.empty() ? ExpectKind::mu_value : ExpectKind::ideal_equality, n == 5, eqtext,
                     basis.empty() ? "k in G" + std::to_string(L) + ", k not in G" + std::to_string(L - 1)
                                   : "G" + std::to_string(L) + " = <" + basis + ">",
                     {}};
        c.body = [eqtext, L, basis](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, L);
            if (!basis.empty()) ctx.level(seq, L, basis, eq.symbols());
            auto k = ParamPoly::variable("k", eq.symbols());
            bool reached = seq.computed() >= L;
            ctx.check("k in G" + std::to_string(L) + " but not in G" + std::to_string(L - 1),
                      reached && seq.basis(L).contains(k) && !seq.basis(L - 1).contains(k),
                      reached ? "G" + std::to_string(L) + " = " + seq.basis(L).str() : "not reached");
            ctx.mu(L);
        };
        r.push_back(c);
    }
    {
        const std::vector<std::string> letters{"b", "d", "e", "f"};
        struct Q {
            int n, level;
            std::string basis, eta;
        };
        for (auto [n, L, basis, eta] : std::vector<Q>{
                 {2, 4, "144+a*d+2*a*c;8*c+d+3*b", "a/6"},
                 {3, 4, "a*d+6*a*c+2*a*b-81;18*c+3*d+5*b+e", "2*a/9"},
                 {4, 8,
                  "24301478794941*a*d^2-5170471968081920*c-6997968367619776*d;"
                  "348941857826215204551*d^3-500251867306017904135800*a*d+62937496133967787727964160;"
                  "86251*a^2-122304*c-7280*d;690*a*c-519*a*d+125456;"
                  "61144830207333600*c^2-6622547301720987*d^2+3643254234403888940*a;"
                  "-302960854428691360*a-280441397922231*d^2+3057241510366680*d*c;7841*e-19320*c+6691*d;"
                  "23523*b+115712*c+7261*d;116632*c+23523*f+6569*d",
                  "2426539331050271747/36743835937950792000*d-322603494879515897/3674383593795079200*c"}}) {
            std::string eqtext =
                "family: quartic\nB: a*(2*t-1)\nA: pl: intercept=c; slopes=" + pl_slopes(letters, n) + "\n";
            CaseRecord c{"quartic-pl-1" + std::to_string(n),
                         "quartic, B = a(2t-1), A piecewise linear on " + std::to_string(n) +
                             " uniform segments: G" + std::to_string(L) + " as listed, eta" + std::to_string(L + 1) +
                             " closes the ideal, mu = " + std::to_string(L + 1),
                         ExpectKind::eta_membership, false, eqtext,
                         "G" + std::to_string(L) + " = <" + basis + ">; eta" + std::to_string(L + 1) + " == " + eta +
                             "; G" + std::to_string(L + 1) + " = <1>",
                         {}};
            c.body = [eqtext, L, basis, eta](CaseContext& ctx) {
                auto eq = ctx.equation(eqtext);
                auto seq = ctx.etas(eq, L + 1);
                ctx.level(seq, L, basis, eq.symbols());
                ctx.eta_member(seq, L + 1, eta);
                ctx.trivial_at(seq, L + 1);
                ctx.mu(L + 1);
            };
            r.push_back(c);
        }
        std::string eqtext = "family: scaled-quartic\nlead: k\nB: 2*t-1\nA: pl: intercept=c; slopes=b,d,e,f,g\n";
        CaseRecord c{"quartic-pl-15",
                     "quartic, B = 2t-1 after rescaling (lead k), A piecewise linear on 5 uniform segments: G10 "
                     "forces k = 0, mu = 10",
                     ExpectKind::ideal_equality, false, eqtext, "G10 = <k, e+10c+2d+2g, b-g, -d+f>", {}};
        c.body = [eqtext](CaseContext& ctx) {
            auto eq = ctx.equation(eqtext);
            auto seq = ctx.etas(eq, 10);
            ctx.level(seq, 10, "k;e+10*c+2*d+2*g;b-g;-d+f", eq.symbols());
            ctx.mu(10);
        };
        r.push_back(c);
    }
    {
        CaseRecord c{"quartic-pl-h",
                     "quartic, B = a(2t-1), A two affine pieces joined at a free point h: eta3..eta5 in closed "
                     "form; G5 contains 3h^2-3h+1, which has no real root, so mu = 5",
                     ExpectKind::no_real_root, false,
                     "B = a(2t-1); A = b t + c on [0,h], d t + b h + c - d h on [h,1]; lead 1",
                     "G5 = <ab-ad-108, 36c^2+6cd+30bc+bd+7b^2+d^2, 2ac+108h+ad+36, 3bh-3dh+b+6c+2d, "
                     "-5d-24c+9dh+18ch-7b, 3h^2+1-3h>",
                     {}};
        c.body = [](CaseContext& ctx) {
            auto eq = TwoSegmentSymbolicBreak::standard();
            auto etas = eta345_closed(eq);
            std::vector<ParamPoly> gens{etas.eta3, etas.eta4, etas.eta5};
            auto g5 = buchberger(std::span<const ParamPoly>(gens), eq.symbols, ctx.ordering(), ctx.budget());
            auto expected = ctx.ideal("a*b-a*d-108;36*c^2+6*c*d+30*b*c+b*d+7*b^2+d^2;2*a*c+108*h+a*d+36;"
                                      "3*b*h-3*d*h+b+6*c+2*d;-5*d-24*c+9*d*h+18*c*h-7*b;3*h^2+1-3*h",
                                      eq.symbols);
            ctx.check("G5 ideal-equal to the listed basis", ideal_equal(g5, expected), "computed " + g5.str());
            auto lex = buchberger(std::span<const ParamPoly>(gens), eq.symbols,
                                  MonomialOrdering::with_smallest(OrderKind::lex, *eq.symbols, {"h"}), ctx.budget());
            std::optional<ParamPoly> uni;
            for (const auto& p : lex.generators())
                if (p.used_symbols() == SymbolList{"h"}) uni = p;
            auto target = parse_poly("3*h^2+1-3*h", eq.symbols);
            const auto h2 = Monomial::unit(target.nvars(), symbol_index(*eq.symbols, "h"), 2);
            bool unit_multiple = uni && uni->total_degree() == 2 &&
                                 (*uni * target.coefficient(h2) - target * uni->coefficient(h2)).is_zero();
            ctx.check("G5 contains 3h^2+1-3h up to a unit", unit_multiple,
                      uni ? "univariate element " + uni->str() : "no univariate element in h");
            bool no_root = uni && no_real_root_quadratic(*uni);
            ctx.check("3h^2+1-3h has no real root", no_root);
            ctx.mu(5);
        };
        r.push_back(c);
    }
    return r;
}

}  // namespace cases

inline const std::vector<CaseRecord>& registry() {
    static const std::vector<CaseRecord> r = cases::build();
    return r;
}

inline const CaseRecord& find_case(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown case id '" + id + "'");
}

inline CaseReport run_case(const CaseRecord& rec, const RunOptions& opt = {}) {
    CaseReport rep;
    rep.id = rec.id;
    rep.source = rec.source;
    rep.kind = rec.kind;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        CaseContext ctx(opt, rep);
        rec.body(ctx);
        rep.outcome = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.passed; })
                          ? Outcome::pass
                          : Outcome::fail;
    } catch (const BudgetExceeded&) {
        rep.outcome = Outcome::skipped_budget;
        rep.message = "time budget of " + std::to_string(opt.budget_seconds.value_or(0)) + " s exceeded";
    } catch (const std::exception& e) {
        rep.outcome = Outcome::error;
        rep.message = e.what();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Runs the cases on a pool of `workers` threads; reports keep input order.
inline std::vector<CaseReport> run_cases(const std::vector<const CaseRecord*>& recs, const RunOptions& opt,
                                         unsigned workers, const std::function<void(const CaseReport&)>& done = {}) {
    std::vector<CaseReport> out(recs.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    auto work = [&] {
        for (std::size_t i; (i = next++) < recs.size();) {
            out[i] = run_case(*recs[i], opt);
            if (done) {
                std::lock_guard lock(mu);
                done(out[i]);
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(recs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace abelmult

#endif
