#ifndef ABELMULT_CLOSED_FORMS_HPP
#define ABELMULT_CLOSED_FORMS_HPP

#include "abelmult/piecewise.hpp"

#include <stdexcept>
#include <string>

namespace abelmult {

/// Quartic equation z' = lead z^4 + A z^3 + B z^2 with B = alpha (2t - 1) and
/// A made of two affine pieces meeting at a symbolic breakpoint h:
/// A = left(t) on [0,h], right(t) on [h,1].
struct TwoSegmentSymbolicBreak {
    Symbols symbols;
    ParamPoly alpha;
    TPoly left;
    TPoly right;
    ParamPoly h;
    ParamPoly lead;

    /// B = a(2t-1); A = b t + c on [0,h], d t + b h + c - d h on [h,1]; lead 1.
    static TwoSegmentSymbolicBreak standard() {
        auto syms = make_symbols({"a", "b", "c", "d", "h"});
        auto v = [&](const char* n) { return ParamPoly::variable(n, syms); };
        TwoSegmentSymbolicBreak s;
        s.symbols = syms;
        s.alpha = v("a");
        s.h = v("h");
        s.left = TPoly(syms, {v("c"), v("b")});
        s.right = TPoly(syms, {v("b") * v("h") + v("c") - v("d") * v("h"), v("d")});
        s.lead = ParamPoly::constant(Rational(1), syms);
        return s;
    }

    /// Concrete piecewise equation data once h is a rational number in (0,1).
    PiecewisePoly a_at(const Rational& hv) const {
        Assignment at{{h_name(), hv}};
        std::vector<Rational> breaks{Rational(0), hv, Rational(1)};
        return PiecewisePoly(symbols, breaks, {left.substitute(at), right.substitute(at)});
    }

    PiecewisePoly b_poly() const {
        return PiecewisePoly::from_poly({-alpha, alpha * Rational(2)});
    }

    std::string h_name() const {
        auto used = h.used_symbols();
        if (h.total_degree() != 1 || used.size() != 1 || h.terms().size() != 1 || !h.terms().begin()->second.is_one())
            throw std::invalid_argument("two-segment: breakpoint must be a single symbol");
        return used.front();
    }
};

struct Eta345 {
    ParamPoly eta3, eta4, eta5;
};

/// With Bbar = int_0^t B = alpha (t^2 - t):
///   eta3 = int A,  eta4 = int (A Bbar + lead),  eta5 = int (A Bbar^2 + 2 lead Bbar).
/// Integrals over [0,h] and [h,1] are taken symbolically in h.
inline Eta345 eta345_closed(const TwoSegmentSymbolicBreak& eq) {
    const auto& syms = eq.symbols;
    for (const auto* p : {&eq.alpha, &eq.h, &eq.lead})
        if (!same_symbols(p->symbols(), syms)) throw std::invalid_argument("eta345_closed: symbol list mismatch");
    if (!same_symbols(eq.left.symbols(), syms) || !same_symbols(eq.right.symbols(), syms))
        throw std::invalid_argument("eta345_closed: symbol list mismatch");
    if (eq.left.degree() > 1 || eq.right.degree() > 1)
        throw std::invalid_argument("eta345_closed: A pieces must be affine in t");
    eq.h_name();
    if (eq.alpha.is_zero()) throw std::invalid_argument("eta345_closed: B must be alpha(2t-1) with alpha nonzero");
    if (eq.left.eval(eq.h) != eq.right.eval(eq.h))
        throw std::invalid_argument("eta345_closed: A is discontinuous at h");

    const TPoly bbar(syms, {ParamPoly(syms), -eq.alpha, eq.alpha});
    const TPoly lead = TPoly::constant(eq.lead);
    auto integrate = [&](const TPoly& l, const TPoly& r) {
        TPoly L = l.antiderivative(), R = r.antiderivative();
        return (L.eval(eq.h) - L.eval(Rational(0))) + (R.eval(Rational(1)) - R.eval(eq.h));
    };
    Eta345 out;
    out.eta3 = integrate(eq.left, eq.right);
    out.eta4 = integrate(eq.left * bbar + lead, eq.right * bbar + lead);
    const TPoly b2 = bbar * bbar, lb = lead * bbar * Rational(2);
    out.eta5 = integrate(eq.left * b2 + lb, eq.right * b2 + lb);
    return out;
}

}  // namespace abelmult

#endif
