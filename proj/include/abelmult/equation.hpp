#ifndef ABELMULT_EQUATION_HPP
#define ABELMULT_EQUATION_HPP

#include "abelmult/piecewise.hpp"

#include <stdexcept>
#include <string>

namespace abelmult {

/// cubic:          z' = A z^3 + B z^2
/// quartic:        z' = z^4 + A z^3 + B z^2
/// scaled-quartic: z' = lead z^4 + A z^3 + B z^2
enum class Family { cubic, quartic, scaled_quartic };

inline std::string to_string(Family f) {
    switch (f) {
    case Family::cubic: return "cubic";
    case Family::quartic: return "quartic";
    case Family::scaled_quartic: return "scaled-quartic";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "cubic") return Family::cubic;
    if (s == "quartic") return Family::quartic;
    if (s == "scaled-quartic" || s == "scaled_quartic") return Family::scaled_quartic;
    throw std::invalid_argument("unknown equation family '" + s + "'");
}

class EquationSpec {
public:
    EquationSpec(Family family, PiecewisePoly a, PiecewisePoly b, ParamPoly lead)
        : family_(family), a_(std::move(a)), b_(std::move(b)), lead_(std::move(lead)) {
        if (!same_symbols(a_.symbols(), b_.symbols()) || !same_symbols(a_.symbols(), lead_.symbols()))
            throw std::invalid_argument("equation: A, B and lead must share one symbol list");
        if (family_ == Family::cubic && !lead_.is_zero())
            throw std::invalid_argument("equation: cubic family has no z^4 term");
        if (family_ == Family::quartic && !(lead_.is_constant() && lead_.constant_value().is_one()))
            throw std::invalid_argument("equation: quartic family has unit z^4 coefficient");
    }

    static EquationSpec cubic(PiecewisePoly a, PiecewisePoly b) {
        auto syms = a.symbols();
        return EquationSpec(Family::cubic, std::move(a), std::move(b), ParamPoly(syms));
    }
    static EquationSpec quartic(PiecewisePoly a, PiecewisePoly b) {
        auto syms = a.symbols();
        return EquationSpec(Family::quartic, std::move(a), std::move(b), ParamPoly::constant(Rational(1), syms));
    }
    static EquationSpec scaled_quartic(PiecewisePoly a, PiecewisePoly b, ParamPoly lead) {
        return EquationSpec(Family::scaled_quartic, std::move(a), std::move(b), std::move(lead));
    }

    Family family() const { return family_; }
    const PiecewisePoly& A() const { return a_; }
    const PiecewisePoly& B() const { return b_; }
    const ParamPoly& lead() const { return lead_; }
    const Symbols& symbols() const { return a_.symbols(); }
    bool has_quartic_term() const { return family_ != Family::cubic; }

    EquationSpec substitute(const Assignment& values, bool partial = true) const {
        return EquationSpec(family_, a_.substitute(values, partial), b_.substitute(values, partial),
                            lead_.substitute(values, partial));
    }

    EquationSpec embed(const Symbols& target) const {
        return EquationSpec(family_, a_.embed(target), b_.embed(target), lead_.embed(target));
    }

private:
    Family family_;
    PiecewisePoly a_;
    PiecewisePoly b_;
    ParamPoly lead_;
};

/// Exact quotient p / u; throws std::domain_error when u does not divide p.
inline ParamPoly exact_quotient(const ParamPoly& p, const ParamPoly& u) {
    if (u.is_zero()) throw std::domain_error("exact_quotient: division by zero");
    if (u.is_constant()) return p * u.constant_value().inverse();
    auto lead = [](const ParamPoly& x) {
        const std::pair<const Monomial, Rational>* best = nullptr;
        for (const auto& t : x.terms())
            if (!best || grevlex_greater(t.first, best->first)) best = &t;
        return *best;
    };
    auto [um, uc] = lead(u);
    ParamPoly rem = p;
    ParamPoly q(p.symbols());
    while (!rem.is_zero()) {
        auto [rm, rc] = lead(rem);
        if (!divides(um, rm)) throw std::domain_error("exact_quotient: " + u.str() + " does not divide " + p.str());
        ParamPoly::TermMap t;
        t.emplace(quotient(rm, um), rc / uc);
        auto step = ParamPoly::from_terms(p.symbols(), std::move(t));
        q += step;
        rem -= step * u;
    }
    return q;
}

/// The substitution z -> z/u: A -> A/u^2, B -> B/u, lead -> lead/u^3.
/// Multiplicity is unchanged. A non-constant u must divide exactly; a
/// quartic whose new lead is not 1 becomes scaled-quartic.
inline EquationSpec rescale(const EquationSpec& eq, const ParamPoly& u) {
    if (u.is_zero()) throw std::domain_error("rescale: unit must be nonzero");
    auto div = [&](const PiecewisePoly& f, unsigned power) {
        ParamPoly up = u.pow(power);
        return f.map_segments([&](const TPoly& s) { return s.map_coeffs([&](const ParamPoly& c) { return exact_quotient(c, up); }); });
    };
    PiecewisePoly a = div(eq.A(), 2);
    PiecewisePoly b = div(eq.B(), 1);
    if (eq.family() == Family::cubic) return EquationSpec::cubic(std::move(a), std::move(b));
    ParamPoly lead = exact_quotient(eq.lead(), u.pow(3));
    if (lead.is_constant() && lead.constant_value().is_one()) return EquationSpec::quartic(std::move(a), std::move(b));
    return EquationSpec::scaled_quartic(std::move(a), std::move(b), std::move(lead));
}

inline EquationSpec rescale(const EquationSpec& eq, const Rational& u) {
    return rescale(eq, ParamPoly::constant(u, eq.symbols()));
}

}  // namespace abelmult

#endif
