#ifndef ABELMULT_CENTER_HPP
#define ABELMULT_CENTER_HPP

#include "abelmult/equation.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelmult {

/// Sufficient center conditions for the cubic family. A `none` result never
/// asserts that the origin is not a center.
enum class CertificateKind { none, symmetry, pl_symmetry, proportional };

inline std::string to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::none: return "none";
    case CertificateKind::symmetry: return "symmetry";
    case CertificateKind::pl_symmetry: return "pl-symmetry";
    case CertificateKind::proportional: return "proportional";
    }
    return "?";
}

struct CenterCertificate {
    CertificateKind kind = CertificateKind::none;
    std::optional<Rational> lambda;     ///< proportional: B = lambda A
    std::optional<PiecewisePoly> s;     ///< proportional: s(t) = int_0^t A

    explicit operator bool() const { return kind != CertificateKind::none; }
};

namespace detail {

inline void require_cubic(const EquationSpec& eq, const char* what) {
    if (eq.family() != Family::cubic) throw std::invalid_argument(std::string(what) + ": cubic family required");
}

/// n if the breakpoints are exactly k/n, otherwise 0.
inline int uniform_count(const PiecewisePoly& f) {
    const auto& br = f.breakpoints();
    int n = static_cast<int>(br.size()) - 1;
    for (int k = 0; k <= n; ++k)
        if (br[static_cast<std::size_t>(k)] != rat_make(k, n)) return 0;
    return n;
}

inline bool is_piecewise_linear(const PiecewisePoly& f) {
    for (const auto& s : f.segments())
        if (s.degree() > 1) return false;
    return true;
}

}  // namespace detail

/// f(1/2 + t) = -f(1/2 - t) for both coefficients, i.e. f(s) + f(1 - s) = 0.
inline bool symmetry_check(const EquationSpec& eq) {
    detail::require_cubic(eq, "symmetry_check");
    for (const auto* f : {&eq.A(), &eq.B()})
        if (!(*f + f->reflect()).is_zero()) return false;
    return true;
}

/// Slope data of a piecewise-linear function on the uniform grid k/n.
struct PlData {
    std::vector<ParamPoly> slopes;
    ParamPoly value_at_half;
};

/// Both functions vanish at 1/2 and have palindromic slopes,
/// slope k = slope n+1-k. Both must live on the same grid.
inline bool pl_center_check(const PlData& a, const PlData& b) {
    if (a.slopes.empty() || a.slopes.size() != b.slopes.size())
        throw std::invalid_argument("pl_center_check: both functions must use the same uniform grid");
    for (const auto* d : {&a, &b}) {
        if (!d->value_at_half.is_zero()) return false;
        const std::size_t n = d->slopes.size();
        for (std::size_t k = 0; k < n / 2; ++k)
            if (d->slopes[k] != d->slopes[n - 1 - k]) return false;
    }
    return true;
}

/// Equation form: A and B must be continuous piecewise-linear on uniform
/// grids. A coarser grid is refined when it divides the finer one.
inline bool pl_center_check(const EquationSpec& eq) {
    detail::require_cubic(eq, "pl_center_check");
    const int na = detail::uniform_count(eq.A()), nb = detail::uniform_count(eq.B());
    if (na == 0 || nb == 0) throw std::invalid_argument("pl_center_check: breakpoints must be uniform k/n");
    if (!detail::is_piecewise_linear(eq.A()) || !detail::is_piecewise_linear(eq.B()))
        throw std::invalid_argument("pl_center_check: coefficients must be piecewise linear");
    if (!eq.A().is_continuous() || !eq.B().is_continuous())
        throw std::invalid_argument("pl_center_check: coefficients must be continuous");
    const int n = std::lcm(na, nb);
    if (n != std::max(na, nb)) throw std::invalid_argument("pl_center_check: grids k/" + std::to_string(na) +
                                                           " and k/" + std::to_string(nb) + " are not nested");
    std::vector<Rational> grid{Rational(0)};
    for (const auto& b : uniform_breaks(n)) grid.push_back(b);
    grid.push_back(Rational(1));
    auto data = [&](const PiecewisePoly& f) {
        PlData d;
        const auto fine = f.refine(grid);
        for (const auto& s : fine.segments()) d.slopes.push_back(s.coeff(1));
        d.value_at_half = f.value_at(rat_make(1, 2));
        return d;
    };
    return pl_center_check(data(eq.A()), data(eq.B()));
}

/// B = lambda A with a parameter-free rational lambda and int_0^1 A = 0, so
/// both coefficients are compositions through the periodic s(t) = int_0^t A.
inline CenterCertificate proportional_check(const EquationSpec& eq) {
    detail::require_cubic(eq, "proportional_check");
    CenterCertificate none;
    const auto breaks = PiecewisePoly::merge_breaks(eq.A().breakpoints(), eq.B().breakpoints());
    const auto a = eq.A().refine(breaks), b = eq.B().refine(breaks);
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < a.segments().size() && !lambda; ++i) {
        const auto& sa = a.segments()[i];
        const auto& sb = b.segments()[i];
        for (int j = 0; j <= sa.degree() && !lambda; ++j) {
            const ParamPoly ca = sa.coeff(static_cast<std::size_t>(j));
            if (ca.is_zero()) continue;
            const auto& [m, c] = *ca.terms().begin();
            lambda = sb.coeff(static_cast<std::size_t>(j)).coefficient(m) / c;
        }
    }
    if (!lambda) return none;
    if (!(b - a * ParamPoly::constant(*lambda, eq.symbols())).is_zero()) return none;
    if (!eq.A().integrate01().is_zero()) return none;
    CenterCertificate cert;
    cert.kind = CertificateKind::proportional;
    cert.lambda = lambda;
    cert.s = eq.A().antiderivative();
    return cert;
}

/// First certificate found among pl-symmetry, symmetry and proportionality.
inline CenterCertificate find_certificate(const EquationSpec& eq) {
    detail::require_cubic(eq, "find_certificate");
    CenterCertificate c;
    bool pl_shape = detail::uniform_count(eq.A()) && detail::uniform_count(eq.B()) &&
                    detail::is_piecewise_linear(eq.A()) && detail::is_piecewise_linear(eq.B()) &&
                    eq.A().is_continuous() && eq.B().is_continuous();
    if (pl_shape) {
        try {
            if (pl_center_check(eq)) {
                c.kind = CertificateKind::pl_symmetry;
                return c;
            }
        } catch (const std::invalid_argument&) {
        }
    }
    if (symmetry_check(eq)) {
        c.kind = CertificateKind::symmetry;
        return c;
    }
    return proportional_check(eq);
}

}  // namespace abelmult

#endif
