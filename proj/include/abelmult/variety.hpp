#ifndef ABELMULT_VARIETY_HPP
#define ABELMULT_VARIETY_HPP

#include "abelmult/groebner.hpp"
#include "abelmult/numverify.hpp"

#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace abelmult {

namespace detail {

/// Coefficients of var^j in p, as polynomials over the same symbols.
inline std::vector<ParamPoly> coeffs_in(const ParamPoly& p, std::size_t var) {
    std::vector<ParamPoly> out;
    for (const auto& [m, c] : p.terms()) {
        std::size_t d = m[var];
        if (out.size() <= d) out.resize(d + 1, ParamPoly(p.symbols()));
        std::vector<Monomial::Exponent> e(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) e[i] = i == var ? 0 : m[i];
        out[d].add_term(Monomial(std::move(e)), c);
    }
    return out;
}

/// Highest-ranked variable occurring in p under a lex ranking.
inline std::optional<std::size_t> top_variable(const ParamPoly& p, const std::vector<std::size_t>& rank) {
    for (auto v : rank)
        if (p.degree_in(v) > 0) return v;
    return std::nullopt;
}

inline std::vector<std::size_t> rank_of(const MonomialOrdering& ord, std::size_t n) {
    if (!ord.rank().empty()) return ord.rank();
    std::vector<std::size_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = i;
    return r;
}

/// Real roots of sum c_j x^j (Durand-Kerner, then Newton polishing).
inline std::vector<long double> real_roots(std::vector<long double> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    const std::size_t n = c.empty() ? 0 : c.size() - 1;
    if (n == 0) return {};
    if (n == 1) return {-c[0] / c[1]};
    using C = std::complex<long double>;
    std::vector<C> z(n);
    long double bound = 0;
    for (std::size_t j = 0; j < n; ++j) bound = std::max(bound, std::fabs(c[j] / c[n]));
    bound += 1;
    for (std::size_t i = 0; i < n; ++i) z[i] = std::polar(bound, 0.4L + 6.283185307179586L * i / n);
    auto eval = [&](C x) {
        C r = 0;
        for (std::size_t j = n + 1; j-- > 0;) r = r * x + c[j];
        return r;
    };
    for (int it = 0; it < 2000; ++it) {
        long double delta = 0;
        for (std::size_t i = 0; i < n; ++i) {
            C den = c[n];
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            C step = eval(z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-18L * bound) break;
    }
    std::vector<long double> out;
    for (auto r : z) {
        if (std::fabs(r.imag()) > 1e-7L * std::max(1.0L, std::abs(r))) continue;
        long double x = r.real();
        for (int it = 0; it < 50; ++it) {
            long double f = 0, df = 0;
            for (std::size_t j = n + 1; j-- > 0;) {
                df = df * x + f;
                f = f * x + c[j];
            }
            if (df == 0) break;
            x -= f / df;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

struct SamplerOptions {
    long numerator_range = 9;  ///< free values p/q with |p| <= range
    long denominator_max = 4;
    int attempts = 64;
    /// Values to use for free variables instead of random ones.
    Assignment fixed;
};

/// A rational point on the variety of `g` (a lex basis), by solving each
/// variable from a generator linear in it, smallest variable first. Free
/// variables get random rational values. Returns nullopt when every attempt
/// hits a nonlinear or degenerate step.
template <class Rng>
std::optional<Assignment> sample_rational_point(const GroebnerBasis& g, Rng& rng, const SamplerOptions& opt = {}) {
    if (g.ordering().kind() != OrderKind::lex) throw std::invalid_argument("sample_rational_point: lex basis required");
    if (g.is_trivial()) return std::nullopt;
    const auto& syms = *g.symbols();
    const auto rank = detail::rank_of(g.ordering(), syms.size());
    std::uniform_int_distribution<long> num(-opt.numerator_range, opt.numerator_range), den(1, opt.denominator_max);
    for (int attempt = 0; attempt < opt.attempts; ++attempt) {
        Assignment pt;
        bool ok = true;
        for (std::size_t r = rank.size(); r-- > 0 && ok;) {
            const std::size_t v = rank[r];
            std::vector<ParamPoly> here;
            for (const auto& p : g.generators())
                if (detail::top_variable(p, rank) == v) here.push_back(p.substitute(pt, true));
            if (here.empty()) {
                auto fixed = opt.fixed.find(syms[v]);
                pt[syms[v]] = fixed != opt.fixed.end() ? fixed->second : Rational::make(num(rng), den(rng));
                continue;
            }
            std::optional<Rational> value;
            for (const auto& p : here) {
                auto cs = detail::coeffs_in(p, v);
                if (cs.size() == 2 && !cs[1].is_zero()) {
                    value = -cs[0].constant_value() / cs[1].constant_value();
                    break;
                }
            }
            if (!value) {
                ok = false;
                break;
            }
            pt[syms[v]] = *value;
            for (const auto& p : here)
                if (!p.substitute({{syms[v], *value}}, true).is_zero()) ok = false;
        }
        if (ok) return pt;
    }
    return std::nullopt;
}

/// A real point on a zero-dimensional variety from a lex basis, solving
/// smallest variable first; `root_index` picks among real roots whenever a
/// univariate step has several (clamped to the available count).
inline std::optional<RealAssignment<long double>> solve_real_point(const GroebnerBasis& g, std::size_t root_index = 0) {
    if (g.ordering().kind() != OrderKind::lex) throw std::invalid_argument("solve_real_point: lex basis required");
    if (g.is_trivial()) return std::nullopt;
    const auto& syms = *g.symbols();
    const auto rank = detail::rank_of(g.ordering(), syms.size());
    RealAssignment<long double> pt;
    for (std::size_t r = rank.size(); r-- > 0;) {
        const std::size_t v = rank[r];
        const ParamPoly* best = nullptr;
        for (const auto& p : g.generators())
            if (detail::top_variable(p, rank) == v && (!best || p.degree_in(v) < best->degree_in(v))) best = &p;
        if (!best) throw std::invalid_argument("solve_real_point: variety is not zero-dimensional in '" + syms[v] + "'");
        std::vector<long double> c;
        for (const auto& cp : detail::coeffs_in(*best, v)) c.push_back(eval_real(cp, pt));
        auto roots = detail::real_roots(c);
        if (roots.empty()) return std::nullopt;
        pt[syms[v]] = roots[std::min(root_index, roots.size() - 1)];
    }
    return pt;
}

}  // namespace abelmult

#endif
