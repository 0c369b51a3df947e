#ifndef ABELMULT_GROEBNER_HPP
#define ABELMULT_GROEBNER_HPP

#include "abelmult/budget.hpp"
#include "abelmult/ordering.hpp"
#include "abelmult/param_poly.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abelmult {

namespace gb {

struct Term {
    Monomial m;
    Rational c;
};

/// Distributed polynomial: terms sorted by strictly descending monomial
/// under the active ordering.
using DPoly = std::vector<Term>;

inline DPoly to_dpoly(const ParamPoly& p, const MonomialOrdering& ord) {
    DPoly d;
    d.reserve(p.size());
    for (const auto& [m, c] : p.terms()) d.push_back({m, c});
    std::sort(d.begin(), d.end(), [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return d;
}

inline ParamPoly to_param(const DPoly& d, const Symbols& syms) {
    ParamPoly p(syms);
    for (const auto& t : d) p.add_term(t.m, t.c);
    return p;
}

inline void make_monic(DPoly& p) {
    if (p.empty() || p.front().c.is_one()) return;
    Rational inv = p.front().c.inverse();
    for (auto& t : p) t.c *= inv;
}

/// p[ps..] - c * q * g[gs..], merged in ordering.
inline DPoly sub_multiple(const DPoly& p, std::size_t ps, const Rational& c, const Monomial& q, const DPoly& g,
                          std::size_t gs, const MonomialOrdering& ord) {
    DPoly out;
    out.reserve((p.size() - std::min(ps, p.size())) + (g.size() - std::min(gs, g.size())));
    std::size_t i = ps, j = gs;
    Monomial gm;
    bool have = false;
    while (i < p.size() || j < g.size()) {
        if (j < g.size() && !have) {
            gm = q.is_one() ? g[j].m : q * g[j].m;
            have = true;
        }
        int cmp;
        if (i >= p.size()) cmp = -1;
        else if (j >= g.size()) cmp = 1;
        else cmp = ord.compare(p[i].m, gm);
        if (cmp > 0) {
            out.push_back(p[i]);
            ++i;
        } else if (cmp < 0) {
            out.push_back({gm, -(c * g[j].c)});
            ++j;
            have = false;
        } else {
            Rational v = p[i].c - c * g[j].c;
            if (!v.is_zero()) out.push_back({p[i].m, std::move(v)});
            ++i;
            ++j;
            have = false;
        }
    }
    return out;
}

/// Full normal form of p with respect to monic divisors; each step uses the
/// applicable divisor with the smallest leading monomial.
inline DPoly normal_form(DPoly p, std::span<const DPoly* const> divisors, const MonomialOrdering& ord,
                         const Budget* budget = nullptr) {
    DPoly rem;
    std::size_t i = 0;
    unsigned steps = 0;
    while (i < p.size()) {
        const DPoly* best = nullptr;
        for (const DPoly* g : divisors) {
            if (divides(g->front().m, p[i].m) && (!best || ord.greater(best->front().m, g->front().m))) best = g;
        }
        if (!best) {
            rem.push_back(std::move(p[i]));
            ++i;
            continue;
        }
        if (budget && (++steps & 7u) == 0) budget->check();
        Monomial q = quotient(p[i].m, best->front().m);
        Rational c = p[i].c;
        p = sub_multiple(p, i + 1, c, q, *best, 1, ord);
        i = 0;
    }
    return rem;
}

/// S-polynomial of two monic polynomials.
inline DPoly s_poly(const DPoly& f, const DPoly& g, const MonomialOrdering& ord) {
    Monomial l = lcm(f.front().m, g.front().m);
    Monomial qf = quotient(l, f.front().m);
    Monomial qg = quotient(l, g.front().m);
    DPoly a;
    a.reserve(f.size());
    for (std::size_t i = 1; i < f.size(); ++i) a.push_back({qf * f[i].m, f[i].c});
    return sub_multiple(a, 0, Rational(1), qg, g, 1, ord);
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// under the ordering itself) and the Gebauer-Moeller pair update (product
/// and chain criteria).
class Engine {
public:
    Engine(Symbols syms, MonomialOrdering ord, const Budget* budget = nullptr)
        : syms_(std::move(syms)), ord_(std::move(ord)), budget_(budget) {}

    /// Seeds with elements already known to form a Groebner basis.
    void seed(const std::vector<ParamPoly>& basis) {
        for (const auto& p : basis) {
            DPoly d = to_dpoly(p, ord_);
            if (d.empty()) continue;
            make_monic(d);
            polys_.push_back(std::move(d));
            live_.push_back(true);
        }
    }

    void add(const ParamPoly& p) {
        DPoly h = normal_form(to_dpoly(p, ord_), live_divisors(), ord_, budget_);
        if (h.empty()) return;
        make_monic(h);
        update(std::move(h));
    }

    void run() {
        while (!pairs_.empty()) {
            if (budget_) budget_->check();
            auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                int c = ord_.compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });
            Pair pr = *it;
            pairs_.erase(it);
            DPoly s = s_poly(polys_[pr.i], polys_[pr.j], ord_);
            DPoly h = normal_form(std::move(s), live_divisors(), ord_, budget_);
            ++reductions_;
            if (h.empty()) continue;
            make_monic(h);
            update(std::move(h));
        }
    }

    /// Reduced, monic basis sorted by ascending leading monomial.
    std::vector<DPoly> reduced() const {
        std::vector<const DPoly*> g;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (live_[i]) g.push_back(&polys_[i]);
        // minimal
        std::vector<const DPoly*> min;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
                if (i == j) continue;
                const auto& a = g[j]->front().m;
                const auto& b = g[i]->front().m;
                if (divides(a, b) && (!(a == b) || j < i)) redundant = true;
            }
            if (!redundant) min.push_back(g[i]);
        }
        std::vector<DPoly> out;
        for (std::size_t i = 0; i < min.size(); ++i) {
            std::vector<const DPoly*> others;
            for (std::size_t j = 0; j < min.size(); ++j)
                if (j != i) others.push_back(min[j]);
            DPoly r = normal_form(*min[i], others, ord_, budget_);
            make_monic(r);
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [&](const DPoly& a, const DPoly& b) { return ord_.greater(b.front().m, a.front().m); });
        return out;
    }

    std::size_t reductions() const { return reductions_; }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    std::vector<const DPoly*> live_divisors() const {
        std::vector<const DPoly*> out;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (live_[i]) out.push_back(&polys_[i]);
        return out;
    }

    void update(DPoly h) {
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        live_.push_back(false);
        const Monomial& lh = polys_[hi].front().m;

        std::vector<Pair> c;
        for (std::size_t g = 0; g < hi; ++g)
            if (live_[g]) c.push_back({g, hi, lcm(polys_[g].front().m, lh)});

        std::vector<Pair> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Pair& p = c[k];
            bool keep = coprime(lh, polys_[p.i].front().m);
            if (!keep) {
                keep = true;
                for (std::size_t m = k + 1; m < c.size() && keep; ++m)
                    if (divides(c[m].lcm, p.lcm)) keep = false;
                for (std::size_t m = 0; m < d.size() && keep; ++m)
                    if (divides(d[m].lcm, p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }

        std::vector<Pair> next;
        for (const auto& p : pairs_) {
            if (divides(lh, p.lcm) && !(lcm(polys_[p.i].front().m, lh) == p.lcm) &&
                !(lcm(polys_[p.j].front().m, lh) == p.lcm))
                continue;
            next.push_back(p);
        }
        for (auto& p : d)
            if (!coprime(lh, polys_[p.i].front().m)) next.push_back(std::move(p));
        pairs_ = std::move(next);

        for (std::size_t g = 0; g < hi; ++g)
            if (live_[g] && divides(lh, polys_[g].front().m)) live_[g] = false;
        live_[hi] = true;
    }

    Symbols syms_;
    MonomialOrdering ord_;
    const Budget* budget_;
    std::vector<DPoly> polys_;
    std::vector<bool> live_;
    std::vector<Pair> pairs_;
    std::size_t reductions_ = 0;
};

}  // namespace gb

/// Reduced Groebner basis of an ideal under a fixed monomial ordering.
/// Generators are monic and sorted by ascending leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(Symbols syms, MonomialOrdering ord) : syms_(std::move(syms)), ord_(std::move(ord)) {}

    const Symbols& symbols() const { return syms_; }
    const MonomialOrdering& ordering() const { return ord_; }
    const std::vector<ParamPoly>& generators() const { return gens_; }
    bool reduced() const { return true; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero_ideal() const { return gens_.empty(); }

    /// True when the basis contains a nonzero constant, i.e. the ideal is <1>.
    bool is_trivial() const {
        return std::any_of(gens_.begin(), gens_.end(), [](const ParamPoly& g) { return g.is_constant() && !g.is_zero(); });
    }

    ParamPoly reduce(const ParamPoly& p, const Budget* budget = nullptr) const {
        check_symbols(p);
        std::vector<const gb::DPoly*> divs;
        for (const auto& d : dgens_) divs.push_back(&d);
        return gb::to_param(gb::normal_form(gb::to_dpoly(p, ord_), divs, ord_, budget), syms_);
    }

    bool contains(const ParamPoly& p) const { return reduce(p).is_zero(); }

    /// Basis of the ideal with extra generators adjoined.
    GroebnerBasis adjoin(std::span<const ParamPoly> extra, const Budget* budget = nullptr) const {
        gb::Engine e(syms_, ord_, budget);
        e.seed(gens_);
        for (const auto& p : extra) {
            check_symbols(p);
            e.add(p);
        }
        e.run();
        return from_engine(e);
    }

    GroebnerBasis adjoin(const ParamPoly& p, const Budget* budget = nullptr) const {
        return adjoin(std::span<const ParamPoly>(&p, 1), budget);
    }

    /// Leading monomial of each generator.
    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& d : dgens_) out.push_back(d.front().m);
        return out;
    }

    /// Generators scaled to integer coefficients with unit content and a
    /// positive leading coefficient.
    std::vector<ParamPoly> primitive_generators() const {
        std::vector<ParamPoly> out;
        for (const auto& d : dgens_) {
            mpz_class den = 1, num = 0;
            for (const auto& t : d) den = lcm(den, t.c.denominator());
            for (const auto& t : d) num = gcd(num, mpz_class(t.c.numerator() * (den / t.c.denominator())));
            Rational scale = Rational::make(den, num == 0 ? mpz_class(1) : num);
            if (!d.empty() && d.front().c.sign() < 0) scale = -scale;
            ParamPoly p(syms_);
            for (const auto& t : d) p.add_term(t.m, t.c * scale);
            out.push_back(std::move(p));
        }
        return out;
    }

    std::string str() const {
        std::string s = "<";
        auto prim = primitive_generators();
        for (std::size_t i = 0; i < prim.size(); ++i) s += (i ? ", " : "") + prim[i].str();
        return s + ">";
    }

    static GroebnerBasis from_engine(const gb::Engine& e, Symbols syms, MonomialOrdering ord) {
        GroebnerBasis b(std::move(syms), std::move(ord));
        b.dgens_ = e.reduced();
        for (const auto& d : b.dgens_) b.gens_.push_back(gb::to_param(d, b.syms_));
        return b;
    }

private:
    GroebnerBasis from_engine(const gb::Engine& e) const { return from_engine(e, syms_, ord_); }

    void check_symbols(const ParamPoly& p) const {
        if (!same_symbols(p.symbols(), syms_)) throw std::invalid_argument("groebner: symbol list mismatch");
    }

    Symbols syms_;
    MonomialOrdering ord_;
    std::vector<ParamPoly> gens_;
    std::vector<gb::DPoly> dgens_;
};

/// Reduced Groebner basis of <gens>. All generators must share one symbol list.
inline GroebnerBasis buchberger(std::span<const ParamPoly> gens, const Symbols& syms,
                                const MonomialOrdering& ord = MonomialOrdering(), const Budget* budget = nullptr) {
    gb::Engine e(syms, ord, budget);
    for (const auto& p : gens) {
        if (!same_symbols(p.symbols(), syms)) throw std::invalid_argument("groebner: symbol list mismatch");
        e.add(p);
    }
    e.run();
    return GroebnerBasis::from_engine(e, syms, ord);
}

inline GroebnerBasis buchberger(const std::vector<ParamPoly>& gens, const MonomialOrdering& ord = MonomialOrdering(),
                                const Budget* budget = nullptr) {
    if (gens.empty()) throw std::invalid_argument("groebner: empty generator list needs an explicit symbol list");
    return buchberger(std::span<const ParamPoly>(gens), gens.front().symbols(), ord, budget);
}

/// Normal form of p by successive division with the given (not necessarily
/// Groebner) list: no term of the result is divisible by a leading monomial.
inline ParamPoly reduce(const ParamPoly& p, std::span<const ParamPoly> basis, const MonomialOrdering& ord) {
    std::vector<gb::DPoly> d;
    for (const auto& g : basis) {
        if (!same_symbols(g.symbols(), p.symbols())) throw std::invalid_argument("groebner: symbol list mismatch");
        auto x = gb::to_dpoly(g, ord);
        if (x.empty()) continue;
        gb::make_monic(x);
        d.push_back(std::move(x));
    }
    std::vector<const gb::DPoly*> divs;
    for (const auto& x : d) divs.push_back(&x);
    return gb::to_param(gb::normal_form(gb::to_dpoly(p, ord), divs, ord), p.symbols());
}

inline ParamPoly s_polynomial(const ParamPoly& f, const ParamPoly& g, const MonomialOrdering& ord) {
    auto a = gb::to_dpoly(f, ord);
    auto b = gb::to_dpoly(g, ord);
    if (a.empty() || b.empty()) return ParamPoly(f.symbols());
    gb::make_monic(a);
    gb::make_monic(b);
    return gb::to_param(gb::s_poly(a, b, ord), f.symbols());
}

/// Leading monomial under an ordering; p must be nonzero.
inline Monomial leading_monomial(const ParamPoly& p, const MonomialOrdering& ord) {
    if (p.is_zero()) throw std::invalid_argument("groebner: leading monomial of zero");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || ord.greater(m, *best)) best = &m;
    return *best;
}

/// True iff each basis reduces the other's generators to zero.
inline bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (!same_symbols(a.symbols(), b.symbols())) throw std::invalid_argument("groebner: symbol list mismatch");
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

inline bool is_trivial(const GroebnerBasis& b) { return b.is_trivial(); }

/// True iff the univariate quadratic p has negative discriminant.
inline bool no_real_root_quadratic(const ParamPoly& p) {
    auto used = p.used_symbols();
    if (used.size() != 1) throw std::invalid_argument("no_real_root_quadratic: polynomial must be univariate");
    auto v = symbol_index(*p.symbols(), used.front());
    if (p.degree_in(v) != 2 || p.total_degree() != 2)
        throw std::invalid_argument("no_real_root_quadratic: polynomial must be quadratic");
    auto coeff = [&](Monomial::Exponent e) { return p.coefficient(Monomial::unit(p.nvars(), v, e)); };
    Rational a = coeff(2), b = coeff(1);
    Rational c = p.coefficient(Monomial(p.nvars()));
    return b * b - Rational(4) * a * c < Rational(0);
}

}  // namespace abelmult

#endif
