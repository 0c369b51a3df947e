#ifndef ABELMULT_PIECEWISE_HPP
#define ABELMULT_PIECEWISE_HPP

#include "abelmult/param_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelmult {

/// Univariate polynomial in t with ParamPoly coefficients, ascending powers.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients.
class TPoly {
public:
    TPoly() : syms_(make_symbols(SymbolList{})) {}
    explicit TPoly(Symbols syms) : syms_(std::move(syms)) {}
    TPoly(Symbols syms, std::vector<ParamPoly> coeffs) : syms_(std::move(syms)), c_(std::move(coeffs)) {
        for (const auto& c : c_)
            if (!same_symbols(c.symbols(), syms_)) throw std::invalid_argument("tpoly: coefficient symbol mismatch");
        trim();
    }

    static TPoly constant(const ParamPoly& c) { return TPoly(c.symbols(), {c}); }
    /// The polynomial t.
    static TPoly identity(const Symbols& syms) {
        return TPoly(syms, {ParamPoly(syms), ParamPoly::constant(Rational(1), syms)});
    }

    const Symbols& symbols() const { return syms_; }
    const std::vector<ParamPoly>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree in t; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    ParamPoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ParamPoly(syms_); }

    TPoly operator-() const {
        TPoly r(syms_);
        for (const auto& c : c_) r.c_.push_back(-c);
        return r;
    }

    TPoly& operator+=(const TPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ParamPoly(syms_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    TPoly& operator-=(const TPoly& o) { return *this += -o; }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r(a.syms_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, ParamPoly(a.syms_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend TPoly operator*(const TPoly& a, const ParamPoly& s) {
        TPoly r(a.syms_);
        for (const auto& c : a.c_) r.c_.push_back(c * s);
        r.trim();
        return r;
    }
    friend TPoly operator*(const TPoly& a, const Rational& s) {
        TPoly r(a.syms_);
        for (const auto& c : a.c_) r.c_.push_back(c * s);
        r.trim();
        return r;
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

    /// Value at a rational t (Horner).
    ParamPoly eval(const Rational& t) const {
        ParamPoly r(syms_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
        return r;
    }

    /// Value at a polynomial argument.
    ParamPoly eval(const ParamPoly& t) const {
        ParamPoly r(syms_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
        return r;
    }

    /// Formal antiderivative with zero constant term.
    TPoly antiderivative() const {
        TPoly r(syms_);
        if (is_zero()) return r;
        r.c_.push_back(ParamPoly(syms_));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational::make(1, static_cast<long>(i + 1)));
        r.trim();
        return r;
    }

    TPoly derivative() const {
        TPoly r(syms_);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
        r.trim();
        return r;
    }

    /// p(alpha + beta t) for rational alpha, beta.
    TPoly affine_compose(const Rational& alpha, const Rational& beta) const {
        TPoly lin(syms_, {ParamPoly::constant(alpha, syms_), ParamPoly::constant(beta, syms_)});
        TPoly r(syms_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
        return r;
    }

    TPoly substitute(const Assignment& a, bool partial = true) const {
        TPoly r(syms_);
        for (const auto& c : c_) r.c_.push_back(c.substitute(a, partial));
        r.trim();
        return r;
    }

    TPoly map_coeffs(const auto& f) const {
        TPoly r(syms_);
        for (const auto& c : c_) r.c_.push_back(f(c));
        r.trim();
        return r;
    }

    TPoly embed(const Symbols& target) const {
        TPoly r(target);
        for (const auto& c : c_) r.c_.push_back(c.embed(target));
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].str() + ")";
            if (i == 1) s += "*t";
            if (i > 1) s += "*t^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Symbols syms_;
    std::vector<ParamPoly> c_;
};

/// Piecewise polynomial on [0,1] with exact rational breakpoints
/// 0 = t_0 < t_1 < ... < t_m = 1; segment i is valid on [t_i, t_{i+1}].
class PiecewisePoly {
public:
    PiecewisePoly() : PiecewisePoly(make_symbols(SymbolList{})) {}
    explicit PiecewisePoly(Symbols syms)
        : syms_(syms), breaks_{Rational(0), Rational(1)}, segs_{TPoly(syms)} {}

    PiecewisePoly(Symbols syms, std::vector<Rational> breaks, std::vector<TPoly> segs)
        : syms_(std::move(syms)), breaks_(std::move(breaks)), segs_(std::move(segs)) {
        if (breaks_.size() < 2 || breaks_.front() != Rational(0) || breaks_.back() != Rational(1))
            throw std::invalid_argument("piecewise: breakpoints must start at 0 and end at 1");
        for (std::size_t i = 1; i < breaks_.size(); ++i)
            if (!(breaks_[i - 1] < breaks_[i])) throw std::invalid_argument("piecewise: breakpoints not increasing");
        if (segs_.size() + 1 != breaks_.size()) throw std::invalid_argument("piecewise: segment count mismatch");
        for (const auto& s : segs_)
            if (!same_symbols(s.symbols(), syms_)) throw std::invalid_argument("piecewise: segment symbol mismatch");
    }

    /// Single segment on [0,1]; coeffs are ascending powers of t.
    static PiecewisePoly from_poly(const std::vector<ParamPoly>& coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("piecewise: empty coefficient list");
        auto syms = coeffs.front().symbols();
        return PiecewisePoly(syms, {Rational(0), Rational(1)}, {TPoly(syms, coeffs)});
    }

    static PiecewisePoly from_tpoly(const TPoly& p) {
        return PiecewisePoly(p.symbols(), {Rational(0), Rational(1)}, {p});
    }

    /// Continuous piecewise-linear function with value `intercept` at t = 0,
    /// slope slopes[k] on segment k, and interior breakpoints `breaks`.
    static PiecewisePoly pl_from_slopes(const ParamPoly& intercept, const std::vector<ParamPoly>& slopes,
                                        const std::vector<Rational>& breaks) {
        if (slopes.size() != breaks.size() + 1)
            throw std::invalid_argument("piecewise: need exactly one more slope than breakpoints");
        for (std::size_t i = 0; i < breaks.size(); ++i) {
            if (!(Rational(0) < breaks[i] && breaks[i] < Rational(1)))
                throw std::invalid_argument("piecewise: breakpoint outside (0,1)");
            if (i > 0 && !(breaks[i - 1] < breaks[i]))
                throw std::invalid_argument("piecewise: breakpoints not increasing");
        }
        auto syms = intercept.symbols();
        std::vector<Rational> all{Rational(0)};
        all.insert(all.end(), breaks.begin(), breaks.end());
        all.push_back(Rational(1));
        std::vector<TPoly> segs;
        ParamPoly offset = intercept;
        for (std::size_t k = 0; k < slopes.size(); ++k) {
            if (k > 0) offset += (slopes[k - 1] - slopes[k]) * breaks[k - 1];
            segs.emplace_back(syms, std::vector<ParamPoly>{offset, slopes[k]});
        }
        return PiecewisePoly(syms, std::move(all), std::move(segs));
    }

    static PiecewisePoly constant(const ParamPoly& c) { return from_poly({c}); }

    const Symbols& symbols() const { return syms_; }
    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<TPoly>& segments() const { return segs_; }
    std::size_t segment_count() const { return segs_.size(); }

    int max_degree() const {
        int d = -1;
        for (const auto& s : segs_) d = std::max(d, s.degree());
        return d;
    }

    bool is_zero() const {
        return std::all_of(segs_.begin(), segs_.end(), [](const TPoly& s) { return s.is_zero(); });
    }

    /// Same function over a finer breakpoint set (must contain the current one).
    PiecewisePoly refine(const std::vector<Rational>& fine) const {
        std::vector<TPoly> segs;
        std::size_t j = 0;
        for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
            while (j + 1 < segs_.size() && breaks_[j + 1] <= fine[i]) ++j;
            segs.push_back(segs_[j]);
        }
        for (const auto& b : breaks_)
            if (!std::binary_search(fine.begin(), fine.end(), b))
                throw std::invalid_argument("piecewise: refinement drops a breakpoint");
        return PiecewisePoly(syms_, fine, std::move(segs));
    }

    static std::vector<Rational> merge_breaks(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    template <class Op>
    static PiecewisePoly zip(const PiecewisePoly& p, const PiecewisePoly& q, Op op) {
        if (!same_symbols(p.syms_, q.syms_)) throw std::invalid_argument("piecewise: symbol list mismatch");
        if (p.breaks_ == q.breaks_) {
            std::vector<TPoly> segs;
            for (std::size_t i = 0; i < p.segs_.size(); ++i) segs.push_back(op(p.segs_[i], q.segs_[i]));
            return PiecewisePoly(p.syms_, p.breaks_, std::move(segs));
        }
        auto fine = merge_breaks(p.breaks_, q.breaks_);
        return zip(p.refine(fine), q.refine(fine), op);
    }

    friend PiecewisePoly operator+(const PiecewisePoly& p, const PiecewisePoly& q) {
        return zip(p, q, [](const TPoly& a, const TPoly& b) { return a + b; });
    }
    friend PiecewisePoly operator-(const PiecewisePoly& p, const PiecewisePoly& q) {
        return zip(p, q, [](const TPoly& a, const TPoly& b) { return a - b; });
    }
    friend PiecewisePoly operator*(const PiecewisePoly& p, const PiecewisePoly& q) {
        return zip(p, q, [](const TPoly& a, const TPoly& b) { return a * b; });
    }
    friend PiecewisePoly operator*(const PiecewisePoly& p, const ParamPoly& s) {
        return p.map_segments([&](const TPoly& a) { return a * s; });
    }
    friend PiecewisePoly operator*(const PiecewisePoly& p, const Rational& s) {
        return p.map_segments([&](const TPoly& a) { return a * s; });
    }
    PiecewisePoly operator-() const {
        return map_segments([](const TPoly& a) { return -a; });
    }

    template <class F>
    PiecewisePoly map_segments(F f) const {
        std::vector<TPoly> segs;
        segs.reserve(segs_.size());
        for (const auto& s : segs_) segs.push_back(f(s));
        return PiecewisePoly(syms_, breaks_, std::move(segs));
    }

    /// F(t) = integral of p from 0 to t. F(0) = 0 and F is continuous at
    /// every breakpoint by construction.
    PiecewisePoly antiderivative() const {
        std::vector<TPoly> segs;
        ParamPoly acc(syms_);
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            TPoly prim = segs_[i].antiderivative();
            ParamPoly shift = acc - prim.eval(breaks_[i]);
            prim += TPoly::constant(shift);
            acc = prim.eval(breaks_[i + 1]);
            segs.push_back(std::move(prim));
        }
        return PiecewisePoly(syms_, breaks_, std::move(segs));
    }

    /// Integral over [0,1], computed segmentwise.
    ParamPoly integrate01() const {
        ParamPoly acc(syms_);
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            TPoly prim = segs_[i].antiderivative();
            acc += prim.eval(breaks_[i + 1]) - prim.eval(breaks_[i]);
        }
        return acc;
    }

    PiecewisePoly derivative() const {
        return map_segments([](const TPoly& a) { return a.derivative(); });
    }

    /// Symbolic value at t in [0,1]. At an interior breakpoint the left
    /// segment is used.
    ParamPoly value_at(const Rational& t) const { return segs_[segment_index(t)].eval(t); }

    /// Value from the right-hand segment at an interior breakpoint.
    ParamPoly value_right(const Rational& t) const {
        check_domain(t);
        std::size_t i = 0;
        while (i + 1 < segs_.size() && breaks_[i + 1] <= t) ++i;
        return segs_[i].eval(t);
    }

    std::size_t segment_index(const Rational& t) const {
        check_domain(t);
        std::size_t i = 0;
        while (i + 1 < segs_.size() && breaks_[i + 1] < t) ++i;
        return i;
    }

    /// Exact value under a full assignment. Throws outside [0,1].
    Rational eval(const Rational& t, const Assignment& a) const { return value_at(t).eval(a); }

    /// True when adjacent segments agree exactly at every interior breakpoint.
    bool is_continuous() const {
        for (std::size_t i = 1; i < segs_.size(); ++i)
            if (!(segs_[i - 1].eval(breaks_[i]) == segs_[i].eval(breaks_[i]))) return false;
        return true;
    }

    PiecewisePoly substitute(const Assignment& a, bool partial = true) const {
        return map_segments([&](const TPoly& s) { return s.substitute(a, partial); });
    }

    PiecewisePoly embed(const Symbols& target) const {
        std::vector<TPoly> segs;
        for (const auto& s : segs_) segs.push_back(s.embed(target));
        return PiecewisePoly(target, breaks_, std::move(segs));
    }

    /// g(t) = p(1 - t).
    PiecewisePoly reflect() const {
        std::vector<Rational> br;
        std::vector<TPoly> segs;
        for (std::size_t i = breaks_.size(); i-- > 0;) br.push_back(Rational(1) - breaks_[i]);
        for (std::size_t i = segs_.size(); i-- > 0;) segs.push_back(segs_[i].affine_compose(Rational(1), Rational(-1)));
        return PiecewisePoly(syms_, std::move(br), std::move(segs));
    }

    /// Merges adjacent segments with identical polynomials.
    PiecewisePoly simplify() const {
        std::vector<Rational> br{breaks_.front()};
        std::vector<TPoly> segs{segs_.front()};
        for (std::size_t i = 1; i < segs_.size(); ++i) {
            if (segs_[i] == segs.back()) continue;
            br.push_back(breaks_[i]);
            segs.push_back(segs_[i]);
        }
        br.push_back(breaks_.back());
        return PiecewisePoly(syms_, std::move(br), std::move(segs));
    }

    friend bool operator==(const PiecewisePoly& p, const PiecewisePoly& q) {
        if (!same_symbols(p.syms_, q.syms_)) return false;
        return (p - q).is_zero();
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            if (i) s += "; ";
            s += "[" + breaks_[i].str() + "," + breaks_[i + 1].str() + "]: " + segs_[i].str();
        }
        return s;
    }

private:
    static void check_domain(const Rational& t) {
        if (t < Rational(0) || t > Rational(1)) throw std::domain_error("piecewise: t outside [0,1]");
    }

    Symbols syms_;
    std::vector<Rational> breaks_;
    std::vector<TPoly> segs_;
};

inline PiecewisePoly pw_from_poly(const std::vector<ParamPoly>& coeffs) { return PiecewisePoly::from_poly(coeffs); }
inline PiecewisePoly pl_from_slopes(const ParamPoly& intercept, const std::vector<ParamPoly>& slopes,
                                    const std::vector<Rational>& breaks) {
    return PiecewisePoly::pl_from_slopes(intercept, slopes, breaks);
}
inline PiecewisePoly pw_mul(const PiecewisePoly& p, const PiecewisePoly& q) { return p * q; }
inline PiecewisePoly pw_antiderivative(const PiecewisePoly& p) { return p.antiderivative(); }
inline ParamPoly pw_integrate01(const PiecewisePoly& p) { return p.integrate01(); }
inline Rational pw_eval(const PiecewisePoly& p, const Rational& t, const Assignment& a) { return p.eval(t, a); }

/// Breakpoints k/n for k = 1..n-1.
inline std::vector<Rational> uniform_breaks(int n) {
    std::vector<Rational> b;
    for (int k = 1; k < n; ++k) b.push_back(Rational::make(k, n));
    return b;
}

}  // namespace abelmult

#endif
