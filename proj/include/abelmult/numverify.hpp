#ifndef ABELMULT_NUMVERIFY_HPP
#define ABELMULT_NUMVERIFY_HPP

#include "abelmult/equation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelmult {

/// Floating-point parameter values (used where exact points are irrational).
template <class Real>
using RealAssignment = std::map<std::string, Real>;

template <class Real>
Real eval_real(const ParamPoly& p, const RealAssignment<Real>& values) {
    const auto& syms = *p.symbols();
    std::vector<Real> v(syms.size(), Real(0));
    std::vector<bool> have(syms.size(), false);
    for (const auto& [name, x] : values) {
        auto i = symbol_index(syms, name);
        if (i < syms.size()) {
            v[i] = x;
            have[i] = true;
        }
    }
    Real acc = 0;
    for (const auto& [m, c] : p.terms()) {
        Real term = static_cast<Real>(c.to_long_double());
        for (std::size_t i = 0; i < syms.size(); ++i) {
            if (m[i] == 0) continue;
            if (!have[i]) throw std::invalid_argument("numverify: no value for symbol '" + syms[i] + "'");
            for (unsigned e = 0; e < m[i]; ++e) term *= v[i];
        }
        acc += term;
    }
    return acc;
}

/// Coefficients of z' = lead z^4 + A z^3 + B z^2 frozen at a parameter point.
template <class Real = long double>
class NumericEquation {
public:
    NumericEquation(const EquationSpec& eq, const RealAssignment<Real>& point) {
        lead_ = eq.has_quartic_term() ? eval_real(eq.lead(), point) : Real(0);
        auto br = PiecewisePoly::merge_breaks(eq.A().breakpoints(), eq.B().breakpoints());
        auto a = eq.A().refine(br), b = eq.B().refine(br);
        for (const auto& t : br) breaks_.push_back(static_cast<Real>(t.to_long_double()));
        for (std::size_t i = 0; i + 1 < br.size(); ++i) {
            a_.push_back(coeffs(a.segments()[i], point));
            b_.push_back(coeffs(b.segments()[i], point));
        }
    }

    NumericEquation(const EquationSpec& eq, const Assignment& point) : NumericEquation(eq, to_real(point)) {}

    const std::vector<Real>& breaks() const { return breaks_; }
    Real lead() const { return lead_; }

    /// Right-hand side on segment i (the segment's own polynomial, also at its endpoints).
    Real rhs(std::size_t seg, Real t, Real z) const {
        const Real z2 = z * z;
        return ((lead_ * z + horner(a_[seg], t)) * z + horner(b_[seg], t)) * z2;
    }

    std::size_t segments() const { return a_.size(); }

    static RealAssignment<Real> to_real(const Assignment& p) {
        RealAssignment<Real> r;
        for (const auto& [k, v] : p) r[k] = static_cast<Real>(v.to_long_double());
        return r;
    }

private:
    static std::vector<Real> coeffs(const TPoly& s, const RealAssignment<Real>& point) {
        std::vector<Real> c;
        for (const auto& x : s.coeffs()) c.push_back(eval_real<Real>(x, point));
        return c;
    }
    static Real horner(const std::vector<Real>& c, Real t) {
        Real r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * t + c[i];
        return r;
    }

    Real lead_ = 0;
    std::vector<Real> breaks_;
    std::vector<std::vector<Real>> a_, b_;
};

template <class Real = long double>
struct FlowResult {
    Real value = 0;  ///< z(1, c); meaningless when escaped
    bool escaped = false;
    long steps = 0;
};

struct FlowOptions {
    long double step = 1.0L / 2048;
    long double escape = 1e6L;
};

class EscapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class Real>
bool rk4_segment(const NumericEquation<Real>& eq, std::size_t seg, Real t0, Real t1, Real& z, long double step,
                 long double escape, long& steps) {
    if (!(t1 > t0)) return true;
    const long n = std::max(1L, static_cast<long>(std::ceil(static_cast<long double>(t1 - t0) / step - 1e-9L)));
    const Real h = (t1 - t0) / static_cast<Real>(n);
    for (long j = 0; j < n; ++j) {
        const Real t = t0 + h * static_cast<Real>(j);
        const Real k1 = eq.rhs(seg, t, z);
        const Real k2 = eq.rhs(seg, t + h / 2, z + h / 2 * k1);
        const Real k3 = eq.rhs(seg, t + h / 2, z + h / 2 * k2);
        const Real k4 = eq.rhs(seg, t + h, z + h * k3);
        z += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        ++steps;
        if (!std::isfinite(static_cast<long double>(z)) || std::fabs(static_cast<long double>(z)) > escape) return false;
    }
    return true;
}

}  // namespace detail

/// Classical RK4 on [0,1] from z(0) = c. Each coefficient segment is split into
/// equal steps no longer than `step`, so every breakpoint is a grid point.
/// Extra alignment times (e.g. sampling instants) may be supplied; z at those
/// times is written to `samples`.
template <class Real>
FlowResult<Real> flow(const NumericEquation<Real>& eq, Real c, const FlowOptions& opt = {},
                      const std::vector<Real>& sample_times = {}, std::vector<Real>* samples = nullptr) {
    if (!(opt.step > 0)) throw std::invalid_argument("flow: step must be positive");
    FlowResult<Real> r;
    Real z = c;
    std::vector<Real> stops(sample_times);
    std::sort(stops.begin(), stops.end());
    if (samples) samples->assign(sample_times.size(), std::numeric_limits<Real>::quiet_NaN());
    auto record = [&](Real t) {
        if (!samples) return;
        for (std::size_t i = 0; i < sample_times.size(); ++i)
            if (sample_times[i] == t) (*samples)[i] = z;
    };
    record(Real(0));
    const auto& br = eq.breaks();
    std::size_t si = 0;
    for (std::size_t seg = 0; seg < eq.segments(); ++seg) {
        Real t = br[seg];
        const Real end = br[seg + 1];
        while (si < stops.size() && stops[si] <= t) ++si;
        while (true) {
            Real next = end;
            if (si < stops.size() && stops[si] < end) next = stops[si];
            if (!detail::rk4_segment(eq, seg, t, next, z, opt.step, opt.escape, r.steps)) {
                r.escaped = true;
                return r;
            }
            t = next;
            record(t);
            if (t == end) break;
            ++si;
        }
    }
    r.value = z;
    return r;
}

/// q(c) = z(1,c) - c; throws EscapeError on blow-up.
template <class Real>
Real displacement(const NumericEquation<Real>& eq, Real c, const FlowOptions& opt = {}) {
    if (c == Real(0)) return Real(0);
    auto r = flow(eq, c, opt);
    if (r.escaped) throw EscapeError("displacement: solution escaped before t = 1 (c = " +
                                     std::to_string(static_cast<double>(c)) + ")");
    return r.value - c;
}

struct LadderOptions {
    int min_exponent = 5;   ///< largest |c| = 2^-min_exponent
    int max_exponent = 12;  ///< smallest |c| = 2^-max_exponent
    bool both_signs = true;
    bool richardson = true;  ///< combine steps h and h/2 to cancel the h^4 error
    long double step = 1.0L / 2048;
    long double escape = 1e6L;
    /// A point counts as signal when |q| exceeds this multiple of its noise estimate.
    long double signal_ratio = 16;
};

struct LadderPoint {
    long double c = 0;
    long double q = 0;
    long double noise = 0;
    bool escaped = false;
    bool signal = false;
};

enum class NumericVerdict { finite, center_like };

struct NumericMultiplicity {
    NumericVerdict verdict = NumericVerdict::finite;
    int k = 0;
    long double slope = 0;  ///< raw fitted slope of log|q| against log|c|
    long double coeff = 0;  ///< fitted a_k(1)
    std::vector<LadderPoint> points;
};

inline std::string to_string(NumericVerdict v) { return v == NumericVerdict::finite ? "finite" : "CENTER-LIKE"; }

template <class Real>
std::vector<LadderPoint> ladder(const NumericEquation<Real>& eq, const LadderOptions& opt = {}) {
    std::vector<LadderPoint> out;
    for (int e = opt.min_exponent; e <= opt.max_exponent; ++e) {
        for (int sgn : {1, -1}) {
            if (sgn < 0 && !opt.both_signs) continue;
            LadderPoint p;
            p.c = sgn * std::ldexp(1.0L, -e);
            FlowOptions f1{opt.step, opt.escape}, f2{opt.step / 2, opt.escape};
            auto r1 = flow(eq, static_cast<Real>(p.c), f1);
            auto r2 = flow(eq, static_cast<Real>(p.c), f2);
            if (r1.escaped || r2.escaped) {
                p.escaped = true;
                out.push_back(p);
                continue;
            }
            const long double q1 = static_cast<long double>(r1.value - static_cast<Real>(p.c));
            const long double q2 = static_cast<long double>(r2.value - static_cast<Real>(p.c));
            const long double qr = opt.richardson ? (16 * q2 - q1) / 15 : q2;
            const long double ulp = 64 * std::numeric_limits<long double>::epsilon() * std::fabs(p.c) *
                                    std::sqrt(static_cast<long double>(r2.steps));
            p.q = qr;
            p.noise = std::max(std::fabs(qr - q2), ulp);
            p.signal = std::fabs(p.q) > opt.signal_ratio * p.noise;
            out.push_back(p);
        }
    }
    return out;
}

/// Fits log|q| against log|c| over the ladder; k is the rounded slope and
/// coeff the intercept of q/c^k = a_k + a_{k+1} c (least squares). Reports
/// CENTER-LIKE when no ladder point rises above its noise estimate.
template <class Real>
NumericMultiplicity estimate_multiplicity(const NumericEquation<Real>& eq, const LadderOptions& opt = {}) {
    NumericMultiplicity res;
    res.points = ladder(eq, opt);
    std::vector<const LadderPoint*> good;
    bool any_finite = false;
    for (const auto& p : res.points) {
        if (p.escaped) continue;
        any_finite = true;
        if (p.signal) good.push_back(&p);
    }
    if (!any_finite) throw EscapeError("estimate_multiplicity: every ladder point escaped");
    if (good.empty()) {
        res.verdict = NumericVerdict::center_like;
        return res;
    }
    std::vector<long double> mags;
    for (const auto* p : good) mags.push_back(std::fabs(p->c));
    std::sort(mags.begin(), mags.end());
    if (mags.front() == mags.back()) throw std::runtime_error("estimate_multiplicity: need two distinct |c| with signal");
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto* p : good) {
        long double x = std::log(std::fabs(p->c)), y = std::log(std::fabs(p->q));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const long double n = static_cast<long double>(good.size());
    res.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    res.k = static_cast<int>(std::lround(res.slope));
    // q / c^k = a_k + a_{k+1} c
    long double tx = 0, ty = 0, txx = 0, txy = 0;
    for (const auto* p : good) {
        long double y = p->q / std::pow(p->c, static_cast<long double>(res.k));
        tx += p->c;
        ty += y;
        txx += p->c * p->c;
        txy += p->c * y;
    }
    const long double det = n * txx - tx * tx;
    res.coeff = det != 0 ? (txx * ty - tx * txy) / det : ty / n;
    return res;
}

inline void write_csv(std::ostream& os, const std::vector<LadderPoint>& pts) {
    os << "c,q,noise,escaped,signal\n";
    os.precision(21);
    for (const auto& p : pts)
        os << static_cast<double>(p.c) << ',' << p.q << ',' << p.noise << ',' << p.escaped << ',' << p.signal << '\n';
}

}  // namespace abelmult

#endif
