#ifndef ABELMULT_VARIATIONAL_HPP
#define ABELMULT_VARIATIONAL_HPP

#include "abelmult/equation.hpp"
#include "abelmult/groebner.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelmult {

/// V_0..V_K; entries[0] is the zero function, entries[1] is 1.
struct VSequence {
    std::vector<PiecewisePoly> entries;
    std::vector<ParamPoly> boundary;  ///< V_k(1)

    int K() const { return static_cast<int>(entries.size()) - 1; }
    const PiecewisePoly& operator[](int k) const { return entries.at(static_cast<std::size_t>(k)); }
    const ParamPoly& at_one(int k) const { return boundary.at(static_cast<std::size_t>(k)); }
};

/// a_0..a_N of z(t,c) = sum a_n(t) c^n; entries[0] is unused (zero).
struct ASequence {
    std::vector<PiecewisePoly> entries;
    std::vector<ParamPoly> boundary;  ///< a_n(1)

    int N() const { return static_cast<int>(entries.size()) - 1; }
    const PiecewisePoly& operator[](int n) const { return entries.at(static_cast<std::size_t>(n)); }
    const ParamPoly& at_one(int n) const { return boundary.at(static_cast<std::size_t>(n)); }
};

using CoefficientMap = std::function<ParamPoly(const ParamPoly&)>;

/// Stepper for the linear recursion
///   V_k = -k * int_0^t [B V_{k-1} + A V_{k-2} + lead V_{k-3}] ds,
/// with V_1 = 1 and V_j = 0 for j <= 0 (the lead term is absent for cubics).
class VRecursion {
public:
    explicit VRecursion(const EquationSpec& eq) : eq_(eq) {
        const auto& syms = eq.symbols();
        seq_.entries.push_back(PiecewisePoly(syms));
        seq_.boundary.push_back(ParamPoly(syms));
        seq_.entries.push_back(PiecewisePoly::constant(ParamPoly::constant(Rational(1), syms)));
        seq_.boundary.push_back(ParamPoly::constant(Rational(1), syms));
    }

    int current() const { return seq_.K(); }

    /// Computes V_{k+1}. When `reduce` is set, every coefficient of the new
    /// entry is mapped through it (e.g. normal form modulo an ideal).
    const ParamPoly& step(const CoefficientMap& reduce = {}) {
        const int k = current() + 1;
        const auto& v1 = seq_.entries[static_cast<std::size_t>(k - 1)];
        PiecewisePoly rhs = eq_.B() * v1;
        if (k - 2 >= 1) rhs = rhs + eq_.A() * seq_.entries[static_cast<std::size_t>(k - 2)];
        if (eq_.has_quartic_term() && k - 3 >= 1)
            rhs = rhs + seq_.entries[static_cast<std::size_t>(k - 3)] * eq_.lead();
        PiecewisePoly vk = rhs.antiderivative() * Rational(-k);
        if (reduce) vk = vk.map_segments([&](const TPoly& s) { return s.map_coeffs(reduce); });
        ParamPoly b = vk.value_at(Rational(1));
        seq_.entries.push_back(std::move(vk));
        seq_.boundary.push_back(std::move(b));
        return seq_.boundary.back();
    }

    const VSequence& sequence() const { return seq_; }
    VSequence release() { return std::move(seq_); }

private:
    const EquationSpec& eq_;
    VSequence seq_;
};

inline VSequence v_sequence(const EquationSpec& eq, int K) {
    if (K < 2) throw std::invalid_argument("v_sequence: K must be at least 2");
    VRecursion r(eq);
    while (r.current() < K) r.step();
    return r.release();
}

/// a_n from  a_n' = lead * sum_{i+j+k+l=n} a_i a_j a_k a_l
///               + A * sum_{i+j+k=n} a_i a_j a_k + B * sum_{i+j=n} a_i a_j,
/// a_1 = 1, a_n(0) = 0. The convolution sums are accumulated as power sums.
inline ASequence a_sequence(const EquationSpec& eq, int N) {
    if (N < 2) throw std::invalid_argument("a_sequence: N must be at least 2");
    const auto& syms = eq.symbols();
    const PiecewisePoly zero(syms);
    std::vector<PiecewisePoly> a(static_cast<std::size_t>(N + 1), zero);
    std::vector<PiecewisePoly> p2(a), p3(a), p4(a);
    a[1] = PiecewisePoly::constant(ParamPoly::constant(Rational(1), syms));
    for (int n = 2; n <= N; ++n) {
        auto un = static_cast<std::size_t>(n);
        PiecewisePoly s2 = zero, s3 = zero, s4 = zero;
        for (int i = 1; i <= n - 1; ++i) s2 = s2 + a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(n - i)];
        for (int i = 1; i <= n - 2; ++i) s3 = s3 + a[static_cast<std::size_t>(i)] * p2[static_cast<std::size_t>(n - i)];
        if (eq.has_quartic_term())
            for (int i = 1; i <= n - 3; ++i) s4 = s4 + a[static_cast<std::size_t>(i)] * p3[static_cast<std::size_t>(n - i)];
        p2[un] = s2;
        p3[un] = s3;
        p4[un] = s4;
        PiecewisePoly rhs = eq.B() * s2 + eq.A() * s3;
        if (eq.has_quartic_term()) rhs = rhs + s4 * eq.lead();
        a[un] = rhs.antiderivative();
    }
    ASequence out;
    for (const auto& e : a) out.boundary.push_back(e.value_at(Rational(1)));
    out.entries = std::move(a);
    return out;
}

struct EtaOptions {
    MonomialOrdering ordering{};
    /// Reduce V_k(t) coefficients modulo the current ideal while recursing.
    /// Every eta is unchanged (normal forms are unique); it only keeps the
    /// intermediate polynomials small.
    bool reduce_coefficients = true;
    /// Generators placed in the ideal before eta_2 (branch conditions).
    std::vector<ParamPoly> seed;
    /// Stop once the ideal becomes <1>; later etas are then all zero.
    bool stop_when_trivial = true;
    const Budget* budget = nullptr;
    /// Called after each eta_k with (k, eta_k, G_k).
    std::function<void(int, const ParamPoly&, const GroebnerBasis&)> on_step;
};

/// eta_k = normal form of V_k(1) modulo the ideal <seed, eta_2, ..., eta_{k-1}>.
struct EtaSequence {
    int K = 0;
    std::vector<ParamPoly> etas;       ///< index k (0 and 1 unused)
    std::vector<GroebnerBasis> bases;  ///< bases[k] = G_k; bases[1] is the seed ideal
    int trivial_at = 0;                ///< first k with G_k = <1>, 0 if never

    const ParamPoly& eta(int k) const { return etas.at(static_cast<std::size_t>(k)); }
    const GroebnerBasis& basis(int k) const { return bases.at(static_cast<std::size_t>(k)); }
    /// Highest k actually computed.
    int computed() const { return static_cast<int>(etas.size()) - 1; }
};

inline EtaSequence eta_sequence(const EquationSpec& eq, int K, const EtaOptions& opt = {}) {
    if (K < 2) throw std::invalid_argument("eta_sequence: K must be at least 2");
    const auto& syms = eq.symbols();
    EtaSequence out;
    out.K = K;
    out.etas.assign(2, ParamPoly(syms));
    GroebnerBasis g = buchberger(std::span<const ParamPoly>(opt.seed), syms, opt.ordering, opt.budget);
    out.bases.assign(2, g);
    if (g.is_trivial()) out.trivial_at = 1;
    VRecursion rec(eq);
    for (int k = 2; k <= K; ++k) {
        if (opt.budget) opt.budget->check();
        if (out.trivial_at && opt.stop_when_trivial) break;
        CoefficientMap reduce;
        if (opt.reduce_coefficients && !g.is_zero_ideal())
            reduce = [&](const ParamPoly& c) { return g.reduce(c, opt.budget); };
        const ParamPoly& vk = rec.step(reduce);
        ParamPoly eta = g.reduce(vk, opt.budget);
        if (!eta.is_zero()) g = g.adjoin(eta, opt.budget);
        if (g.is_trivial() && !out.trivial_at) out.trivial_at = k;
        out.etas.push_back(eta);
        out.bases.push_back(g);
        if (opt.on_step) opt.on_step(k, out.etas.back(), g);
    }
    return out;
}

inline EtaSequence eta_sequence(const EquationSpec& eq, int K, const MonomialOrdering& ordering) {
    EtaOptions opt;
    opt.ordering = ordering;
    return eta_sequence(eq, K, opt);
}

enum class MultiplicityStatus { finite, center_up_to_k, unresolved };
enum class Stability { stable, unstable, undetermined };

inline std::string to_string(MultiplicityStatus s) {
    switch (s) {
    case MultiplicityStatus::finite: return "finite";
    case MultiplicityStatus::center_up_to_k: return "CENTER-UP-TO-K";
    case MultiplicityStatus::unresolved: return "UNRESOLVED";
    }
    return "?";
}

inline std::string to_string(Stability s) {
    switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::undetermined: return "undetermined";
    }
    return "?";
}

/// k is the multiplicity when status == finite, otherwise Kmax.
struct MultiplicityResult {
    MultiplicityStatus status = MultiplicityStatus::finite;
    int k = 0;
    Rational leading_value;  ///< V_k(1) at the point
    Stability stability = Stability::undetermined;
};

/// Sign rule: stable iff V_k(1) > 0. The same rule is applied to the quartic
/// families through a_k(1) = -V_k(1)/k.
inline Stability stability_from(const Rational& vk) {
    if (vk.sign() > 0) return Stability::stable;
    if (vk.sign() < 0) return Stability::unstable;
    return Stability::undetermined;
}

/// Multiplicity of z = 0 at a full parameter assignment.
inline MultiplicityResult multiplicity_at(const EquationSpec& eq, const Assignment& point, int Kmax = 12) {
    if (Kmax < 2) throw std::invalid_argument("multiplicity_at: Kmax must be at least 2");
    EquationSpec numeric = eq.substitute(point, false);
    VRecursion rec(numeric);
    for (int k = 2; k <= Kmax; ++k) {
        Rational v = rec.step().constant_value();
        if (!v.is_zero()) return {MultiplicityStatus::finite, k, v, stability_from(v)};
    }
    return {eq.has_quartic_term() ? MultiplicityStatus::unresolved : MultiplicityStatus::center_up_to_k, Kmax,
            Rational(0), Stability::undetermined};
}

}  // namespace abelmult

#endif
