#ifndef ABELMULT_PARAM_POLY_HPP
#define ABELMULT_PARAM_POLY_HPP

#include "abelmult/monomial.hpp"
#include "abelmult/rational.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abelmult {

using Assignment = std::map<std::string, Rational>;

/// Multivariate polynomial with exact rational coefficients over a fixed,
/// alphabetically ordered symbol list. No zero coefficients are stored; the
/// zero polynomial is the empty map.
class ParamPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    ParamPoly() : syms_(make_symbols(SymbolList{})) {}
    explicit ParamPoly(Symbols syms) : syms_(std::move(syms)) {
        if (!syms_) syms_ = make_symbols(SymbolList{});
    }

    static ParamPoly constant(const Rational& c, Symbols syms) {
        ParamPoly p(std::move(syms));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.nvars()), c);
        return p;
    }

    static ParamPoly variable(const std::string& name, Symbols syms) {
        ParamPoly p(std::move(syms));
        auto idx = symbol_index(*p.syms_, name);
        if (idx == p.nvars()) throw std::invalid_argument("param_poly: unknown symbol '" + name + "'");
        p.terms_.emplace(Monomial::unit(p.nvars(), idx), Rational(1));
        return p;
    }

    static ParamPoly from_terms(Symbols syms, TermMap terms) {
        ParamPoly p(std::move(syms));
        for (auto& [m, c] : terms) {
            if (m.size() != p.nvars()) throw std::invalid_argument("param_poly: exponent vector length mismatch");
            if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        }
        return p;
    }

    const Symbols& symbols() const { return syms_; }
    std::size_t nvars() const { return syms_->size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    /// Constant term value; throws when the polynomial is not constant.
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("param_poly: not a constant: " + str());
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
        return d;
    }

    /// Names of symbols with a nonzero exponent somewhere in the polynomial.
    SymbolList used_symbols() const {
        SymbolList out;
        for (std::size_t i = 0; i < nvars(); ++i)
            if (degree_in(i) > 0) out.push_back((*syms_)[i]);
        return out;
    }

    ParamPoly operator-() const {
        ParamPoly r(syms_);
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    ParamPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const Rational& s) { return a *= s; }
    friend ParamPoly operator*(const Rational& s, ParamPoly a) { return a *= s; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        a.check_same(b);
        ParamPoly r(a.syms_);
        if (a.is_zero() || b.is_zero()) return r;
        if (b.is_constant()) return a * b.constant_value();
        if (a.is_constant()) return b * a.constant_value();
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly pow(unsigned e) const {
        ParamPoly r = constant(Rational(1), syms_);
        ParamPoly b = *this;
        while (e != 0) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e != 0) b *= b;
        }
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return same_symbols(a.syms_, b.syms_) && a.terms_ == b.terms_;
    }

    /// Substitutes rational values. With partial == false every symbol must be
    /// assigned and the result is a constant (still over the same symbol list).
    /// Assigned names must belong to the symbol list.
    ParamPoly substitute(const Assignment& values, bool partial = true) const {
        std::vector<const Rational*> val(nvars(), nullptr);
        for (const auto& [name, v] : values) {
            auto idx = symbol_index(*syms_, name);
            if (idx == nvars()) throw std::invalid_argument("param_poly: unknown symbol '" + name + "' in assignment");
            val[idx] = &v;
        }
        if (!partial)
            for (std::size_t i = 0; i < nvars(); ++i)
                if (!val[i]) throw std::invalid_argument("param_poly: symbol '" + (*syms_)[i] + "' left unassigned");
        ParamPoly r(syms_);
        for (const auto& [m, c] : terms_) {
            Rational coeff = c;
            std::vector<Monomial::Exponent> e = m.exponents();
            for (std::size_t i = 0; i < nvars(); ++i) {
                if (val[i] && e[i] != 0) {
                    coeff *= val[i]->pow(e[i]);
                    e[i] = 0;
                }
            }
            r.add_term(Monomial(std::move(e)), coeff);
        }
        return r;
    }

    /// Full evaluation to a rational.
    Rational eval(const Assignment& values) const { return substitute(values, false).constant_value(); }

    /// Replaces symbols by polynomials (all over the symbol list `target`).
    /// Symbols not mapped must also exist in `target`.
    ParamPoly compose(const std::map<std::string, ParamPoly>& images, const Symbols& target) const {
        std::vector<ParamPoly> img;
        img.reserve(nvars());
        for (const auto& name : *syms_) {
            auto it = images.find(name);
            if (it != images.end()) {
                if (!same_symbols(it->second.symbols(), target))
                    throw std::invalid_argument("param_poly: compose image over wrong symbols");
                img.push_back(it->second);
            } else {
                img.push_back(variable(name, target));
            }
        }
        ParamPoly r(target);
        for (const auto& [m, c] : terms_) {
            ParamPoly t = constant(c, target);
            for (std::size_t i = 0; i < nvars(); ++i)
                if (m[i] != 0) t *= img[i].pow(m[i]);
            r += t;
        }
        return r;
    }

    /// Re-expresses the polynomial over a superset symbol list.
    ParamPoly embed(const Symbols& target) const {
        if (same_symbols(syms_, target)) return ParamPoly::from_terms(target, terms_);
        std::vector<std::size_t> map(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) {
            map[i] = symbol_index(*target, (*syms_)[i]);
            if (map[i] == target->size())
                throw std::invalid_argument("param_poly: cannot embed, symbol '" + (*syms_)[i] + "' missing");
        }
        ParamPoly r(target);
        for (const auto& [m, c] : terms_) {
            std::vector<Monomial::Exponent> e(target->size(), 0);
            for (std::size_t i = 0; i < nvars(); ++i) e[map[i]] = m[i];
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

    /// Terms sorted by descending graded reverse lexicographic order.
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const {
        std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return grevlex_greater(x.first, y.first); });
        return v;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : sorted_terms()) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                s += a.str();
            } else {
                if (!a.is_one()) s += a.str() + "*";
                s += m.str(*syms_);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    void check_same(const ParamPoly& o) const {
        if (!same_symbols(syms_, o.syms_)) throw std::invalid_argument("param_poly: symbol list mismatch");
    }

    Symbols syms_;
    TermMap terms_;
};

inline ParamPoly poly_add(const ParamPoly& p, const ParamPoly& q) { return p + q; }
inline ParamPoly poly_mul(const ParamPoly& p, const ParamPoly& q) { return p * q; }
inline ParamPoly poly_substitute(const ParamPoly& p, const Assignment& a, bool partial) {
    return p.substitute(a, partial);
}

}  // namespace abelmult

#endif
