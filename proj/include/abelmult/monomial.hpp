#ifndef ABELMULT_MONOMIAL_HPP
#define ABELMULT_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelmult {

using SymbolList = std::vector<std::string>;
/// Shared, immutable, alphabetically sorted symbol list. Every ParamPoly of a
/// computation points at the same list.
using Symbols = std::shared_ptr<const SymbolList>;

inline Symbols make_symbols(SymbolList names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return std::make_shared<const SymbolList>(std::move(names));
}

inline Symbols make_symbols(std::initializer_list<const char*> names) {
    SymbolList v;
    for (auto* n : names) v.emplace_back(n);
    return make_symbols(std::move(v));
}

inline bool same_symbols(const Symbols& a, const Symbols& b) {
    if (a == b) return true;
    if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
    return *a == *b;
}

inline Symbols union_symbols(const Symbols& a, const Symbols& b) {
    SymbolList v;
    if (a) v.insert(v.end(), a->begin(), a->end());
    if (b) v.insert(v.end(), b->begin(), b->end());
    return make_symbols(std::move(v));
}

inline std::size_t symbol_index(const SymbolList& syms, const std::string& name) {
    auto it = std::lower_bound(syms.begin(), syms.end(), name);
    if (it == syms.end() || *it != name) return syms.size();
    return static_cast<std::size_t>(it - syms.begin());
}

/// Dense exponent vector over a symbol list, with cached total degree.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {
        for (auto x : e_) deg_ += x;
    }

    static Monomial unit(std::size_t nvars, std::size_t var, Exponent power = 1) {
        Monomial m(nvars);
        m.e_[var] = power;
        m.deg_ = power;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    const std::vector<Exponent>& exponents() const { return e_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = static_cast<Exponent>(a.e_[i] + b.e_[i]);
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    /// True when a divides b.
    friend bool divides(const Monomial& a, const Monomial& b) {
        if (a.deg_ > b.deg_) return false;
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > b.e_[i]) return false;
        return true;
    }

    /// b / a; requires divides(a, b).
    friend Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r(b.e_.size());
        for (std::size_t i = 0; i < b.e_.size(); ++i) r.e_[i] = static_cast<Exponent>(b.e_[i] - a.e_[i]);
        r.deg_ = b.deg_ - a.deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    /// Storage order only (lexicographic on exponent vectors).
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    /// Graded reverse lexicographic comparison with symbol 0 largest;
    /// returns true when a > b.
    friend bool grevlex_greater(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ > b.deg_;
        for (std::size_t i = a.e_.size(); i-- > 0;)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
        return false;
    }

    std::string str(const SymbolList& syms) const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += syms[i];
            if (e_[i] > 1) s += '^' + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    std::vector<Exponent> e_;
    unsigned deg_ = 0;
};

}  // namespace abelmult

#endif
