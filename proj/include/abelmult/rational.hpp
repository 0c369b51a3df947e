#ifndef ABELMULT_RATIONAL_HPP
#define ABELMULT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace abelmult {

/// Exact rational number in canonical form: positive denominator, reduced,
/// zero stored as 0/1. Backed by GMP's mpq.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// n/d in lowest terms. Throws std::domain_error when d == 0.
    static Rational make(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        mpq_class q;
        q.get_num() = n;
        q.get_den() = d;
        q.canonicalize();
        return Rational(std::move(q), Canonical{});
    }

    /// Accepts "n", "-n" or "n/d" (decimal digits only).
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        auto valid_int = [](const std::string& x) {
            std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
            if (i >= x.size()) return false;
            for (; i < x.size(); ++i)
                if (x[i] < '0' || x[i] > '9') return false;
            return true;
        };
        auto strip_plus = [](std::string x) {
            if (!x.empty() && x[0] == '+') x.erase(0, 1);
            return x;
        };
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw std::invalid_argument("rational: bad literal '" + s + "'");
            return Rational(mpz_class(strip_plus(s)));
        }
        auto ns = s.substr(0, slash);
        auto ds = s.substr(slash + 1);
        if (!valid_int(ns) || !valid_int(ds))
            throw std::invalid_argument("rational: bad literal '" + s + "'");
        return make(mpz_class(strip_plus(ns)), mpz_class(strip_plus(ds)));
    }

    const mpq_class& get() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_), Canonical{}); }
    Rational abs() const { return Rational(mpq_class(::abs(v_)), Canonical{}); }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("rational: inverse of zero");
        return Rational(mpq_class(1 / v_), Canonical{});
    }
    Rational pow(unsigned e) const {
        Rational r(1);
        Rational b = *this;
        while (e != 0) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e != 0) b *= b;
        }
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    /// Full long-double precision conversion (mpq::get_d stops at double).
    long double to_long_double() const {
        return mpz_to_ld(v_.get_num()) / mpz_to_ld(v_.get_den());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct Canonical {};
    Rational(mpq_class v, Canonical) : v_(std::move(v)) {}

    static long double mpz_to_ld(const mpz_class& z) {
        // Top 128 bits carry more than enough precision for a 64-bit mantissa.
        std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
        mpz_class a = ::abs(z);
        long shift = 0;
        if (bits > 128) {
            shift = static_cast<long>(bits - 128);
            mpz_class t;
            mpz_fdiv_q_2exp(t.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
            a = t;
        }
        long double r = 0.0L;
        mpz_class limb;
        for (int i = 3; i >= 0; --i) {
            mpz_class t;
            mpz_fdiv_q_2exp(t.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(32 * i));
            mpz_fdiv_r_2exp(limb.get_mpz_t(), t.get_mpz_t(), 32);
            r = r * 4294967296.0L + static_cast<long double>(limb.get_ui());
        }
        r = std::ldexp(r, static_cast<int>(shift));
        return sgn(z) < 0 ? -r : r;
    }

    mpq_class v_{0};
};

/// Canonical n/d. Throws std::domain_error on d == 0.
inline Rational rat_make(long long n, long long d) {
    return Rational::make(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
}

}  // namespace abelmult

#endif
