#ifndef ABELMULT_TEST_SUPPORT_HPP
#define ABELMULT_TEST_SUPPORT_HPP

#include "abelmult/abelmult.hpp"

#include <random>

namespace abelmult::test {

inline ParamPoly P(const std::string& text, const Symbols& syms) { return parse_poly(text, syms); }

/// Random polynomial with small integer coefficients.
inline ParamPoly random_poly(std::mt19937_64& rng, const Symbols& syms, unsigned max_degree, int max_terms) {
    std::uniform_int_distribution<int> coef(-5, 5), nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    ParamPoly p(syms);
    for (int i = nterms(rng); i > 0; --i) {
        std::vector<Monomial::Exponent> e(syms->size(), 0);
        unsigned budget = deg(rng);
        for (unsigned j = 0; j < budget; ++j) e[std::uniform_int_distribution<std::size_t>(0, syms->size() - 1)(rng)]++;
        int c = coef(rng);
        if (c != 0) p.add_term(Monomial(std::move(e)), Rational(c));
    }
    return p;
}

}  // namespace abelmult::test

#endif
