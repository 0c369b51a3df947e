#ifndef ABELMULT_EQUATION_TEXT_HPP
#define ABELMULT_EQUATION_TEXT_HPP

#include "abelmult/equation.hpp"
#include "abelmult/poly_parser.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace abelmult {

// Coefficient functions:
//   poly: <polynomial in t and parameters>
//   pl: intercept=<expr>; slopes=<expr>,<expr>,...; breaks=<q>,<q>,...
// A bare expression is read as `poly:`. Omitting `breaks` in a `pl:` form
// means the uniform grid k/n. The symbol t is reserved for time.
//
// Equation files hold `key: value` lines (`#` starts a comment):
//   family: cubic | quartic | scaled-quartic
//   A: <coefficient function>
//   B: <coefficient function>
//   lead: <expr>            (scaled-quartic only)
//   symbols: a, b, ...      (optional extra parameters)

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::pair<std::string, std::size_t>> split_keep_offset(std::string_view s, char sep) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(std::string(s.substr(start, i - start)), start);
            start = i + 1;
        }
    }
    return out;
}

/// Splits a polynomial over params+{t} into ascending t-coefficients.
inline std::vector<ParamPoly> split_by_t(const ParamPoly& p, const Symbols& params) {
    const auto& syms = *p.symbols();
    auto ti = symbol_index(syms, "t");
    std::vector<std::size_t> map(syms.size());
    for (std::size_t i = 0; i < syms.size(); ++i) map[i] = i == ti ? params->size() : symbol_index(*params, syms[i]);
    std::vector<ParamPoly> coeffs(1, ParamPoly(params));
    for (const auto& [m, c] : p.terms()) {
        std::size_t deg = ti < syms.size() ? m[ti] : 0;
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, ParamPoly(params));
        std::vector<Monomial::Exponent> e(params->size(), 0);
        for (std::size_t i = 0; i < syms.size(); ++i)
            if (i != ti && m[i] != 0) e[map[i]] = m[i];
        coeffs[deg].add_term(Monomial(std::move(e)), c);
    }
    return coeffs;
}

}  // namespace detail

/// Parameter names used by a coefficient-function or expression text.
inline SymbolList scan_parameters(std::string_view text) {
    SymbolList out;
    for (auto& n : scan_symbols(text))
        if (n != "t" && n != "poly" && n != "pl" && n != "intercept" && n != "slopes" && n != "breaks")
            out.push_back(n);
    return out;
}

inline PiecewisePoly parse_coefficient(std::string_view text, const Symbols& params, int line = 1, int col0 = 0) {
    std::string s(text);
    auto lead_ws = s.find_first_not_of(" \t");
    if (lead_ws == std::string::npos) throw ParseError("empty coefficient function", line, col0 + 1);
    auto colon = s.find(':');
    std::string kind = colon == std::string::npos ? "" : detail::trim(s.substr(0, colon));
    if (kind == "pl") {
        std::string body = s.substr(colon + 1);
        int bcol = col0 + static_cast<int>(colon) + 1;
        std::map<std::string, std::pair<std::string, int>> fields;
        for (auto& [part, off] : detail::split_keep_offset(body, ';')) {
            if (detail::trim(part).empty()) continue;
            auto eq = part.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected key=value in pl form", line, bcol + static_cast<int>(off) + 1);
            fields[detail::trim(part.substr(0, eq))] = {part.substr(eq + 1), bcol + static_cast<int>(off + eq) + 1};
        }
        for (const char* req : {"intercept", "slopes"})
            if (!fields.count(req)) throw ParseError(std::string("pl form missing '") + req + "'", line, bcol + 1);
        auto [itext, icol] = fields["intercept"];
        ParamPoly intercept = parse_poly(itext, params, line, icol);
        std::vector<ParamPoly> slopes;
        auto [stext, scol] = fields["slopes"];
        for (auto& [part, off] : detail::split_keep_offset(stext, ','))
            slopes.push_back(parse_poly(part, params, line, scol + static_cast<int>(off)));
        std::vector<Rational> breaks;
        if (fields.count("breaks") && !detail::trim(fields["breaks"].first).empty()) {
            auto [btext, bc] = fields["breaks"];
            for (auto& [part, off] : detail::split_keep_offset(btext, ',')) {
                try {
                    breaks.push_back(Rational::parse(detail::trim(part)));
                } catch (const std::exception& e) {
                    throw ParseError(e.what(), line, bc + static_cast<int>(off) + 1);
                }
            }
        } else {
            breaks = uniform_breaks(static_cast<int>(slopes.size()));
        }
        try {
            return PiecewisePoly::pl_from_slopes(intercept, slopes, breaks);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line, bcol + 1);
        }
    }
    std::string body = s;
    int bcol = col0;
    if (kind == "poly") {
        body = s.substr(colon + 1);
        bcol = col0 + static_cast<int>(colon) + 1;
    } else if (colon != std::string::npos) {
        throw ParseError("unknown coefficient form '" + kind + "'", line, col0 + 1);
    }
    SymbolList with_t(params->begin(), params->end());
    with_t.push_back("t");
    auto p = parse_poly(body, make_symbols(with_t), line, bcol);
    return PiecewisePoly::from_poly(detail::split_by_t(p, params));
}

/// Parses an equation file (see grammar above).
inline EquationSpec parse_equation(std::istream& in) {
    std::map<std::string, std::pair<std::string, std::pair<int, int>>> kv;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        if (detail::trim(raw).empty()) continue;
        auto colon = raw.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", line, 1);
        auto key = detail::trim(raw.substr(0, colon));
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'", line, 1);
        kv[key] = {raw.substr(colon + 1), {line, static_cast<int>(colon) + 1}};
    }
    for (const auto& [k, v] : kv)
        if (k != "family" && k != "A" && k != "B" && k != "lead" && k != "symbols")
            throw ParseError("unknown key '" + k + "'", v.second.first, 1);
    for (const char* req : {"family", "A", "B"})
        if (!kv.count(req)) throw ParseError(std::string("missing '") + req + "'", line + 1, 1);

    SymbolList names;
    for (const char* k : {"A", "B", "lead", "symbols"}) {
        if (!kv.count(k)) continue;
        auto p = scan_parameters(kv[k].first);
        names.insert(names.end(), p.begin(), p.end());
    }
    auto params = make_symbols(names);

    Family fam;
    try {
        fam = parse_family(detail::trim(kv["family"].first));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), kv["family"].second.first, 1);
    }
    auto field = [&](const char* k) {
        const auto& [text, pos] = kv[k];
        return parse_coefficient(text, params, pos.first, pos.second);
    };
    auto a = field("A");
    auto b = field("B");
    switch (fam) {
    case Family::cubic: return EquationSpec::cubic(std::move(a), std::move(b));
    case Family::quartic: return EquationSpec::quartic(std::move(a), std::move(b));
    case Family::scaled_quartic: {
        if (!kv.count("lead")) throw ParseError("scaled-quartic needs 'lead'", line + 1, 1);
        const auto& [text, pos] = kv["lead"];
        return EquationSpec::scaled_quartic(std::move(a), std::move(b), parse_poly(text, params, pos.first, pos.second));
    }
    }
    throw ParseError("unreachable", line, 1);
}

inline EquationSpec parse_equation(const std::string& text) {
    std::istringstream in(text);
    return parse_equation(in);
}

/// Parses "{a: 1, b: -2/3}" or "a=1,b=-2/3" into an assignment.
inline Assignment parse_assignment(std::string_view text) {
    std::string s = detail::trim(text);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw ParseError("expected '}'", 1, static_cast<int>(s.size()));
        s = s.substr(1, s.size() - 2);
    }
    Assignment out;
    for (auto& [part, off] : detail::split_keep_offset(s, ',')) {
        if (detail::trim(part).empty()) continue;
        auto sep = part.find_first_of(":=");
        if (sep == std::string::npos) throw ParseError("expected name:value", 1, static_cast<int>(off) + 1);
        auto name = detail::trim(part.substr(0, sep));
        try {
            out[name] = Rational::parse(detail::trim(part.substr(sep + 1)));
        } catch (const std::exception& e) {
            throw ParseError(e.what(), 1, static_cast<int>(off + sep) + 2);
        }
    }
    return out;
}

}  // namespace abelmult

#endif
