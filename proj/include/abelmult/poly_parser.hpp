#ifndef ABELMULT_POLY_PARSER_HPP
#define ABELMULT_POLY_PARSER_HPP

#include "abelmult/param_poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abelmult {

/// Syntax error with a 1-based line/column into the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | symbol | '(' expr ')'
// Division is only allowed by a nonzero constant.
class PolyParser {
public:
    PolyParser(std::string_view text, Symbols syms, int line, int col0)
        : s_(text), syms_(std::move(syms)), line_(line), col0_(col0) {}

    ParamPoly parse() {
        auto p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

    /// Identifier set of the text (used to infer a symbol list).
    static SymbolList scan_symbols(std::string_view text) {
        SymbolList out;
        for (std::size_t i = 0; i < text.size();) {
            if (std::islower(static_cast<unsigned char>(text[i]))) {
                std::size_t j = i;
                while (j < text.size() && std::islower(static_cast<unsigned char>(text[j]))) ++j;
                out.emplace_back(text.substr(i, j - i));
                i = j;
            } else {
                ++i;
            }
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col0_ + static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamPoly expr() {
        auto p = term();
        for (;;) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    ParamPoly term() {
        auto p = unary();
        for (;;) {
            if (accept('*')) {
                p *= unary();
            } else if (accept('/')) {
                auto at = pos_;
                auto d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant");
                }
                p *= d.constant_value().inverse();
            } else {
                return p;
            }
        }
    }

    ParamPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    ParamPoly power() {
        auto p = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            auto e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 1000) fail("exponent too large");
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    ParamPoly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ParamPoly::constant(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))), syms_);
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (symbol_index(*syms_, name) == syms_->size()) {
                pos_ = start;
                fail("unknown symbol '" + name + "'");
            }
            return ParamPoly::variable(name, syms_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    Symbols syms_;
    std::size_t pos_ = 0;
    int line_;
    int col0_;
};

}  // namespace detail

/// Parses a polynomial over the given symbol list.
inline ParamPoly parse_poly(std::string_view text, const Symbols& syms, int line = 1, int column_offset = 0) {
    return detail::PolyParser(text, syms, line, column_offset).parse();
}

/// Parses a polynomial, inferring the (alphabetical) symbol list from the text.
inline ParamPoly parse_poly(std::string_view text) {
    return parse_poly(text, make_symbols(detail::PolyParser::scan_symbols(text)));
}

inline SymbolList scan_symbols(std::string_view text) { return detail::PolyParser::scan_symbols(text); }

}  // namespace abelmult

#endif
