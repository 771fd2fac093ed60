#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "thomaf/errors.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// Grammar (whitespace free between any two tokens):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' nat]
//   base     := rational | variable | '(' expr ')'
//   rational := nat ['/' nat]
//   variable := [A-Za-z_][A-Za-z0-9_]*
// Implicit multiplication ("2x") is rejected; every product needs '*'.
namespace detail {

class poly_parser {
  public:
    poly_parser(const std::string& text, const vars_t& vars) : text_(text), vars_(vars) {}

    polynomial run() {
        skip_ws();
        polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

  private:
    polynomial expr() {
        bool neg = false;
        if (peek('+') || peek('-')) neg = (take() == '-');
        polynomial p = term();
        if (neg) p = -p;
        skip_ws();
        while (peek('+') || peek('-')) {
            bool minus = (take() == '-');
            polynomial t = term();
            if (minus)
                p -= t;
            else
                p += t;
            skip_ws();
        }
        return p;
    }

    polynomial term() {
        polynomial p = factor();
        skip_ws();
        while (peek('*')) {
            take();
            p *= factor();
            skip_ws();
        }
        return p;
    }

    polynomial factor() {
        polynomial b = base();
        skip_ws();
        if (peek('^')) {
            take();
            skip_ws();
            unsigned long e = natural();
            if (e > 4096) fail("exponent too large");
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            take();
            polynomial p = expr();
            skip_ws();
            if (!peek(')')) fail("expected ')'");
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            rat num(static_cast<long>(natural()));
            skip_ws();
            if (peek('/')) {
                take();
                skip_ws();
                unsigned long d = natural();
                if (d == 0) fail("zero denominator");
                num /= rat(static_cast<long>(d));
            }
            return polynomial::constant(vars_.size(), num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = identifier();
            auto idx = var_index(vars_, name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return polynomial::variable(vars_.size(), *idx);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    unsigned long natural() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        unsigned long v = 0;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (++digits > 18) fail("number too large");
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    std::string identifier() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& why) const { throw parse_error(why, pos_); }

    const std::string& text_;
    const vars_t& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline polynomial parse_polynomial(const std::string& text, const vars_t& vars) {
    return detail::poly_parser(text, vars).run();
}

inline std::vector<polynomial> parse_polynomials(const std::vector<std::string>& texts,
                                                 const vars_t& vars) {
    std::vector<polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_polynomial(t, vars));
    return out;
}

}  // namespace thomaf
