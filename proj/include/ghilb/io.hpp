/*
 * Copyright 2026 the ghilb authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Text form of polynomials: a deliberately small expression parser
// (identifiers, integer literals, +, -, *, ^, parentheses) and the matching
// printer. Printing uses balanced coefficient representatives (-3 instead of
// p-3), so parse(print(f)) == f.

#ifndef GHILB_IO_HPP
#define GHILB_IO_HPP

#include <cctype>
#include <string>

#include "polynomial.hpp"
#include "series.hpp"

namespace ghilb {

struct parse_error : std::invalid_argument {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace detail {

class PolyParser {
public:
    PolyParser(RingPtr ring, const std::string& text, MonomialOrder ord)
        : ring_(std::move(ring)), ord_(ord), text_(normalize(text)) {}

    Polynomial parse() {
        Polynomial f = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return f;
    }

private:
    // Map the UTF-8 minus sign to ASCII '-' so pasted display text parses.
    static std::string normalize(const std::string& s) {
        std::string out;
        out.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
                static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
                out.push_back('-');
                i += 2;
            } else {
                out.push_back(s[i]);
            }
        }
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool negate = false;
        skip_ws();
        if (eat('-')) negate = true;
        else eat('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            long long e = integer();
            if (e < 0) throw parse_error("negative exponent", pos_);
            Polynomial r = Polynomial::constant(ring_, 1, ord_);
            for (long long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!eat(')')) throw parse_error("missing ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, integer(), ord_);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int idx = ring_->var_index(name);
            if (idx < 0) throw parse_error("unknown variable '" + name + "'", start);
            return Polynomial::variable(ring_, idx, ord_);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected an integer", pos_);
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > (1LL << 40)) throw parse_error("integer literal too large", start);
        }
        return v;
    }

    RingPtr ring_;
    MonomialOrder ord_;
    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text,
                                   MonomialOrder ord = grevlex_order) {
    return detail::PolyParser(ring, text, ord).parse();
}

inline std::string print_monomial(const Ring& ring, const Monomial& m) {
    std::string out;
    for (int i = 0; i < ring.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var_name(i);
        if (m.e[i] >= 2) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

// Render N(z)/(1-z)^k compactly: "(3+z)/(1-z)^2", "(4z+z^2+6z^3-3z^4)/(1-z)^5".
// Zero numerator renders as "0"; exponent 0 drops the denominator; terms are
// ascending in z with unit coefficients and "^1" suppressed.
inline std::string format_series(const RationalSeries& s) {
    if (s.numerator.empty()) return "0";
    std::string num;
    for (std::size_t p = 0; p < s.numerator.size(); ++p) {
        long long c = s.numerator[p];
        if (c == 0) continue;
        bool neg = c < 0;
        long long mag = neg ? -c : c;
        if (num.empty()) {
            if (neg) num += "-";
        } else {
            num += neg ? "-" : "+";
        }
        if (p == 0) {
            num += std::to_string(mag);
        } else {
            if (mag != 1) num += std::to_string(mag);
            num += "z";
            if (p >= 2) num += "^" + std::to_string(p);
        }
    }
    if (num.empty()) return "0";
    if (s.denomExponent == 0) return num;
    std::string out = "(" + num + ")/(1-z)";
    if (s.denomExponent >= 2) out += "^" + std::to_string(s.denomExponent);
    return out;
}

inline std::string print_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = *f.ring();
    const long long p = ring.characteristic();
    std::string out;
    for (const Term& t : f.terms()) {
        // balanced representative of the coefficient
        long long c = t.c;
        if (c > p / 2) c -= p;
        bool neg = c < 0;
        long long mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = print_monomial(ring, t.m);
        if (mono.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += std::to_string(mag) + "*" + mono;
    }
    return out;
}

} // namespace ghilb

#endif // GHILB_IO_HPP
