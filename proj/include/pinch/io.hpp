#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/poly.hpp"

namespace pinch {

// --- printing ---------------------------------------------------------

inline std::string str(const Monomial& m, const Ring& ring) {
    std::string out;
    for (int i = 0; i < m.arity(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.varName(i);
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out.empty() ? "1" : out;
}

// Canonical form: descending grevlex, `3/2*x^2*y - y + 1`, extension
// coefficients parenthesized as `(-1 - s)*y0`.
inline std::string str(const Polynomial& f) {
    if (f.isZero()) return "0";
    const Polynomial g = f.withOrder(MonomialOrder::grevlex());
    const FieldSpec& field = g.ring()->field();
    std::string out;
    for (const Term& t : g.terms()) {
        const bool first = out.empty();
        const std::string mono = str(t.mono, *g.ring());
        if (field.isRationalValue(t.coeff)) {
            const Rational r = field.rationalValue(t.coeff);
            const bool neg = r < 0;
            const Rational mag = neg ? Rational(-r) : r;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (t.mono.isOne()) {
                out += str(mag);
            } else {
                if (mag != 1) out += str(mag) + "*";
                out += mono;
            }
        } else {
            if (!first) out += " + ";
            out += "(" + field.str(t.coeff) + ")";
            if (!t.mono.isOne()) out += "*" + mono;
        }
    }
    return out;
}

// --- parsing ----------------------------------------------------------

namespace detail {

struct Token {
    enum class Kind { Number, Name, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    const Token& peek() {
        if (!cached_) {
            cur_ = lex();
            cached_ = true;
        }
        return cur_;
    }

    Token next() {
        Token t = peek();
        cached_ = false;
        return t;
    }

    bool atEnd() { return peek().kind == Token::Kind::End; }

    bool trySymbol(char c) {
        if (peek().kind == Token::Kind::Symbol && peek().text[0] == c) {
            next();
            return true;
        }
        return false;
    }

private:
    Token lex() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) return Token{};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return Token{Token::Kind::Number, src_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return Token{Token::Kind::Name, src_.substr(start, pos_ - start)};
        }
        ++pos_;
        return Token{Token::Kind::Symbol, std::string(1, c)};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token cur_;
    bool cached_ = false;
};

inline Int parseIntToken(Lexer& lex) {
    const Token t = lex.next();
    if (t.kind != Token::Kind::Number) throw ParseError("expected a number, got '" + t.text + "'");
    return Int(t.text);
}

inline Rational parseRationalTail(Lexer& lex) {
    const Int num = parseIntToken(lex);
    if (lex.trySymbol('/')) {
        const Int den = parseIntToken(lex);
        return makeRational(num, den);
    }
    return Rational(num);
}

}  // namespace detail

inline Rational parseRational(const std::string& text) {
    detail::Lexer lex(text);
    const bool neg = lex.trySymbol('-');
    Rational r = detail::parseRationalTail(lex);
    if (!lex.atEnd()) throw ParseError("trailing input after rational: '" + text + "'");
    return neg ? Rational(-r) : r;
}

// A field element literal: a rational over Q, or a polynomial in s of degree
// below the extension degree, e.g. `-1 - s` or `1/2 + 3*s^2`.
inline FieldElement parseFieldElement(const std::string& text, const FieldSpec& spec) {
    detail::Lexer lex(text);
    std::vector<Rational> coeffs;
    auto addCoeff = [&coeffs](int power, const Rational& c) {
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += c;
    };
    bool first = true;
    while (!lex.atEnd()) {
        bool neg = false;
        if (lex.trySymbol('-')) {
            neg = true;
        } else if (lex.trySymbol('+')) {
            if (first) throw ParseError("unexpected leading '+'");
        } else if (!first) {
            throw ParseError("expected '+' or '-' in field element '" + text + "'");
        }
        first = false;

        Rational c(1);
        bool haveNumber = false;
        if (lex.peek().kind == detail::Token::Kind::Number) {
            c = detail::parseRationalTail(lex);
            haveNumber = true;
            lex.trySymbol('*');
        }
        int power = 0;
        if (lex.peek().kind == detail::Token::Kind::Name) {
            const detail::Token t = lex.next();
            if (t.text != "s" || !spec.isExtension())
                throw ParseError("unexpected symbol '" + t.text + "' in field element");
            power = 1;
            if (lex.trySymbol('^')) power = static_cast<int>(detail::parseIntToken(lex));
        } else if (!haveNumber) {
            throw ParseError("expected a term in field element '" + text + "'");
        }
        addCoeff(power, neg ? Rational(-c) : c);
    }
    if (first) throw ParseError("empty field element");
    return spec.element(std::move(coeffs));
}

// ASCII polynomial syntax: `3/2*x^2*y - y + 1`, `*` optional between the
// coefficient and the monomial, extension coefficients in parentheses.
inline Polynomial parsePolynomial(const std::string& text, const RingPtr& ring,
                                  MonomialOrder ord = MonomialOrder::grevlex()) {
    detail::Lexer lex(text);
    const FieldSpec& field = ring->field();
    std::vector<Term> terms;
    bool first = true;
    while (!lex.atEnd()) {
        bool neg = false;
        if (lex.trySymbol('-')) {
            neg = true;
        } else if (lex.trySymbol('+')) {
            if (first) throw ParseError("unexpected leading '+'");
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms in '" + text + "'");
        }
        first = false;

        FieldElement coeff = field.one();
        Monomial mono = Monomial::one(ring->arity());
        bool sawFactor = false;
        for (;;) {
            const detail::Token& t = lex.peek();
            if (t.kind == detail::Token::Kind::Number) {
                coeff = field.mul(coeff, field.fromRational(detail::parseRationalTail(lex)));
                sawFactor = true;
            } else if (t.kind == detail::Token::Kind::Symbol && t.text[0] == '(') {
                lex.next();
                std::string inner;
                while (!lex.trySymbol(')')) {
                    if (lex.atEnd()) throw ParseError("unbalanced '(' in '" + text + "'");
                    const detail::Token in = lex.next();
                    inner += in.text;
                    inner += " ";
                }
                coeff = field.mul(coeff, parseFieldElement(inner, field));
                sawFactor = true;
            } else if (t.kind == detail::Token::Kind::Name) {
                const detail::Token name = lex.next();
                const auto idx = ring->varIndex(name.text);
                if (!idx) throw ParseError("unknown variable '" + name.text + "'");
                int e = 1;
                if (lex.trySymbol('^')) e = static_cast<int>(detail::parseIntToken(lex));
                if (e < 0) throw ParseError("negative exponent");
                mono.exp[*idx] += e;
                mono.degree += e;
                sawFactor = true;
            } else if (t.kind == detail::Token::Kind::Symbol && t.text[0] == '*') {
                lex.next();
                continue;
            } else {
                break;
            }
        }
        if (!sawFactor) throw ParseError("expected a term in '" + text + "'");
        if (neg) coeff = field.neg(coeff);
        terms.push_back(Term{std::move(mono), std::move(coeff)});
    }
    if (first) throw ParseError("empty polynomial");
    return Polynomial::fromTerms(ring, std::move(ord), std::move(terms));
}

// Splits on a delimiter, ignoring delimiters nested inside parentheses.
inline std::vector<std::string> splitTopLevel(const std::string& text, char delim) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == delim && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    // Trim whitespace and drop empty tails.
    for (auto& p : parts) {
        const auto a = p.find_first_not_of(" \t");
        const auto b = p.find_last_not_of(" \t");
        p = (a == std::string::npos) ? std::string() : p.substr(a, b - a + 1);
    }
    while (!parts.empty() && parts.back().empty()) parts.pop_back();
    return parts;
}

}  // namespace pinch
