#pragma once

#include <cctype>
#include <cstdint>
#include <string>

#include "ci610/field.hpp"
#include "ci610/poly.hpp"

namespace ci610 {

// Text grammar for polynomials:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := number | variable
//   number := uint | uint '/' uint   (the '/' binds only inside a number)
// Variables are the ring's coordinate names; whitespace is insignificant.
// Printing uses the canonical term order, so parse/print round-trips exactly.
template <typename R, typename F>
class PolyParser {
public:
    PolyParser(std::string text, const F& zero_proto)
        : text_(std::move(text)), zero_(zero_like(zero_proto)) {}

    Poly<R, F> parse() {
        Poly<R, F> acc(zero_);
        skip_ws();
        bool negate = consume_sign();
        acc += parse_term(negate);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-')
                throw ParseError(pos_, std::string("expected '+' or '-', got '") + c + "'");
            ++pos_;
            acc += parse_term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (pos_ < text_.size() && text_[pos_] == '+') ++pos_;
        return false;
    }

    Poly<R, F> parse_term(bool negate) {
        Poly<R, F> t = parse_factor();
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            t *= parse_factor();
            skip_ws();
        }
        return negate ? -t : t;
    }

    Poly<R, F> parse_factor() {
        Poly<R, F> base = parse_atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            std::int64_t e = parse_uint();
            if (e > 64) throw ParseError(at, "exponent too large");
            Poly<R, F> r = Poly<R, F>::constant(one_like(zero_));
            for (std::int64_t i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    Poly<R, F> parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    Poly<R, F> parse_number() {
        std::int64_t num = parse_uint();
        skip_ws();
        F value = scalar_from_int<F>(num, zero_);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            std::int64_t den = parse_uint();
            if (den == 0) throw ParseError(at, "zero denominator");
            value = value / scalar_from_int<F>(den, zero_);
        }
        return Poly<R, F>::constant(value);
    }

    Poly<R, F> parse_variable() {
        for (std::size_t i = 0; i < R::nvars; ++i) {
            std::string name = R::names[i];
            if (text_.compare(pos_, name.size(), name) == 0) {
                pos_ += name.size();
                return Poly<R, F>::variable(i, one_like(zero_));
            }
        }
        throw ParseError(pos_, "unknown variable");
    }

    std::int64_t parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, "expected a number");
        std::int64_t v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (std::int64_t{1} << 56)) throw ParseError(start, "number too large");
            ++pos_;
        }
        return v;
    }

    std::string text_;
    F zero_;
    std::size_t pos_ = 0;
};

template <typename F>
WPoly<F> parse_wpoly(const std::string& text, const F& zero_proto) {
    return PolyParser<WRing, F>(text, zero_proto).parse();
}

inline WPoly<Rat> parse_wpoly_q(const std::string& text) {
    return parse_wpoly<Rat>(text, Rat(0));
}

} // namespace ci610
