// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/rational.hpp"

namespace ncdet::detail {

// Tokenizer shared by every element parser.  Grammar alphabet:
//   NUMBER  digit run (unsigned; signs are expression-level)
//   IDENT   letter run ("v", "e", or a ring's variable name)
//   one of  + - * / ^
// Whitespace is insignificant.
struct Lexer {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, End };

    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    Kind kind = Kind::End;
    std::string ident;     // valid when kind == Ident
    BigInt number;         // valid when kind == Number
    std::size_t token_pos = 0;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        token_pos = pos_;
        if (pos_ >= text_.size()) { kind = Kind::End; return; }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            number = BigInt(std::string(text_.substr(start, pos_ - start)));
            kind = Kind::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            ident = std::string(text_.substr(start, pos_ - start));
            kind = Kind::Ident;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': kind = Kind::Plus; return;
            case '-': kind = Kind::Minus; return;
            case '*': kind = Kind::Star; return;
            case '/': kind = Kind::Slash; return;
            case '^': kind = Kind::Caret; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", token_pos);
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, token_pos); }

    // NUMBER ['/' NUMBER] with the current token being the leading NUMBER.
    Rational read_rational() {
        if (kind != Kind::Number) fail("expected number");
        BigInt n = number;
        advance();
        if (kind == Kind::Slash) {
            advance();
            if (kind != Kind::Number) fail("expected denominator after '/'");
            if (number == 0) fail("zero denominator");
            BigInt d = number;
            advance();
            return Rational(n, d);
        }
        return Rational(n);
    }

    // '^' NUMBER following an IDENT; returns the (non-negative) exponent.
    unsigned read_exponent() {
        if (kind != Kind::Caret) fail("expected '^'");
        advance();
        if (kind != Kind::Number) fail("expected exponent after '^'");
        if (number > 4096) fail("exponent too large");
        auto e = static_cast<unsigned>(number);
        advance();
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// One printable additive term: sign split out so joiners can render
// "a + b - c" without double signs.
struct PrintTerm {
    bool negative = false;
    std::string body;
};

inline std::string join_terms(const std::vector<PrintTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

} // namespace ncdet::detail
