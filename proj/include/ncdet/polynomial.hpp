// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/endomorphism.hpp"
#include "ncdet/lexer.hpp"
#include "ncdet/ring.hpp"

namespace ncdet {

// Polynomial over a (possibly noncommutative) base ring in one central
// indeterminate; coefficients ascend by exponent, canonical form has no
// trailing zero coefficient.
template <typename BaseElem>
struct Polynomial {
    std::vector<BaseElem> coeffs;
};

template <Ring Base>
class PolynomialRing {
public:
    using BaseElem = typename Base::Element;
    using Element = Polynomial<BaseElem>;

    PolynomialRing(Base base, std::string var) : base_(std::move(base)), var_(std::move(var)) {}

    const Base& base() const { return base_; }
    const std::string& variable_name() const { return var_; }

    Element zero() const { return {}; }
    Element one() const { return {{base_.one()}}; }
    Element lift(const BaseElem& c) const {
        Element p{{c}};
        trim(p);
        return p;
    }
    Element variable() const { return {{base_.zero(), base_.one()}}; }

    Element monomial(const BaseElem& c, unsigned k) const {
        if (base_.is_zero(c)) return {};
        Element p;
        p.coeffs.assign(k + 1, base_.zero());
        p.coeffs[k] = c;
        return p;
    }

    int degree(const Element& p) const { return static_cast<int>(p.coeffs.size()) - 1; }

    BaseElem coefficient(const Element& p, unsigned k) const {
        return k < p.coeffs.size() ? p.coeffs[k] : base_.zero();
    }

    Element add(const Element& a, const Element& b) const {
        Element out = a;
        if (out.coeffs.size() < b.coeffs.size()) out.coeffs.resize(b.coeffs.size(), base_.zero());
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            out.coeffs[i] = base_.add(out.coeffs[i], b.coeffs[i]);
        trim(out);
        return out;
    }

    Element neg(const Element& a) const {
        Element out = a;
        for (auto& c : out.coeffs) c = base_.neg(c);
        return out;
    }

    // The indeterminate is central, so (a_i x^i)(b_j x^j) = (a_i b_j) x^{i+j}
    // with base products kept in left-to-right order.
    Element mul(const Element& a, const Element& b) const {
        if (a.coeffs.empty() || b.coeffs.empty()) return {};
        Element out;
        out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, base_.zero());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (base_.is_zero(a.coeffs[i])) continue;
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
                if (base_.is_zero(b.coeffs[j])) continue;
                out.coeffs[i + j] = base_.add(out.coeffs[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
            }
        }
        trim(out);
        return out;
    }

    bool eq(const Element& a, const Element& b) const {
        if (a.coeffs.size() != b.coeffs.size()) return false;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            if (!base_.eq(a.coeffs[i], b.coeffs[i])) return false;
        return true;
    }

    bool is_zero(const Element& a) const { return a.coeffs.empty(); }

    Element from_rational(const Rational& q) const { return lift(base_.from_rational(q)); }

    // Units of R[x] for the rings used here are the degree-0 units of R.
    std::optional<Element> try_inverse(const Element& a) const {
        if (degree(a) != 0) return std::nullopt;
        if constexpr (requires(const BaseElem& c) { base_.try_inverse(c); }) {
            auto inv = base_.try_inverse(a.coeffs[0]);
            if (!inv) return std::nullopt;
            return lift(*inv);
        } else {
            return std::nullopt;
        }
    }

    std::vector<Element> generators() const {
        std::vector<Element> gs;
        if constexpr (requires { base_.generators(); }) {
            for (const auto& g : base_.generators()) gs.push_back(lift(g));
        }
        gs.push_back(variable());
        return gs;
    }

    Element sample(SplitMix64& rng) const {
        Element out;
        auto deg = static_cast<std::size_t>(rng.below(3)); // degree <= 2
        out.coeffs.reserve(deg + 1);
        for (std::size_t i = 0; i <= deg; ++i) out.coeffs.push_back(base_.sample(rng));
        trim(out);
        return out;
    }

    std::string to_string(const Element& a) const {
        std::vector<detail::PrintTerm> terms;
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
            if (base_.is_zero(a.coeffs[k])) continue;
            std::string c = base_.to_string(a.coeffs[k]);
            bool negative = false;
            // A single-term coefficient carries its sign out to the separator;
            // a compound sum keeps it inside parentheses.
            if (!c.empty() && c[0] == '-' && c.find(' ') == std::string::npos) {
                negative = true;
                c.erase(0, 1);
            }
            std::string body;
            if (k == 0) {
                body = c;
            } else {
                std::string power = var_ + (k == 1 ? "" : "^" + std::to_string(k));
                if (c == "1") body = power;
                else if (needs_parens(c)) body = "(" + c + ")*" + power;
                else body = c + "*" + power;
            }
            terms.push_back({negative, body});
        }
        return detail::join_terms(terms);
    }

    std::string name() const { return base_.name() + "[" + var_ + "]"; }

    // Parsing is provided for rational coefficients (the CLI's q[y] ring):
    // term := factor ('*' factor)*;  factor := NUMBER['/'NUMBER] | VAR['^'INT]
    Element parse(std::string_view text) const
        requires std::same_as<Base, RationalRing>
    {
        detail::Lexer lex(text);
        Element acc = zero();
        bool negate = false;
        if (lex.kind == detail::Lexer::Kind::Minus) { negate = true; lex.advance(); }
        while (true) {
            Element term = parse_term(lex);
            acc = negate ? add(acc, neg(term)) : add(acc, term);
            if (lex.kind == detail::Lexer::Kind::End) break;
            if (lex.kind == detail::Lexer::Kind::Plus) negate = false;
            else if (lex.kind == detail::Lexer::Kind::Minus) negate = true;
            else lex.fail("expected '+' or '-'");
            lex.advance();
        }
        return acc;
    }

private:
    static bool needs_parens(const std::string& c) {
        return c.find(' ') != std::string::npos || (!c.empty() && c[0] == '-');
    }

    void trim(Element& p) const {
        while (!p.coeffs.empty() && base_.is_zero(p.coeffs.back())) p.coeffs.pop_back();
    }

    Element parse_term(detail::Lexer& lex) const
        requires std::same_as<Base, RationalRing>
    {
        Element acc = one();
        while (true) {
            if (lex.kind == detail::Lexer::Kind::Number) {
                acc = mul(acc, from_rational(lex.read_rational()));
            } else if (lex.kind == detail::Lexer::Kind::Ident && lex.ident == var_) {
                lex.advance();
                unsigned e = 1;
                if (lex.kind == detail::Lexer::Kind::Caret) e = lex.read_exponent();
                acc = mul(acc, monomial(base_.one(), e));
            } else {
                lex.fail("expected coefficient or '" + var_ + "'");
            }
            if (lex.kind != detail::Lexer::Kind::Star) break;
            lex.advance();
        }
        return acc;
    }

    Base base_;
    std::string var_;
};

// Endomorphism of R[x] determined by a base endomorphism and an image of the
// indeterminate: sum c_k x^k -> sum delta(c_k) image^k.  The image must be
// central for this to be a ring map (all shipped uses pass x itself or a
// central scalar multiple of it).
template <Ring Base>
Endomorphism<PolynomialRing<Base>> polynomial_endo(const PolynomialRing<Base>& ring,
                                                   const Endomorphism<Base>& delta,
                                                   const Polynomial<typename Base::Element>& image,
                                                   const std::string& label,
                                                   unsigned declared_order) {
    return {ring, label, declared_order,
            [ring, delta, image](const Polynomial<typename Base::Element>& p) {
                auto out = ring.zero();
                auto power = ring.one();
                for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
                    if (k > 0) power = ring.mul(power, image);
                    out = ring.add(out, ring.mul(ring.lift(delta.map(p.coeffs[k])), power));
                }
                return out;
            }};
}

// Coefficientwise extension (x -> x); inherits the declared order.
template <Ring Base>
Endomorphism<PolynomialRing<Base>> coefficientwise_endo(const PolynomialRing<Base>& ring,
                                                        const Endomorphism<Base>& delta) {
    return polynomial_endo(ring, delta, ring.variable(), delta.label + "_" + ring.variable_name(),
                           delta.declared_order);
}

// Exponent residues mod n: p splits as p_0 + .. + p_{n-1} where p_i keeps
// the monomials with exponent congruent to i.
template <Ring Base>
std::vector<Polynomial<typename Base::Element>> exponent_residue_split(
    const PolynomialRing<Base>& ring, const Polynomial<typename Base::Element>& p, unsigned n) {
    if (n == 0) throw DomainError("modulus must be positive");
    std::vector<Polynomial<typename Base::Element>> parts(n, ring.zero());
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        if (ring.base().is_zero(p.coeffs[k])) continue;
        parts[k % n] = ring.add(parts[k % n], ring.monomial(p.coeffs[k], static_cast<unsigned>(k)));
    }
    return parts;
}

} // namespace ncdet
