// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/lexer.hpp"
#include "ncdet/rational.hpp"
#include "ncdet/ring.hpp"

namespace ncdet {

namespace detail {

// Dense rational polynomials, lowest degree first, used only to build and
// reduce modulo cyclotomic moduli.  Canonical form: no trailing zeros.
using RatPoly = std::vector<Rational>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    rp_trim(out);
    return out;
}

inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out = a;
    if (out.size() < b.size()) out.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    rp_trim(out);
    return out;
}

// Division with remainder; divisor must be nonzero.
inline std::pair<RatPoly, RatPoly> rp_divmod(RatPoly num, const RatPoly& den) {
    if (den.empty()) throw DomainError("polynomial division by zero");
    RatPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size()) {
        Rational c = num.back() / lead;
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        rp_trim(num);
        if (num.size() < den.size() || num.empty()) break;
    }
    rp_trim(quot);
    return {quot, num};
}

inline RatPoly rp_div_exact(const RatPoly& num, const RatPoly& den) {
    auto [q, r] = rp_divmod(num, den);
    if (!r.empty()) throw DomainError("inexact polynomial division");
    return q;
}

// N-th cyclotomic polynomial by the divisor recursion:
// x^N - 1 = prod_{d | N} Phi_d, so Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
inline RatPoly cyclotomic_modulus(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic order must be positive");
    std::map<unsigned, RatPoly> phi;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        RatPoly xd_minus_1(d + 1, Rational(0));
        xd_minus_1[0] = Rational(-1);
        xd_minus_1[d] = Rational(1);
        RatPoly quot = xd_minus_1;
        for (const auto& [e, phi_e] : phi)
            if (d % e == 0) quot = rp_div_exact(quot, phi_e);
        phi[d] = quot;
    }
    return phi[n];
}

} // namespace detail

// Element of Q(zeta_N), stored as a residue mod Phi_N (coefficients of
// 1, e, .., e^{deg-1} where deg = deg Phi_N).  Tagged with N so that mixing
// elements of different cyclotomic fields is detectable.
struct CyclotomicNumber {
    unsigned order = 0;
    std::vector<Rational> coeffs; // size == deg Phi_N exactly

    bool operator==(const CyclotomicNumber& o) const {
        return order == o.order && coeffs == o.coeffs;
    }
};

// Q(zeta_N) presented as Q[x]/Phi_N(x); a field, since Phi_N is irreducible
// over Q.  The residue of x is a root of unity of order exactly N.
class CyclotomicRing {
public:
    using Element = CyclotomicNumber;

    explicit CyclotomicRing(unsigned n) : n_(n), modulus_(detail::cyclotomic_modulus(n)) {
        if (n < 1 || n > 64) throw DomainError("cyclotomic order out of range (1..64)");
        deg_ = modulus_.size() - 1;
        // Power table e^0 .. e^{N-1}; e^N wraps to 1 and is checked.
        powers_.push_back(one());
        if (n_ > 1) {
            Element e = reduce_poly({Rational(0), Rational(1)});
            powers_.push_back(e);
            for (unsigned k = 2; k < n_; ++k) powers_.push_back(mul(powers_.back(), e));
            if (!eq(mul(powers_.back(), e), one()))
                throw StructureError("cyclotomic root does not have order N");
        }
    }

    unsigned order() const { return n_; }
    std::size_t degree() const { return deg_; }
    const std::vector<Rational>& modulus() const { return modulus_; }

    // The distinguished root of unity (residue of x).
    Element root() const { return root_pow(1); }

    // e^k for any integer k, using e^{-1} = e^{N-1}.
    Element root_pow(long long k) const {
        long long m = k % static_cast<long long>(n_);
        if (m < 0) m += n_;
        return powers_[static_cast<std::size_t>(m)];
    }

    Element zero() const { return {n_, std::vector<Rational>(deg_, Rational(0))}; }
    Element one() const {
        auto v = std::vector<Rational>(deg_, Rational(0));
        v[0] = Rational(1);
        // N=1: Phi_1 = x-1 has degree 1 and 1 is still coeffs[0].
        return {n_, v};
    }

    Element add(const Element& a, const Element& b) const {
        check(a); check(b);
        Element out = a;
        for (std::size_t i = 0; i < deg_; ++i) out.coeffs[i] += b.coeffs[i];
        return out;
    }

    Element neg(const Element& a) const {
        check(a);
        Element out = a;
        for (auto& c : out.coeffs) c = -c;
        return out;
    }

    Element mul(const Element& a, const Element& b) const {
        check(a); check(b);
        detail::RatPoly pa(a.coeffs.begin(), a.coeffs.end());
        detail::RatPoly pb(b.coeffs.begin(), b.coeffs.end());
        detail::rp_trim(pa);
        detail::rp_trim(pb);
        return reduce_poly(detail::rp_mul(pa, pb));
    }

    bool eq(const Element& a, const Element& b) const {
        check(a); check(b);
        return a.coeffs == b.coeffs;
    }

    bool is_zero(const Element& a) const {
        check(a);
        for (const auto& c : a.coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    Element from_rational(const Rational& q) const {
        auto v = std::vector<Rational>(deg_, Rational(0));
        v[0] = q;
        return {n_, v};
    }

    std::optional<Element> try_inverse(const Element& a) const {
        check(a);
        if (is_zero(a)) return std::nullopt;
        // Extended Euclid in Q[x] against the (irreducible) modulus.
        detail::RatPoly r0 = modulus_, r1(a.coeffs.begin(), a.coeffs.end());
        detail::rp_trim(r1);
        detail::RatPoly s0 = {}, s1 = {Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = detail::rp_divmod(r0, r1);
            r0 = r1;
            r1 = r;
            auto s2 = detail::rp_sub(s0, detail::rp_mul(q, s1));
            s0 = s1;
            s1 = s2;
        }
        if (r0.size() != 1) throw StructureError("cyclotomic modulus not irreducible?");
        Rational inv_lead = Rational(1) / r0[0];
        for (auto& c : s0) c *= inv_lead;
        return reduce_poly(s0);
    }

    std::vector<Element> generators() const { return {root()}; }

    Element sample(SplitMix64& rng) const {
        Element out = zero();
        for (auto& c : out.coeffs)
            c = Rational(BigInt(rng.range(-9, 9)), BigInt(rng.range(1, 9)));
        return out;
    }

    // term := factor ('*' factor)*;  factor := NUMBER ['/' NUMBER] | 'e^'INT
    Element parse(std::string_view text) const {
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

    std::string to_string(const Element& a) const { return detail::join_terms(print_terms(a)); }

    // One printable term per nonzero coordinate: "c", "c*e^k", "e^k".
    std::vector<detail::PrintTerm> print_terms(const Element& a) const {
        check(a);
        std::vector<detail::PrintTerm> terms;
        for (std::size_t k = 0; k < deg_; ++k) {
            const Rational& c = a.coeffs[k];
            if (c.is_zero()) continue;
            detail::PrintTerm t;
            t.negative = c.is_negative();
            Rational mag = c.abs();
            if (k == 0) t.body = mag.str();
            else if (mag == Rational(1)) t.body = "e^" + std::to_string(k);
            else t.body = mag.str() + "*e^" + std::to_string(k);
            terms.push_back(std::move(t));
        }
        return terms;
    }

    std::string name() const { return "Q(zeta_" + std::to_string(n_) + ")"; }

private:
    void check(const Element& a) const {
        if (a.order != n_ || a.coeffs.size() != deg_)
            throw RingMismatchError("element does not belong to " + name());
    }

    Element reduce_poly(detail::RatPoly p) const {
        if (p.size() > deg_) p = detail::rp_divmod(std::move(p), modulus_).second;
        Element out = zero();
        for (std::size_t i = 0; i < p.size(); ++i) out.coeffs[i] = p[i];
        return out;
    }

    Element parse_term(detail::Lexer& lex) const {
        Element acc = one();
        while (true) {
            if (lex.kind == detail::Lexer::Kind::Number) {
                acc = mul(acc, from_rational(lex.read_rational()));
            } else if (lex.kind == detail::Lexer::Kind::Ident && lex.ident == "e") {
                lex.advance();
                acc = mul(acc, root_pow(static_cast<long long>(lex.read_exponent())));
            } else {
                lex.fail("expected number or e^k");
            }
            if (lex.kind != detail::Lexer::Kind::Star) break;
            lex.advance();
        }
        return acc;
    }

    unsigned n_;
    detail::RatPoly modulus_;
    std::size_t deg_ = 0;
    std::vector<Element> powers_;
};

static_assert(Ring<CyclotomicRing>);

} // namespace ncdet
