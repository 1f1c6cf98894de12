// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/cyclotomic.hpp"
#include "ncdet/endomorphism.hpp"
#include "ncdet/lexer.hpp"
#include "ncdet/ring.hpp"

namespace ncdet {

// Element of the Grassmann algebra on m generators v1..vm over a scalar
// ring: a finite sum of monomials v_{i1}*..*v_{ik} (i1<..<ik) encoded as a
// bitmask (bit i-1 set means v_i present).  Canonical form stores ascending
// masks and no zero coefficients, so equality is structural.
template <typename Scalar>
struct GrassmannElement {
    unsigned gens = 0;
    std::map<std::uint32_t, Scalar> terms;
};

// Sign of v_S * v_T as (-1)^inversions, where inversions counts pairs
// s in S, t in T with s > t (the transpositions needed to interleave the two
// ascending monomials).  Caller guarantees S and T are disjoint.
inline int interleave_sign(std::uint32_t s, std::uint32_t t) {
    int inversions = 0;
    while (t != 0) {
        std::uint32_t low = t & (~t + 1); // lowest set bit of t
        std::uint32_t above = s & ~(low | (low - 1));
        inversions += std::popcount(above);
        t ^= low;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

// Grassmann algebra E with m generators over Q or a cyclotomic field.
// v_i*v_j = -v_j*v_i and v_i*v_i = 0; scalars are central.
template <Ring ScalarRing>
class GrassmannRing {
public:
    using Scalar = typename ScalarRing::Element;
    using Element = GrassmannElement<Scalar>;

    GrassmannRing(ScalarRing scalars, unsigned m) : scalars_(std::move(scalars)), m_(m) {
        if (m < 1 || m > 16) throw DomainError("generator count out of range (1..16)");
    }

    const ScalarRing& scalar_ring() const { return scalars_; }
    unsigned generator_count() const { return m_; }

    Element zero() const { return {m_, {}}; }
    Element one() const { return from_scalar(scalars_.one()); }

    Element from_scalar(const Scalar& c) const {
        Element out{m_, {}};
        if (!scalars_.is_zero(c)) out.terms.emplace(0u, c);
        return out;
    }

    Element from_rational(const Rational& q) const { return from_scalar(scalars_.from_rational(q)); }

    // v_i for 1 <= i <= m.
    Element generator(unsigned i) const {
        if (i < 1 || i > m_) throw DomainError("generator index out of range");
        Element out{m_, {}};
        out.terms.emplace(1u << (i - 1), scalars_.one());
        return out;
    }

    Element monomial(std::uint32_t mask, const Scalar& c) const {
        check_mask(mask);
        Element out{m_, {}};
        if (!scalars_.is_zero(c)) out.terms.emplace(mask, c);
        return out;
    }

    std::vector<Element> generators() const {
        std::vector<Element> gs;
        for (unsigned i = 1; i <= m_; ++i) gs.push_back(generator(i));
        return gs;
    }

    Element add(const Element& a, const Element& b) const {
        check(a); check(b);
        Element out = a;
        for (const auto& [mask, c] : b.terms) accumulate(out, mask, c);
        return out;
    }

    Element neg(const Element& a) const {
        check(a);
        Element out = a;
        for (auto& [mask, c] : out.terms) c = scalars_.neg(c);
        return out;
    }

    Element mul(const Element& a, const Element& b) const {
        check(a); check(b);
        Element out{m_, {}};
        for (const auto& [s, cs] : a.terms) {
            for (const auto& [t, ct] : b.terms) {
                if ((s & t) != 0) continue; // repeated generator kills the product
                Scalar c = scalars_.mul(cs, ct);
                if (interleave_sign(s, t) < 0) c = scalars_.neg(c);
                accumulate(out, s | t, c);
            }
        }
        return out;
    }

    Element scalar_mul(const Scalar& c, const Element& a) const {
        check(a);
        Element out{m_, {}};
        for (const auto& [mask, cs] : a.terms) accumulate(out, mask, scalars_.mul(c, cs));
        return out;
    }

    bool eq(const Element& a, const Element& b) const {
        check(a); check(b);
        if (a.terms.size() != b.terms.size()) return false;
        auto ia = a.terms.begin();
        auto ib = b.terms.begin();
        for (; ia != a.terms.end(); ++ia, ++ib)
            if (ia->first != ib->first || !scalars_.eq(ia->second, ib->second)) return false;
        return true;
    }

    bool is_zero(const Element& a) const {
        check(a);
        return a.terms.empty();
    }

    Scalar scalar_part(const Element& a) const {
        check(a);
        auto it = a.terms.find(0u);
        return it == a.terms.end() ? scalars_.zero() : it->second;
    }

    Scalar coefficient(const Element& a, std::uint32_t mask) const {
        check(a);
        check_mask(mask);
        auto it = a.terms.find(mask);
        return it == a.terms.end() ? scalars_.zero() : it->second;
    }

    // Keep the monomials whose degree satisfies `keep`.
    template <typename Pred>
    Element filter_degrees(const Element& a, Pred&& keep) const {
        check(a);
        Element out{m_, {}};
        for (const auto& [mask, c] : a.terms)
            if (keep(static_cast<unsigned>(std::popcount(mask)))) out.terms.emplace(mask, c);
        return out;
    }

    // Sum of the degree-k monomials (k = 0 yields the scalar part).
    Element homogeneous_component(const Element& a, unsigned k) const {
        return filter_degrees(a, [k](unsigned d) { return d == k; });
    }

    // (even part, odd part); the two sum back to the input.
    std::pair<Element, Element> parity_split(const Element& a) const {
        return {filter_degrees(a, [](unsigned d) { return d % 2 == 0; }),
                filter_degrees(a, [](unsigned d) { return d % 2 == 1; })};
    }

    // Sum of monomials whose degree is congruent to `residue` mod `n`.
    Element residue_component(const Element& a, unsigned residue, unsigned n) const {
        if (n == 0) throw DomainError("modulus must be positive");
        return filter_degrees(a, [=](unsigned d) { return d % n == residue % n; });
    }

    // Units of E are exactly the elements with invertible scalar part:
    // u = s(1 + y) with y nilpotent, so u^{-1} = s^{-1} sum (-y)^j.
    std::optional<Element> try_inverse(const Element& a) const {
        check(a);
        Scalar s = scalar_part(a);
        std::optional<Scalar> sinv = scalars_.try_inverse(s);
        if (!sinv) return std::nullopt;
        Element y = scalar_mul(*sinv, ring_sub(*this, a, from_scalar(s)));
        Element series = one();
        Element power = one();
        for (unsigned j = 1; j <= m_; ++j) {
            power = mul(power, neg(y));
            if (is_zero(power)) break;
            series = add(series, power);
        }
        return scalar_mul(*sinv, series);
    }

    Element sample(SplitMix64& rng) const {
        Element out = zero();
        unsigned nterms = static_cast<unsigned>(rng.below(5)); // 0..4 monomials
        for (unsigned t = 0; t < nterms; ++t) {
            auto mask = static_cast<std::uint32_t>(rng.below(1u << m_));
            accumulate(out, mask, scalars_.sample(rng));
        }
        return out;
    }

    // expr := ['-'] term (('+'|'-') term)*
    // term := factor ('*' factor)*
    // factor := NUMBER ['/' NUMBER] | 'e^'INT (cyclotomic scalars) | 'v'INT
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

    // Terms ordered by (degree, mask); within a term, generators ascend and
    // the scalar coefficient is expanded into its own printable terms.
    std::vector<detail::PrintTerm> print_terms(const Element& a) const {
        check(a);
        std::vector<std::uint32_t> masks;
        for (const auto& [mask, c] : a.terms) masks.push_back(mask);
        std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
            auto dx = std::popcount(x), dy = std::popcount(y);
            return dx != dy ? dx < dy : x < y;
        });
        std::vector<detail::PrintTerm> out;
        for (std::uint32_t mask : masks) {
            std::string gens = mask_string(mask);
            for (const auto& st : scalars_.print_terms(a.terms.at(mask))) {
                detail::PrintTerm t;
                t.negative = st.negative;
                if (mask == 0) t.body = st.body;
                else if (st.body == "1") t.body = gens;
                else t.body = st.body + "*" + gens;
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    std::string name() const {
        return "E_" + std::to_string(m_) + "(" + scalars_.name() + ")";
    }

private:
    void check(const Element& a) const {
        if (a.gens != m_) throw RingMismatchError("element does not belong to " + name());
    }

    void check_mask(std::uint32_t mask) const {
        if (mask >= (1u << m_)) throw DomainError("monomial uses generator beyond v" + std::to_string(m_));
    }

    void accumulate(Element& out, std::uint32_t mask, const Scalar& c) const {
        auto it = out.terms.find(mask);
        if (it == out.terms.end()) {
            if (!scalars_.is_zero(c)) out.terms.emplace(mask, c);
            return;
        }
        it->second = scalars_.add(it->second, c);
        if (scalars_.is_zero(it->second)) out.terms.erase(it);
    }

    static std::string mask_string(std::uint32_t mask) {
        std::string s;
        for (unsigned i = 0; mask != 0; ++i, mask >>= 1) {
            if ((mask & 1u) == 0) continue;
            if (!s.empty()) s += "*";
            s += "v" + std::to_string(i + 1);
        }
        return s;
    }

    Element parse_term(detail::Lexer& lex) const {
        Element acc = one();
        while (true) {
            if (lex.kind == detail::Lexer::Kind::Number) {
                acc = mul(acc, from_rational(lex.read_rational()));
            } else if (lex.kind == detail::Lexer::Kind::Ident && lex.ident == "v") {
                std::size_t pos = lex.token_pos;
                lex.advance();
                if (lex.kind != detail::Lexer::Kind::Number)
                    throw ParseError("expected generator index after 'v'", pos);
                if (lex.number < 1 || lex.number > m_)
                    throw ParseError("generator index out of range 1.." + std::to_string(m_), lex.token_pos);
                acc = mul(acc, generator(static_cast<unsigned>(lex.number)));
                lex.advance();
            } else if (lex.kind == detail::Lexer::Kind::Ident && lex.ident == "e") {
                if constexpr (requires { scalars_.root_pow(1LL); }) {
                    lex.advance();
                    acc = scalar_mul(scalars_.root_pow(static_cast<long long>(lex.read_exponent())), acc);
                } else {
                    lex.fail("'e^' coefficients need cyclotomic scalars");
                }
            } else {
                lex.fail("expected coefficient or generator");
            }
            if (lex.kind != detail::Lexer::Kind::Star) break;
            lex.advance();
        }
        return acc;
    }

    ScalarRing scalars_;
    unsigned m_;
};

// Parity automorphism: v_i -> -v_i extended homomorphically, i.e. negate
// odd-degree monomials.  Its fixed subring is the even part (the center for
// the generator counts used here).
template <Ring ScalarRing>
Endomorphism<GrassmannRing<ScalarRing>> parity_endo(const GrassmannRing<ScalarRing>& ring) {
    return {ring, "eps", 2, [ring](const GrassmannElement<typename ScalarRing::Element>& a) {
                auto [even, odd] = ring.parity_split(a);
                return ring_sub(ring, even, odd);
            }};
}

// Root-scaling automorphism: v_i -> e*v_i for the distinguished root of
// unity e of the cyclotomic scalar field, so a degree-d monomial picks up
// e^d.  Order is the order of e.
inline Endomorphism<GrassmannRing<CyclotomicRing>> root_scaling_endo(
    const GrassmannRing<CyclotomicRing>& ring) {
    unsigned n = ring.scalar_ring().order();
    return {ring, "rho_e", n, [ring](const GrassmannElement<CyclotomicNumber>& a) {
                auto out = ring.zero();
                for (const auto& [mask, c] : a.terms) {
                    auto scaled = ring.scalar_ring().mul(
                        ring.scalar_ring().root_pow(std::popcount(mask)), c);
                    out = ring.add(out, ring.monomial(mask, scaled));
                }
                return out;
            }};
}

// Conjugation by a unit u: a -> u a u^{-1}.  No finite order is claimed.
template <Ring ScalarRing>
Endomorphism<GrassmannRing<ScalarRing>> unit_conjugation_endo(
    const GrassmannRing<ScalarRing>& ring,
    const GrassmannElement<typename ScalarRing::Element>& u, const std::string& label) {
    auto uinv = ring.try_inverse(u);
    if (!uinv) throw DomainError("conjugation requires a unit (invertible scalar part)");
    auto ui = *uinv;
    return {ring, label, 0,
            [ring, u, ui](const GrassmannElement<typename ScalarRing::Element>& a) {
                return ring.mul(ring.mul(u, a), ui);
            }};
}

// sigma(g) = (1+v1) g (1-v1); 1-v1 really is (1+v1)^{-1}.
template <Ring ScalarRing>
Endomorphism<GrassmannRing<ScalarRing>> v1_conjugation_endo(const GrassmannRing<ScalarRing>& ring) {
    return unit_conjugation_endo(ring, ring.add(ring.one(), ring.generator(1)), "sigma");
}

// Generator-image extension: v_i -> images[i-1], scalars fixed.  The images
// must pairwise anticommute and square to zero for this to be a well defined
// endomorphism; that is the caller's claim, checkable via check_endomorphism.
template <Ring ScalarRing>
Endomorphism<GrassmannRing<ScalarRing>> generator_image_endo(
    const GrassmannRing<ScalarRing>& ring,
    std::vector<GrassmannElement<typename ScalarRing::Element>> images, const std::string& label,
    unsigned declared_order) {
    if (images.size() != ring.generator_count())
        throw DomainError("need one image per generator");
    return {ring, label, declared_order,
            [ring, images = std::move(images)](
                const GrassmannElement<typename ScalarRing::Element>& a) {
                auto out = ring.zero();
                for (const auto& [mask, c] : a.terms) {
                    auto prod = ring.from_scalar(c);
                    for (unsigned i = 0; i < ring.generator_count(); ++i)
                        if (mask & (1u << i)) prod = ring.mul(prod, images[i]);
                    out = ring.add(out, prod);
                }
                return out;
            }};
}

} // namespace ncdet
