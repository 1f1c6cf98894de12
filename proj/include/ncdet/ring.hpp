// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/lexer.hpp"
#include "ncdet/rational.hpp"

namespace ncdet {

// A ring is a small copyable value describing one algebra instance; elements
// are plain values that only make sense relative to their ring.  All shipped
// rings are unital Q-algebras, so an exact embedding of Q is part of the
// interface (from_rational); nothing here is floating point.
//
// eq is exact structural equality of canonical forms.  sample draws a small
// "desk scale" random element (single-digit coefficient data) and is the
// basis of every property-style check.
template <typename R>
concept Ring = std::copyable<R> && requires(const R& ring,
                                            const typename R::Element& a,
                                            const typename R::Element& b,
                                            const Rational& q,
                                            SplitMix64& rng) {
    typename R::Element;
    { ring.zero() } -> std::same_as<typename R::Element>;
    { ring.one() } -> std::same_as<typename R::Element>;
    { ring.add(a, b) } -> std::same_as<typename R::Element>;
    { ring.neg(a) } -> std::same_as<typename R::Element>;
    { ring.mul(a, b) } -> std::same_as<typename R::Element>;
    { ring.eq(a, b) } -> std::same_as<bool>;
    { ring.is_zero(a) } -> std::same_as<bool>;
    { ring.from_rational(q) } -> std::same_as<typename R::Element>;
    { ring.to_string(a) } -> std::same_as<std::string>;
    { ring.name() } -> std::same_as<std::string>;
    { ring.sample(rng) } -> std::same_as<typename R::Element>;
};

template <Ring R>
typename R::Element ring_sub(const R& ring, const typename R::Element& a,
                             const typename R::Element& b) {
    return ring.add(a, ring.neg(b));
}

template <Ring R>
typename R::Element ring_pow(const R& ring, const typename R::Element& a, unsigned e) {
    auto acc = ring.one();
    for (unsigned i = 0; i < e; ++i) acc = ring.mul(acc, a);
    return acc;
}

template <Ring R>
typename R::Element ring_int(const R& ring, long long n) {
    return ring.from_rational(Rational(n));
}

// Additive commutator [a, b] = ab - ba.
template <Ring R>
typename R::Element commutator(const R& ring, const typename R::Element& a,
                               const typename R::Element& b) {
    return ring_sub(ring, ring.mul(a, b), ring.mul(b, a));
}

// Left-normed higher commutator [[..[x0,x1],x2..],xk].
template <Ring R>
typename R::Element left_normed_commutator(const R& ring,
                                           const std::vector<typename R::Element>& xs) {
    if (xs.empty()) throw DomainError("empty commutator argument list");
    auto acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(ring, acc, xs[i]);
    return acc;
}

// Evidence (not proof) that all k+1-fold left-normed commutators vanish.
// Enumerates tuples with repetition over `samples`, capped at `max_tuples`
// tuples; beyond the cap it walks a deterministic pseudo-random subset.
template <Ring R>
bool lie_nilpotency_probe(const R& ring, unsigned k,
                          const std::vector<typename R::Element>& samples,
                          std::size_t max_tuples = 100000) {
    if (samples.empty()) throw DomainError("lie_nilpotency_probe needs samples");
    const std::size_t arity = k + 1;
    double total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= static_cast<double>(samples.size());
    std::vector<typename R::Element> tuple;
    tuple.reserve(arity);
    if (total <= static_cast<double>(max_tuples)) {
        std::vector<std::size_t> idx(arity, 0);
        while (true) {
            tuple.clear();
            for (std::size_t i : idx) tuple.push_back(samples[i]);
            if (!ring.is_zero(left_normed_commutator(ring, tuple))) return false;
            std::size_t p = 0;
            while (p < arity && ++idx[p] == samples.size()) idx[p++] = 0;
            if (p == arity) break;
        }
        return true;
    }
    SplitMix64 rng(0x5eedULL ^ (static_cast<std::uint64_t>(k) << 32) ^ samples.size());
    for (std::size_t t = 0; t < max_tuples; ++t) {
        tuple.clear();
        for (std::size_t i = 0; i < arity; ++i) tuple.push_back(samples[rng.below(samples.size())]);
        if (!ring.is_zero(left_normed_commutator(ring, tuple))) return false;
    }
    return true;
}

namespace detail {

// Permutations of {0..n-1} in lexicographic order, each with its sign.
struct SignedPerm {
    std::vector<int> p;
    int sign; // +1 or -1
};

inline std::vector<SignedPerm> signed_permutations(int n) {
    if (n < 0 || n > 8) throw DomainError("permutation enumeration limited to n <= 8");
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<SignedPerm> out;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
        out.push_back({p, (inv % 2 == 0) ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace detail

// Standard polynomial S_m(x_1..x_m) = sum over permutations of the signed
// products, permutations in lexicographic order, products left-to-right.
template <Ring R>
typename R::Element standard_poly(const R& ring, const std::vector<typename R::Element>& xs) {
    if (xs.empty() || xs.size() > 6)
        throw DomainError("standard_poly supports 1..6 arguments");
    auto total = ring.zero();
    for (const auto& [perm, sign] : detail::signed_permutations(static_cast<int>(xs.size()))) {
        auto prod = ring.one();
        for (int i : perm) {
            prod = ring.mul(prod, xs[static_cast<std::size_t>(i)]);
            if (ring.is_zero(prod)) break;
        }
        total = sign > 0 ? ring.add(total, prod) : ring_sub(ring, total, prod);
    }
    return total;
}

// Sampling check of the ring axioms (associativity, distributivity, units,
// additive inverses) on `trials` seeded triples.  Returns a description of
// the first violation, or nullopt when everything holds.
template <Ring R>
std::optional<std::string> check_ring_axioms(const R& ring, std::uint64_t seed, int trials) {
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto a = ring.sample(rng);
        auto b = ring.sample(rng);
        auto c = ring.sample(rng);
        auto chk = [&](bool ok, const char* law) -> std::optional<std::string> {
            if (ok) return std::nullopt;
            return std::string(law) + " failed in " + ring.name() + " at trial " +
                   std::to_string(t);
        };
        if (auto f = chk(ring.eq(ring.add(a, b), ring.add(b, a)), "a+b=b+a")) return f;
        if (auto f = chk(ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c))),
                         "(a+b)+c=a+(b+c)"))
            return f;
        if (auto f = chk(ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))),
                         "(ab)c=a(bc)"))
            return f;
        if (auto f = chk(ring.eq(ring.mul(a, ring.add(b, c)),
                                 ring.add(ring.mul(a, b), ring.mul(a, c))),
                         "a(b+c)=ab+ac"))
            return f;
        if (auto f = chk(ring.eq(ring.mul(ring.add(a, b), c),
                                 ring.add(ring.mul(a, c), ring.mul(b, c))),
                         "(a+b)c=ac+bc"))
            return f;
        if (auto f = chk(ring.eq(ring.mul(a, ring.one()), a), "a*1=a")) return f;
        if (auto f = chk(ring.eq(ring.mul(ring.one(), a), a), "1*a=a")) return f;
        if (auto f = chk(ring.eq(ring.add(a, ring.zero()), a), "a+0=a")) return f;
        if (auto f = chk(ring.is_zero(ring.add(a, ring.neg(a))), "a+(-a)=0")) return f;
        if (auto f = chk(ring.is_zero(ring.mul(a, ring.zero())), "a*0=0")) return f;
        if (auto f = chk(ring.eq(a, a), "a=a")) return f;
    }
    return std::nullopt;
}

// The rationals as a ring object.
class RationalRing {
public:
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    Element from_rational(const Rational& q) const { return q; }
    std::string to_string(const Element& a) const { return a.str(); }
    std::string name() const { return "Q"; }

    std::optional<Element> try_inverse(const Element& a) const {
        if (a.is_zero()) return std::nullopt;
        return Rational(1) / a;
    }

    std::vector<Element> generators() const { return {}; }

    // Numerator in [-9,9], denominator in [1,9].
    Element sample(SplitMix64& rng) const {
        return Rational(BigInt(rng.range(-9, 9)), BigInt(rng.range(1, 9)));
    }

    // expr := ['-'] term (('+'|'-') term)*;  term := NUMBER ['/' NUMBER]
    Element parse(std::string_view text) const {
        detail::Lexer lex(text);
        Element acc = zero();
        bool negate = false;
        if (lex.kind == detail::Lexer::Kind::Minus) { negate = true; lex.advance(); }
        while (true) {
            Rational term = lex.read_rational();
            acc = negate ? acc - term : acc + term;
            if (lex.kind == detail::Lexer::Kind::End) break;
            if (lex.kind == detail::Lexer::Kind::Plus) negate = false;
            else if (lex.kind == detail::Lexer::Kind::Minus) negate = true;
            else lex.fail("expected '+' or '-'");
            lex.advance();
        }
        return acc;
    }

    std::vector<detail::PrintTerm> print_terms(const Element& a) const {
        if (a.is_zero()) return {};
        return {{a.is_negative(), a.abs().str()}};
    }
};

static_assert(Ring<RationalRing>);

} // namespace ncdet
