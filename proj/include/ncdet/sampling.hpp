// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Random members of the structured algebras.  Membership is measure zero
// among dense matrices, so members are built from their shape descriptions
// (block parity, monomial degree residues, twisted rows) rather than by
// rejection.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncdet/algebras.hpp"
#include "ncdet/grassmann.hpp"
#include "ncdet/matrix.hpp"
#include "ncdet/polynomial.hpp"

namespace ncdet {

// Element with 1..3 monomials whose masks satisfy `keep`.
template <Ring Scalar, typename Pred>
GrassmannElement<typename Scalar::Element> sample_grassmann_where(const GrassmannRing<Scalar>& E,
                                                                  SplitMix64& rng, Pred&& keep) {
    std::vector<std::uint32_t> masks;
    const std::uint32_t limit = 1u << E.generator_count();
    for (std::uint32_t mask = 0; mask < limit; ++mask)
        if (keep(mask)) masks.push_back(mask);
    auto out = E.zero();
    if (masks.empty()) return out;
    const int terms = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < terms; ++t) {
        auto mask = masks[rng.below(masks.size())];
        out = E.add(out, E.monomial(mask, E.scalar_ring().sample(rng)));
    }
    return out;
}

template <Ring Scalar>
GrassmannElement<typename Scalar::Element> sample_even(const GrassmannRing<Scalar>& E,
                                                       SplitMix64& rng) {
    return sample_grassmann_where(E, rng,
                                  [](std::uint32_t m) { return std::popcount(m) % 2 == 0; });
}

template <Ring Scalar>
GrassmannElement<typename Scalar::Element> sample_odd(const GrassmannRing<Scalar>& E,
                                                      SplitMix64& rng) {
    return sample_grassmann_where(E, rng,
                                  [](std::uint32_t m) { return std::popcount(m) % 2 == 1; });
}

// Monomial degree congruent to r mod n.
template <Ring Scalar>
GrassmannElement<typename Scalar::Element> sample_residue(const GrassmannRing<Scalar>& E,
                                                          SplitMix64& rng, unsigned r,
                                                          unsigned n) {
    return sample_grassmann_where(E, rng, [r, n](std::uint32_t m) {
        return static_cast<unsigned>(std::popcount(m)) % n == r % n;
    });
}

// Invertible element: a nonzero scalar part plus arbitrary nilpotent terms.
template <Ring Scalar>
GrassmannElement<typename Scalar::Element> sample_unit(const GrassmannRing<Scalar>& E,
                                                       SplitMix64& rng) {
    const auto& k = E.scalar_ring();
    auto c = k.sample(rng);
    if (k.is_zero(c)) c = k.one();
    return E.add(E.from_scalar(c),
                 sample_grassmann_where(E, rng, [](std::uint32_t m) { return m != 0; }));
}

// Cen(v1) = E_0 + E_0 v1: masks of even degree, or any mask containing v1.
template <Ring Scalar>
GrassmannElement<typename Scalar::Element> sample_centralizer_v1(const GrassmannRing<Scalar>& E,
                                                                 SplitMix64& rng) {
    return sample_grassmann_where(E, rng, [](std::uint32_t m) {
        return std::popcount(m) % 2 == 0 || (m & 1u) != 0;
    });
}

// Solutions of v1 g - g v1 = +/- v1 v2 g: every g0 + (±v2 g0 + e0 v1)/2 with
// g0, e0 even qualifies (substitute and use that even elements are central).
template <Ring Scalar>
GrassmannElement<typename Scalar::Element> sample_omega(const GrassmannRing<Scalar>& E,
                                                        SplitMix64& rng, bool plus) {
    auto g0 = sample_even(E, rng);
    auto e0 = sample_even(E, rng);
    auto odd = E.mul(E.generator(2), g0);
    if (!plus) odd = E.neg(odd);
    odd = E.add(odd, E.mul(e0, E.generator(1)));
    auto half = E.scalar_ring().from_rational(Rational(BigInt(1), BigInt(2)));
    return E.add(g0, E.scalar_mul(half, odd));
}

// Block supermatrix: even entries where row and column fall on the same side
// of the cut d, odd entries across it.
template <Ring Scalar>
Matrix<GrassmannElement<typename Scalar::Element>> supermatrix_member(
    const GrassmannRing<Scalar>& E, int n, int d, SplitMix64& rng) {
    if (d < 1 || d >= n) throw DomainError("block cut must satisfy 1 <= d < n");
    auto a = mat_zero(E, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = ((i < d) == (j < d)) ? sample_even(E, rng) : sample_odd(E, rng);
    return a;
}

// Entry (i,j) has monomial degree congruent to i-j mod n (the root-scaling
// shape with p_{ij} = e^{i-j}).
template <Ring Scalar>
Matrix<GrassmannElement<typename Scalar::Element>> root_residue_member(
    const GrassmannRing<Scalar>& E, int n, SplitMix64& rng) {
    auto a = mat_zero(E, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = sample_residue(E, rng, static_cast<unsigned>(((i - j) % n + n) % n),
                                        static_cast<unsigned>(n));
    return a;
}

// Conjugation-twist member: diagonal blocks from Cen(v1), off-diagonal blocks
// from the two omega solution sets.
template <Ring Scalar>
Matrix<GrassmannElement<typename Scalar::Element>> conjugation_member(
    const GrassmannRing<Scalar>& E, int n, int d, SplitMix64& rng) {
    if (d < 1 || d >= n) throw DomainError("block cut must satisfy 1 <= d < n");
    auto a = mat_zero(E, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if ((i < d) == (j < d)) a.at(i, j) = sample_centralizer_v1(E, rng);
            else if (i < d) a.at(i, j) = sample_omega(E, rng, true);
            else a.at(i, j) = sample_omega(E, rng, false);
        }
    return a;
}

// Member of the H-twisted algebra: the first row is free and row i repeats it
// delta-twisted and rotated, a_{i,j} = delta^i(a_{0,(j-i) mod n}).
template <Ring R>
Matrix<typename R::Element> h_twist_member(const Endomorphism<R>& delta, int n, SplitMix64& rng) {
    const R& ring = delta.ring;
    std::vector<typename R::Element> row;
    for (int j = 0; j < n; ++j) row.push_back(ring.sample(rng));
    auto a = mat_zero(ring, n);
    for (int j = 0; j < n; ++j) a.at(0, j) = row[static_cast<std::size_t>(j)];
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = delta.map(a.at(i - 1, ((j - 1) % n + n) % n));
    return a;
}

// Graded matrix over R[z] with the z-exponent grading: entry (i,j) supported
// on exponents congruent to j-i mod n.
template <Ring R>
Matrix<Polynomial<typename R::Element>> graded_poly_matrix_member(const PolynomialRing<R>& pz,
                                                                  int n, SplitMix64& rng) {
    auto a = mat_zero(pz, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            unsigned r = static_cast<unsigned>(((j - i) % n + n) % n);
            auto entry = pz.zero();
            for (unsigned u = 0; u < 2; ++u)
                entry = pz.add(entry, pz.monomial(pz.base().sample(rng),
                                                  r + u * static_cast<unsigned>(n)));
            a.at(i, j) = entry;
        }
    return a;
}

// Graded matrix over a Grassmann algebra with the degree-mod-n grading.
template <Ring Scalar>
Matrix<GrassmannElement<typename Scalar::Element>> graded_grassmann_matrix_member(
    const GrassmannRing<Scalar>& E, int n, SplitMix64& rng) {
    auto a = mat_zero(E, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = sample_residue(E, rng, static_cast<unsigned>(((j - i) % n + n) % n),
                                        static_cast<unsigned>(n));
    return a;
}

// Dense matrix with unconstrained sampled entries.
template <Ring R>
Matrix<typename R::Element> dense_member(const R& ring, int n, SplitMix64& rng) {
    auto a = mat_zero(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = ring.sample(rng);
    return a;
}

} // namespace ncdet
