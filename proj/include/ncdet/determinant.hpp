// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/matrix.hpp"
#include "ncdet/polynomial.hpp"
#include "ncdet/ring.hpp"

namespace ncdet {

// Symmetric determinant: the double permutation sum
//   sdet(A) = sum over tau, pi of sgn(pi) a_{tau(1),pi(tau(1))} .. a_{tau(n),pi(tau(n))}
// with factors multiplied left to right in tau-order.  Over a commutative
// ring this collapses to n! det(A).  Partial products that hit zero prune
// the inner loop; the enumeration order (tau outer, pi inner, both
// lexicographic) is fixed so results are bit-stable.
template <Ring R>
typename R::Element sdet(const R& ring, const Matrix<typename R::Element>& a) {
    const int n = a.size();
    const auto perms = detail::signed_permutations(n);
    auto total = ring.zero();
    for (const auto& tau : perms) {
        for (const auto& pi : perms) {
            auto prod = ring.one();
            bool dead = false;
            for (int t = 0; t < n && !dead; ++t) {
                int row = tau.p[static_cast<std::size_t>(t)];
                prod = ring.mul(prod, a.at(row, pi.p[static_cast<std::size_t>(row)]));
                dead = ring.is_zero(prod);
            }
            if (dead) continue;
            total = pi.sign > 0 ? ring.add(total, prod) : ring_sub(ring, total, prod);
        }
    }
    return total;
}

// Preadjoint A*: the (r,s) entry restricts the sdet sum to tau fixing s and
// pi sending s to r, with the s-th factor omitted.  Over a commutative ring
// A* = (n-1)! adj(A); tr(A A*) = sdet(A).
template <Ring R>
Matrix<typename R::Element> preadjoint(const R& ring, const Matrix<typename R::Element>& a) {
    const int n = a.size();
    const auto perms = detail::signed_permutations(n);
    auto out = mat_zero(ring, n);
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            auto total = ring.zero();
            for (const auto& tau : perms) {
                if (tau.p[static_cast<std::size_t>(s)] != s) continue;
                for (const auto& pi : perms) {
                    if (pi.p[static_cast<std::size_t>(s)] != r) continue;
                    auto prod = ring.one();
                    bool dead = false;
                    for (int t = 0; t < n && !dead; ++t) {
                        if (t == s) continue;
                        int row = tau.p[static_cast<std::size_t>(t)];
                        prod = ring.mul(prod, a.at(row, pi.p[static_cast<std::size_t>(row)]));
                        dead = ring.is_zero(prod);
                    }
                    if (dead) continue;
                    total = pi.sign > 0 ? ring.add(total, prod) : ring_sub(ring, total, prod);
                }
            }
            out.at(r, s) = total;
        }
    }
    return out;
}

// Independent route to the preadjoint: entry (r,s) is (-1)^{r+s} times the
// sdet of the minor that deletes row s and column r.  Kept separate from
// preadjoint() on purpose; the two are cross-checked in the test suites,
// never merged.
template <Ring R>
Matrix<typename R::Element> preadjoint_via_minors(const R& ring,
                                                  const Matrix<typename R::Element>& a) {
    const int n = a.size();
    if (n < 2) throw DomainError("preadjoint_via_minors needs n >= 2");
    auto out = mat_zero(ring, n);
    Matrix<typename R::Element> minor(n - 1, ring.zero());
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            int mi = 0;
            for (int i = 0; i < n; ++i) {
                if (i == s) continue; // delete row s
                int mj = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == r) continue; // delete column r
                    minor.at(mi, mj) = a.at(i, j);
                    ++mj;
                }
                ++mi;
            }
            auto d = sdet(ring, minor);
            out.at(r, s) = ((r + s) % 2 == 0) ? d : ring.neg(d);
        }
    }
    return out;
}

// P_1 = A*, P_{i+1} = (A P_1 .. P_i)*; returns P_1..P_k.
template <Ring R>
std::vector<Matrix<typename R::Element>> right_adjoint_sequence(
    const R& ring, const Matrix<typename R::Element>& a, unsigned k) {
    if (k < 1) throw DomainError("adjoint sequence level must be >= 1");
    std::vector<Matrix<typename R::Element>> ps;
    auto prod = a; // invariant: prod = A P_1 .. P_i after step i
    for (unsigned i = 0; i < k; ++i) {
        ps.push_back(preadjoint(ring, prod));
        prod = mat_mul(ring, prod, ps.back());
    }
    return ps;
}

// Q_1 = A*, Q_{i+1} = (Q_i .. Q_1 A)*; returns Q_1..Q_k.
template <Ring R>
std::vector<Matrix<typename R::Element>> left_adjoint_sequence(
    const R& ring, const Matrix<typename R::Element>& a, unsigned k) {
    if (k < 1) throw DomainError("adjoint sequence level must be >= 1");
    std::vector<Matrix<typename R::Element>> qs;
    auto prod = a; // invariant: prod = Q_i .. Q_1 A after step i
    for (unsigned i = 0; i < k; ++i) {
        qs.push_back(preadjoint(ring, prod));
        prod = mat_mul(ring, qs.back(), prod);
    }
    return qs;
}

// rdet_(k)(A) = tr(A P_1 .. P_k); rdet_(1) = sdet.
template <Ring R>
typename R::Element rdet(const R& ring, const Matrix<typename R::Element>& a, unsigned k) {
    if (k < 1) throw DomainError("determinant level must be >= 1");
    auto prod = a;
    for (unsigned i = 0; i < k; ++i) prod = mat_mul(ring, prod, preadjoint(ring, prod));
    return trace(ring, prod);
}

// ldet_(k)(A) = tr(Q_k .. Q_1 A); ldet_(1) = sdet.
template <Ring R>
typename R::Element ldet(const R& ring, const Matrix<typename R::Element>& a, unsigned k) {
    if (k < 1) throw DomainError("determinant level must be >= 1");
    auto prod = a;
    for (unsigned i = 0; i < k; ++i) prod = mat_mul(ring, preadjoint(ring, prod), prod);
    return trace(ring, prod);
}

enum class Side { right, left };

// Leading coefficient of the level-k characteristic polynomial:
// n * ((n-1)!)^(1 + n + .. + n^{k-1}), independent of the matrix.
inline BigInt char_poly_leading(int n, unsigned k) {
    BigInt expo = 0, npow = 1;
    for (unsigned i = 0; i < k; ++i) {
        expo += npow;
        npow *= n;
    }
    BigInt base = factorial(static_cast<unsigned>(n - 1));
    BigInt acc = 1;
    for (BigInt i = 0; i < expo; ++i) acc *= base;
    return n * acc;
}

inline unsigned char_poly_degree(int n, unsigned k) {
    double estimate = 1;
    unsigned deg = 1;
    for (unsigned i = 0; i < k; ++i) {
        estimate *= n;
        if (estimate > 65536.0) throw DomainError("characteristic polynomial degree n^k too large");
        deg *= static_cast<unsigned>(n);
    }
    return deg;
}

// Coefficients of rdet_(k)(xI - A) (or the ldet variant), lowest degree
// first, padded to exactly n^k + 1 entries.  The leading coefficient must
// come out as the scalar above; a mismatch is flagged loudly instead of
// being normalized away.
template <Ring R>
struct CharPolyResult {
    Side side = Side::right;
    unsigned level = 1;
    int size = 0;
    std::vector<typename R::Element> coefficients;

    unsigned degree() const { return static_cast<unsigned>(coefficients.size()) - 1; }
};

template <Ring R>
CharPolyResult<R> char_poly(const R& ring, const Matrix<typename R::Element>& a, unsigned k,
                            Side side = Side::right) {
    const int n = a.size();
    const unsigned deg = char_poly_degree(n, k);
    PolynomialRing<R> px(ring, "x");
    auto b = mat_zero(px, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto c = px.neg(px.lift(a.at(i, j)));
            if (i == j) c = px.add(c, px.variable());
            b.at(i, j) = c;
        }
    auto p = side == Side::right ? rdet(px, b, k) : ldet(px, b, k);
    CharPolyResult<R> out;
    out.side = side;
    out.level = k;
    out.size = n;
    out.coefficients.reserve(deg + 1);
    for (unsigned t = 0; t <= deg; ++t) out.coefficients.push_back(px.coefficient(p, t));
    if (px.degree(p) != static_cast<int>(deg) ||
        !ring.eq(out.coefficients.back(), ring.from_rational(Rational(char_poly_leading(n, k)))))
        throw TheoremViolationError("characteristic polynomial leading coefficient is off");
    return out;
}

// sum A^t c_t (coefficients acting from the right).
template <Ring R>
Matrix<typename R::Element> right_substitute(const R& ring,
                                             const std::vector<typename R::Element>& coeffs,
                                             const Matrix<typename R::Element>& a) {
    if (coeffs.empty()) return mat_zero(ring, a.size());
    auto acc = mat_zero(ring, a.size());
    auto apow = mat_identity(ring, a.size());
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (t > 0) apow = mat_mul(ring, apow, a);
        if (!ring.is_zero(coeffs[t])) acc = mat_add(ring, acc, right_scale(ring, apow, coeffs[t]));
    }
    return acc;
}

// sum c_t A^t (coefficients acting from the left).
template <Ring R>
Matrix<typename R::Element> left_substitute(const R& ring,
                                            const std::vector<typename R::Element>& coeffs,
                                            const Matrix<typename R::Element>& a) {
    if (coeffs.empty()) return mat_zero(ring, a.size());
    auto acc = mat_zero(ring, a.size());
    auto apow = mat_identity(ring, a.size());
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (t > 0) apow = mat_mul(ring, apow, a);
        if (!ring.is_zero(coeffs[t])) acc = mat_add(ring, acc, left_scale(ring, coeffs[t], apow));
    }
    return acc;
}

} // namespace ncdet
