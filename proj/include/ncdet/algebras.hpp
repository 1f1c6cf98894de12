// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/determinant.hpp"
#include "ncdet/endomorphism.hpp"
#include "ncdet/grassmann.hpp"
#include "ncdet/matrix.hpp"
#include "ncdet/polynomial.hpp"
#include "ncdet/ring.hpp"
#include "ncdet/skew_polynomial.hpp"

namespace ncdet {

// Sanity probe (not a proof) that delta^n = id, run on the ring's generators
// plus a few seeded samples.
template <Ring R>
void require_power_identity(const Endomorphism<R>& delta, unsigned n) {
    if (n < 1) throw DomainError("order must be positive");
    std::vector<typename R::Element> probes;
    if constexpr (requires { delta.ring.generators(); }) {
        for (const auto& g : delta.ring.generators()) probes.push_back(g);
    }
    SplitMix64 rng(0xd1a60ULL + n);
    for (int t = 0; t < 8; ++t) probes.push_back(delta.ring.sample(rng));
    for (const auto& p : probes)
        if (!delta.ring.eq(delta.iterate(p, n), p))
            throw StructureError(delta.label + "^" + std::to_string(n) + " is not the identity");
}

// The matrices A with delta(A) (entrywise) equal to W A W^{-1}.  W and its
// claimed inverse are verified against each other at construction; whether
// the entries of W are central is probed once (against the ring generators)
// and recorded, since the closure and trace statements assume it.
template <Ring R>
class DeltaWAlgebra {
public:
    DeltaWAlgebra(Endomorphism<R> delta, Matrix<typename R::Element> w,
                  Matrix<typename R::Element> winv, std::string label)
        : delta_(std::move(delta)), w_(std::move(w)), winv_(std::move(winv)),
          label_(std::move(label)) {
        const R& ring = delta_.ring;
        detail::require_same_size(w_.size(), winv_.size(), "DeltaWAlgebra");
        auto id = mat_identity(ring, w_.size());
        if (!mat_eq(ring, mat_mul(ring, w_, winv_), id) ||
            !mat_eq(ring, mat_mul(ring, winv_, w_), id))
            throw StructureError(label_ + ": W and claimed inverse do not invert each other");
        entries_central_ = true;
        if constexpr (requires { ring.generators(); }) {
            for (const auto& g : ring.generators())
                for (int i = 0; i < w_.size() && entries_central_; ++i)
                    for (int j = 0; j < w_.size() && entries_central_; ++j)
                        if (!ring.is_zero(commutator(ring, w_.at(i, j), g)) ||
                            !ring.is_zero(commutator(ring, winv_.at(i, j), g)))
                            entries_central_ = false;
        }
    }

    const R& ring() const { return delta_.ring; }
    const Endomorphism<R>& delta() const { return delta_; }
    const Matrix<typename R::Element>& w() const { return w_; }
    const Matrix<typename R::Element>& winv() const { return winv_; }
    const std::string& label() const { return label_; }
    int size() const { return w_.size(); }
    bool entries_central() const { return entries_central_; }

    bool contains(const Matrix<typename R::Element>& a) const {
        detail::require_same_size(a.size(), w_.size(), "membership");
        auto lhs = delta_entrywise(delta_, a);
        auto rhs = mat_mul(ring(), mat_mul(ring(), w_, a), winv_);
        return mat_eq(ring(), lhs, rhs);
    }

private:
    Endomorphism<R> delta_;
    Matrix<typename R::Element> w_;
    Matrix<typename R::Element> winv_;
    std::string label_;
    bool entries_central_ = false;
};

// Entrywise form of membership for a transitive shape matrix T:
// delta(a_ij) = t_ij a_ij.
template <Ring R>
bool membership_entrywise(const Endomorphism<R>& delta,
                          const TransitiveMatrix<typename R::Element>& t,
                          const Matrix<typename R::Element>& a) {
    detail::require_same_size(a.size(), t.size(), "membership");
    const R& ring = delta.ring;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!ring.eq(delta.map(a.at(i, j)), ring.mul(t.at(i, j), a.at(i, j)))) return false;
    return true;
}

// The W-form equivalent of a transitive shape: W = diag(t_{i,1}), whose
// inverse is diag(t_{1,i}).
template <Ring R>
DeltaWAlgebra<R> algebra_from_transitive(const Endomorphism<R>& delta,
                                         const TransitiveMatrix<typename R::Element>& t,
                                         const std::string& label) {
    const R& ring = delta.ring;
    int n = t.size();
    auto w = mat_zero(ring, n);
    auto winv = mat_zero(ring, n);
    for (int i = 0; i < n; ++i) {
        w.at(i, i) = t.at(i, 0);
        winv.at(i, i) = t.at(0, i);
    }
    return DeltaWAlgebra<R>(delta, w, winv, label);
}

// When W's entries are central, traces of members land in Fix(delta).
template <Ring R>
bool trace_fix_check(const DeltaWAlgebra<R>& alg, const Matrix<typename R::Element>& a) {
    if (!alg.entries_central())
        throw DomainError(alg.label() + ": trace statement needs central W entries");
    if (!alg.contains(a)) throw DomainError(alg.label() + ": matrix is not a member");
    return fix_membership(alg.delta(), trace(alg.ring(), a));
}

// r -> diag(r, delta(r), .., delta^{n-1}(r)); an embedding of R into the
// H-twisted matrix algebra whenever delta^n = id.
template <Ring R>
Matrix<typename R::Element> diagonal_embedding(const Endomorphism<R>& delta, int n,
                                               const typename R::Element& r) {
    auto out = mat_zero(delta.ring, n);
    auto img = r;
    for (int i = 0; i < n; ++i) {
        out.at(i, i) = img;
        if (i + 1 < n) img = delta.map(img);
    }
    return out;
}

// The target of the diagonal embedding: W = H (cyclic shift), W^{-1} = H^T.
template <Ring R>
DeltaWAlgebra<R> cyclic_twist_algebra(const Endomorphism<R>& delta, int n) {
    auto h = cyclic_shift(delta.ring, n);
    return DeltaWAlgebra<R>(delta, h, mat_transpose(h), "cyclic(" + delta.label + ")");
}

template <Ring R>
Matrix<Polynomial<typename R::Element>> lift_matrix(const PolynomialRing<R>& px,
                                                    const Matrix<typename R::Element>& a) {
    auto out = mat_zero(px, a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = px.lift(a.at(i, j));
    return out;
}

// sum r_i w^i -> sum diag-embed(r_i) H^i z^i, a ring embedding of R[w;delta]
// into n x n matrices over R[z] (z untwisted, H carrying the twist).
template <Ring R>
Matrix<Polynomial<typename R::Element>> skew_matrix_embedding(
    const Endomorphism<R>& delta, int n, const PolynomialRing<R>& pz,
    const SkewPolynomial<typename R::Element>& f) {
    auto out = mat_zero(pz, n);
    auto h = lift_matrix(pz, cyclic_shift(delta.ring, n));
    auto hpow = mat_identity(pz, n);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i > 0) hpow = mat_mul(pz, hpow, h);
        if (delta.ring.is_zero(f.coeffs[i])) continue;
        auto term = lift_matrix(pz, diagonal_embedding(delta, n, f.coeffs[i]));
        term = mat_mul(pz, term, hpow);
        term = right_scale(pz, term, pz.monomial(pz.base().one(), static_cast<unsigned>(i)));
        out = mat_add(pz, out, term);
    }
    return out;
}

// General extension: given phi : R -> M_n(R) intertwining delta with the
// entrywise action, and W over Fix(delta) with a supplied inverse, maps
// sum r_i w^i -> sum phi(r_i) W^i z^i.  With phi the diagonal embedding and
// W = H this must coincide with skew_matrix_embedding (tested, not assumed:
// the two are implemented independently).
template <Ring R>
Matrix<Polynomial<typename R::Element>> twisted_series_extension(
    const R& ring, const PolynomialRing<R>& pz,
    const std::function<Matrix<typename R::Element>(const typename R::Element&)>& phi, int n,
    const Matrix<typename R::Element>& w_mat, const SkewPolynomial<typename R::Element>& f) {
    auto out = mat_zero(pz, n);
    auto w_lift = lift_matrix(pz, w_mat);
    auto wpow = mat_identity(pz, n);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (i > 0) wpow = mat_mul(pz, wpow, w_lift);
        if (ring.is_zero(f.coeffs[i])) continue;
        auto term = mat_mul(pz, lift_matrix(pz, phi(f.coeffs[i])), wpow);
        term = right_scale(pz, term, pz.monomial(pz.base().one(), static_cast<unsigned>(i)));
        out = mat_add(pz, out, term);
    }
    return out;
}

// Vandermonde-style change of basis for a unit sequence g_1..g_n subject to
//   sum_{m=1..n} g_i^{-m} g_j^m = 0          (i != j)
//   sum_i g_i^k = sum_i g_i^{-k} = 0         (1 <= k <= n-1).
// V = [g_i^{-k}], U = (1/n)[g_j^k]; the conditions make U = V^{-1}.
template <Ring R>
struct VandermondePair {
    Matrix<typename R::Element> v;
    Matrix<typename R::Element> u;
    std::vector<typename R::Element> units;
    std::vector<typename R::Element> inverses;
};

template <Ring R>
VandermondePair<R> vandermonde_pair(const R& ring, const std::vector<typename R::Element>& g) {
    const int n = static_cast<int>(g.size());
    if (n < 1) throw DomainError("empty unit sequence");
    std::vector<typename R::Element> ginv;
    for (const auto& gi : g) {
        auto inv = ring.try_inverse(gi);
        if (!inv) throw DomainError("vandermonde_pair: element is not a unit");
        ginv.push_back(*inv);
    }
    auto gpow = [&](int i, long long k) { // g_i^k for any integer k
        auto base = k >= 0 ? g[static_cast<std::size_t>(i)] : ginv[static_cast<std::size_t>(i)];
        return ring_pow(ring, base, static_cast<unsigned>(k >= 0 ? k : -k));
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto s = ring.zero();
            for (int m = 1; m <= n; ++m) s = ring.add(s, ring.mul(gpow(i, -m), gpow(j, m)));
            if (!ring.is_zero(s))
                throw StructureError("unit sequence violates sum_m g_" + std::to_string(i + 1) +
                                     "^-m g_" + std::to_string(j + 1) + "^m = 0; sum is " +
                                     ring.to_string(s));
        }
    for (int k = 1; k < n; ++k) {
        for (int sign = 0; sign < 2; ++sign) {
            auto s = ring.zero();
            for (int i = 0; i < n; ++i) s = ring.add(s, gpow(i, sign == 0 ? k : -k));
            if (!ring.is_zero(s))
                throw StructureError("unit sequence violates power sum k=" +
                                     std::to_string(sign == 0 ? k : -k) + " = 0; sum is " +
                                     ring.to_string(s));
        }
    }
    VandermondePair<R> out{mat_zero(ring, n), mat_zero(ring, n), g, ginv};
    auto ninv = ring.from_rational(Rational(BigInt(1), BigInt(n)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            out.v.at(i, k) = gpow(i, -(k + 1));
            out.u.at(k, i) = ring.mul(ninv, gpow(i, k + 1));
        }
    auto id = mat_identity(ring, n);
    if (!mat_eq(ring, mat_mul(ring, out.v, out.u), id) ||
        !mat_eq(ring, mat_mul(ring, out.u, out.v), id))
        throw TheoremViolationError("V U != I despite the unit sequence conditions");
    return out;
}

// Conjugated embedding r -> V diag-embed(r) V^{-1}, also computable entrywise
// as (1/n)[sum_k g_i^{-k-1} delta^k(r) g_j^{k+1}].  Both routes are computed
// and must agree.
template <Ring R>
Matrix<typename R::Element> vandermonde_embedding(const Endomorphism<R>& delta,
                                                  const VandermondePair<R>& vp,
                                                  const typename R::Element& r) {
    const R& ring = delta.ring;
    const int n = vp.v.size();
    auto conj = mat_mul(ring, mat_mul(ring, vp.v, diagonal_embedding(delta, n, r)), vp.u);
    auto direct = mat_zero(ring, n);
    auto ninv = ring.from_rational(Rational(BigInt(1), BigInt(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto s = ring.zero();
            auto img = r;
            for (int k = 0; k < n; ++k) {
                auto term = ring.mul(ring_pow(ring, vp.inverses[static_cast<std::size_t>(i)],
                                              static_cast<unsigned>(k + 1)),
                                     img);
                term = ring.mul(term, ring_pow(ring, vp.units[static_cast<std::size_t>(j)],
                                               static_cast<unsigned>(k + 1)));
                s = ring.add(s, term);
                if (k + 1 < n) img = delta.map(img);
            }
            direct.at(i, j) = ring.mul(ninv, s);
        }
    if (!mat_eq(ring, conj, direct))
        throw TheoremViolationError("vandermonde embedding routes disagree");
    return direct;
}

// A Z_n-grading of a ring, presented through its component projections.
// proj(a, i) extracts the R_i part; the projections must sum to the
// identity map and satisfy R_i R_j subset R_{i+j mod n} (checkable below).
template <Ring R>
struct GradedRingView {
    R ring;
    unsigned modulus = 0;
    std::string label;
    std::function<typename R::Element(const typename R::Element&, unsigned)> component;

    typename R::Element project(const typename R::Element& a, unsigned i) const {
        return component(a, i % modulus);
    }

    bool in_component(const typename R::Element& a, unsigned i) const {
        return ring.eq(project(a, i), a);
    }
};

// Monomial degree mod n grading of a Grassmann algebra (n = 2 recovers the
// even/odd split).
template <Ring Scalar>
GradedRingView<GrassmannRing<Scalar>> grassmann_degree_grading(const GrassmannRing<Scalar>& ring,
                                                               unsigned n) {
    return {ring, n, "monomial degree mod " + std::to_string(n),
            [ring, n](const GrassmannElement<typename Scalar::Element>& a, unsigned i) {
                return ring.residue_component(a, i, n);
            }};
}

template <Ring R>
GradedRingView<PolynomialRing<R>> polynomial_exponent_grading(const PolynomialRing<R>& ring,
                                                              unsigned n) {
    return {ring, n, ring.variable_name() + "-exponent mod " + std::to_string(n),
            [ring, n](const Polynomial<typename R::Element>& p, unsigned i) {
                return exponent_residue_split(ring, p, n)[i];
            }};
}

// Sampling check of the grading laws.
template <Ring R>
std::optional<std::string> check_grading(const GradedRingView<R>& view, std::uint64_t seed,
                                         int trials) {
    const R& ring = view.ring;
    const unsigned n = view.modulus;
    if (!view.in_component(ring.one(), 0)) return std::string("1 is not in component 0");
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto a = ring.sample(rng);
        auto sum = ring.zero();
        for (unsigned i = 0; i < n; ++i) {
            auto ai = view.project(a, i);
            sum = ring.add(sum, ai);
            for (unsigned j = 0; j < n; ++j) {
                auto twice = view.project(ai, j);
                bool want_same = (j == i);
                if (want_same ? !ring.eq(twice, ai) : !ring.is_zero(twice))
                    return std::string("projections are not orthogonal idempotents");
            }
        }
        if (!ring.eq(sum, a)) return std::string("components do not sum to the element");
        auto b = ring.sample(rng);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                auto prod = ring.mul(view.project(a, i), view.project(b, j));
                if (!view.in_component(prod, (i + j) % n))
                    return std::string("R_i R_j escapes R_{i+j}");
            }
    }
    return std::nullopt;
}

// Graded matrix: a_{ij} lies in component (j - i) mod n.
template <Ring R>
bool graded_matrix_membership(const GradedRingView<R>& view,
                              const Matrix<typename R::Element>& a) {
    const unsigned n = view.modulus;
    if (a.size() != static_cast<int>(n))
        throw DomainError("graded matrix size must equal the grading modulus");
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            unsigned r = static_cast<unsigned>(((j - i) % static_cast<int>(n) + static_cast<int>(n))) % n;
            if (!view.in_component(a.at(i, j), r)) return false;
        }
    return true;
}

// r = r_0 + .. + r_{n-1} -> sum r_i H^i, i.e. the matrix with (i,j) entry
// r_{(j-i) mod n}; a ring embedding landing in the graded matrices.
template <Ring R>
Matrix<typename R::Element> graded_embedding(const GradedRingView<R>& view,
                                             const typename R::Element& r) {
    const int n = static_cast<int>(view.modulus);
    auto out = mat_zero(view.ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = view.project(r, static_cast<unsigned>(((j - i) % n + n) % n));
    return out;
}

using ProgressFn = std::function<void(const std::string&)>;

// A monic relation c_0 + r c_1 + .. + r^{deg-1} c_{deg-1} + r^deg = 0 with
// right coefficients drawn from a designated subring; residual keeps the
// actual value of the left side so failures are inspectable.
template <Ring R>
struct IntegralityWitness {
    unsigned degree = 0;
    std::vector<typename R::Element> coefficients; // c_0..c_{deg-1}
    bool coefficients_in_subring = false;
    bool relation_holds = false;
    typename R::Element residual;

    bool verified() const { return coefficients_in_subring && relation_holds; }
};

namespace detail {
// Shared tail: divide the characteristic coefficients by the leading scalar,
// test them against `in_subring`, and substitute into the relation.
template <Ring R, typename Pred>
IntegralityWitness<R> witness_from_char_poly(const R& ring, const CharPolyResult<R>& cp,
                                             const typename R::Element& r, Pred&& in_subring) {
    IntegralityWitness<R> out;
    out.degree = cp.degree();
    auto qinv = ring.from_rational(Rational(BigInt(1), char_poly_leading(cp.size, cp.level)));
    out.coefficients_in_subring = true;
    for (unsigned t = 0; t < out.degree; ++t) {
        auto c = ring.mul(cp.coefficients[t], qinv);
        if (!in_subring(c)) out.coefficients_in_subring = false;
        out.coefficients.push_back(std::move(c));
    }
    auto res = ring.zero();
    auto rpow = ring.one();
    for (unsigned t = 0; t < out.degree; ++t) {
        if (t > 0) rpow = ring.mul(rpow, r);
        res = ring.add(res, ring.mul(rpow, out.coefficients[t]));
    }
    res = ring.add(res, ring_pow(ring, r, out.degree));
    out.residual = res;
    out.relation_holds = ring.is_zero(res);
    return out;
}
} // namespace detail

// Integrality of r over Fix(delta): coefficients from the level-k
// characteristic polynomial of diag(r, delta r, ..), scaled monic.
template <Ring R>
IntegralityWitness<R> integrality_witness(const Endomorphism<R>& delta, int n, unsigned k,
                                          const typename R::Element& r,
                                          const ProgressFn& progress = {}) {
    const R& ring = delta.ring;
    if (progress) progress("embedding");
    auto a = diagonal_embedding(delta, n, r);
    if (progress) progress("characteristic polynomial");
    auto cp = char_poly(ring, a, k, Side::right);
    if (progress) progress("substitution");
    return detail::witness_from_char_poly(ring, cp, r, [&](const typename R::Element& c) {
        return fix_membership(delta, c);
    });
}

// Integrality of r over the degree-0 component of a Z_n-grading.
template <Ring R>
IntegralityWitness<R> graded_integrality_witness(const GradedRingView<R>& view, unsigned k,
                                                 const typename R::Element& r,
                                                 const ProgressFn& progress = {}) {
    if (progress) progress("embedding");
    auto a = graded_embedding(view, r);
    if (progress) progress("characteristic polynomial");
    auto cp = char_poly(view.ring, a, k, Side::right);
    if (progress) progress("substitution");
    return detail::witness_from_char_poly(view.ring, cp, r, [&](const typename R::Element& c) {
        return view.in_component(c, 0);
    });
}

// Integrality of f in R[w; delta] over Fix(delta)[w^n]: the matrix-over-R[z]
// image of f has a level-k characteristic polynomial whose coefficients must
// be supported on z-exponents divisible by n with Fix(delta) coefficients
// (asserted, not projected); transporting z^{nd} -> w^{nd} and scaling monic
// gives the relation, verified by skew multiplication.
template <Ring R>
struct SkewIntegralityWitness {
    unsigned degree = 0;
    std::vector<SkewPolynomial<typename R::Element>> coefficients; // g_0..g_{deg-1}
    bool relation_holds = false;
    SkewPolynomial<typename R::Element> residual;

    bool verified() const { return relation_holds; }
};

template <Ring R>
SkewIntegralityWitness<R> skew_integrality_witness(const SkewPolynomialRing<R>& sk, int n,
                                                   unsigned k,
                                                   const SkewPolynomial<typename R::Element>& f,
                                                   const ProgressFn& progress = {}) {
    const R& base = sk.base();
    const auto& delta = sk.twist();
    PolynomialRing<R> pz(base, "z");
    if (progress) progress("embedding");
    auto m = skew_matrix_embedding(delta, n, pz, f);
    if (progress) progress("characteristic polynomial");
    auto cp = char_poly(pz, m, k, Side::right);
    if (progress) progress("support check");
    const unsigned deg = cp.degree();
    Rational qinv(BigInt(1), char_poly_leading(n, k));
    SkewIntegralityWitness<R> out;
    out.degree = deg;
    for (unsigned t = 0; t < deg; ++t) {
        const auto& lambda = cp.coefficients[t];
        auto g = sk.zero();
        for (std::size_t e = 0; e < lambda.coeffs.size(); ++e) {
            const auto& c = lambda.coeffs[e];
            if (base.is_zero(c)) continue;
            if (e % static_cast<unsigned>(n) != 0)
                throw TheoremViolationError(
                    "characteristic coefficient " + std::to_string(t) +
                    " has z-support off the n-th powers (exponent " + std::to_string(e) + ")");
            if (!fix_membership(delta, c))
                throw TheoremViolationError("characteristic coefficient " + std::to_string(t) +
                                            " leaves the fixed subring");
            g = sk.add(g, sk.monomial(base.mul(c, base.from_rational(qinv)),
                                      static_cast<unsigned>(e)));
        }
        out.coefficients.push_back(std::move(g));
    }
    if (progress) progress("substitution");
    auto res = sk.zero();
    auto fpow = sk.one();
    for (unsigned t = 0; t < deg; ++t) {
        if (t > 0) fpow = sk.mul(fpow, f);
        if (!sk.is_zero(out.coefficients[t]))
            res = sk.add(res, sk.mul(fpow, out.coefficients[t]));
    }
    res = sk.add(res, ring_pow(sk, f, deg));
    out.residual = res;
    out.relation_holds = sk.is_zero(res);
    return out;
}

} // namespace ncdet
