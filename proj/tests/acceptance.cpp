// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: eleven exact criteria, one pass/fail line each, exit 0
// only when every one holds.  Tolerances are all zero; every comparison is
// exact equality in the ring at hand.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ncdet/determinant.hpp"
#include "ncdet/verify.hpp"
#include "oracles.hpp"

using namespace ncdet;

namespace {

using Clock = std::chrono::steady_clock;

using GrRing = GrassmannRing<RationalRing>;
using GrCyclo = GrassmannRing<CyclotomicRing>;

std::string g_detail;  // first failure explanation of the current criterion

bool fail(std::string detail) {
    g_detail = std::move(detail);
    return false;
}

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

// 1. sdet = n! det and preadjoint = (n-1)! adj over the rationals, against
//    the classical cofactor oracle.
bool commutative_collapse() {
    RationalRing q;
    SplitMix64 rng(0xACC001);
    for (int n = 2; n <= 4; ++n) {
        auto nfac = q.from_rational(factorial(n));
        auto n1fac = q.from_rational(factorial(n - 1));
        for (int t = 0; t < 100; ++t) {
            auto a = mat_zero(q, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    a.at(i, j) = q.from_rational(Rational(rng.range(-9, 9)));
            if (!q.eq(sdet(q, a), q.mul(nfac, testing::det_cofactor(q, a))))
                return fail("sdet != n! det at n=" + std::to_string(n) + " trial " +
                            std::to_string(t) + ", A = " + mat_to_string(q, a));
            auto expected = left_scale(q, n1fac, testing::adjugate_classical(q, a));
            if (!mat_eq(q, preadjoint(q, a), expected))
                return fail("preadjoint != (n-1)! adj at n=" + std::to_string(n) + " trial " +
                            std::to_string(t) + ", A = " + mat_to_string(q, a));
        }
    }
    return true;
}

// 2. The permutation-sum preadjoint equals the minor-based route over the
//    grassmann algebra on four generators.
bool preadjoint_cross_check() {
    GrRing E(RationalRing{}, 4);
    SplitMix64 rng(0xACC002);
    for (int n = 2; n <= 3; ++n)
        for (int t = 0; t < 100; ++t) {
            auto a = dense_member(E, n, rng);
            if (!mat_eq(E, preadjoint(E, a), preadjoint_via_minors(E, a)))
                return fail("routes disagree at n=" + std::to_string(n) + " trial " +
                            std::to_string(t) + ", A = " + mat_to_string(E, a));
        }
    return true;
}

struct Families {
    GrRing E{RationalRing{}, 4};
    GrCyclo Ec{CyclotomicRing(3), 4};
    Endomorphism<GrRing> eps = parity_endo(E);
    Endomorphism<GrCyclo> rho = root_scaling_endo(Ec);
    TransitiveMatrix<GrRing::Element> super_shape = transitive_from_units(
        E, {E.one(), E.neg(E.one())});
    TransitiveMatrix<GrCyclo::Element> rho_shape = transitive_from_units(
        Ec, {Ec.one(), Ec.from_scalar(Ec.scalar_ring().root_pow(1)),
             Ec.from_scalar(Ec.scalar_ring().root_pow(2))});
    DeltaWAlgebra<GrRing> super_alg = algebra_from_transitive(eps, super_shape, "supermatrix");
    DeltaWAlgebra<GrCyclo> rho_alg = algebra_from_transitive(rho, rho_shape, "rho_e");
    GradedRingView<GrRing> view3 = grassmann_degree_grading(E, 3);
};

// 3. Preadjoint closure on the three structured families.
bool preadjoint_closure(const Families& F) {
    SplitMix64 rng(0xACC003);
    for (int t = 0; t < 50; ++t) {
        auto a = supermatrix_member(F.E, 2, 1, rng);
        auto p = preadjoint(F.E, a);
        if (!F.super_alg.contains(p) || !membership_entrywise(F.eps, F.super_shape, p))
            return fail("supermatrix closure failed at trial " + std::to_string(t));
        auto b = root_residue_member(F.Ec, 3, rng);
        auto pb = preadjoint(F.Ec, b);
        if (!F.rho_alg.contains(pb) || !membership_entrywise(F.rho, F.rho_shape, pb))
            return fail("rho_e closure failed at trial " + std::to_string(t));
        auto c = graded_grassmann_matrix_member(F.E, 3, rng);
        if (!graded_matrix_membership(F.view3, preadjoint(F.E, c)))
            return fail("graded closure failed at trial " + std::to_string(t));
    }
    return true;
}

// 4. rdet/ldet at k in {1,2} and every characteristic coefficient lie in the
//    fixed ring (resp. the degree-zero component) for the same families.
bool determinant_membership(const Families& F) {
    SplitMix64 rng(0xACC004);
    auto fix_all = [](const auto& ring, const auto& delta, const auto& a, const char* who,
                      int t) {
        for (unsigned k = 1; k <= 2; ++k) {
            if (!fix_membership(delta, rdet(ring, a, k)) ||
                !fix_membership(delta, ldet(ring, a, k)))
                return std::string(who) + " rdet/ldet escaped Fix at k=" + std::to_string(k) +
                       " trial " + std::to_string(t);
            for (auto side : {Side::right, Side::left})
                for (const auto& coeff : char_poly(ring, a, k, side).coefficients)
                    if (!fix_membership(delta, coeff))
                        return std::string(who) + " char coefficient escaped Fix at k=" +
                               std::to_string(k) + " trial " + std::to_string(t);
        }
        return std::string();
    };
    for (int t = 0; t < 50; ++t) {
        auto err = fix_all(F.E, F.eps, supermatrix_member(F.E, 2, 1, rng), "supermatrix", t);
        if (!err.empty()) return fail(err);
        err = fix_all(F.Ec, F.rho, root_residue_member(F.Ec, 3, rng), "rho_e", t);
        if (!err.empty()) return fail(err);
        auto c = graded_grassmann_matrix_member(F.E, 3, rng);
        for (unsigned k = 1; k <= 2; ++k) {
            if (!F.view3.in_component(rdet(F.E, c, k), 0) ||
                !F.view3.in_component(ldet(F.E, c, k), 0))
                return fail("graded rdet/ldet left R_0 at trial " + std::to_string(t));
            for (auto side : {Side::right, Side::left})
                for (const auto& coeff : char_poly(F.E, c, k, side).coefficients)
                    if (!F.view3.in_component(coeff, 0))
                        return fail("graded char coefficient left R_0 at trial " +
                                    std::to_string(t));
        }
    }
    return true;
}

// 5. Cayley-Hamilton at level 2 on supermatrices: the degree-4 identity with
//    leading coefficient 2, plus one 3x3 (degree-9) spot check.
bool cayley_hamilton(const Families& F) {
    SplitMix64 rng(0xACC005);
    auto two = F.E.from_rational(Rational(2));
    for (int t = 0; t < 20; ++t) {
        auto a = supermatrix_member(F.E, 2, 1, rng);
        auto cp = char_poly(F.E, a, 2, Side::right);
        if (cp.degree() != 4 || cp.coefficients.size() != 5)
            return fail("level-2 characteristic polynomial is not degree 4");
        if (!F.E.eq(cp.coefficients.back(), two))
            return fail("leading coefficient is not 2 at trial " + std::to_string(t));
        if (!mat_is_zero(F.E, right_substitute(F.E, cp.coefficients, a)))
            return fail("right substitution is nonzero at trial " + std::to_string(t) +
                        ", A = " + mat_to_string(F.E, a));
    }
    auto a3 = supermatrix_member(F.E, 3, 1, rng);
    auto cp3 = char_poly(F.E, a3, 2, Side::right);
    if (cp3.degree() != 9 || !mat_is_zero(F.E, right_substitute(F.E, cp3.coefficients, a3)))
        return fail("3x3 degree-9 spot check failed");
    return true;
}

// 6. Integrality witnesses over the even part, through both the fixed-ring
//    and the graded route, plus the block-parity corollary once.
bool integrality(const Families& F) {
    SplitMix64 rng(0xACC006);
    auto view2 = grassmann_degree_grading(F.E, 2);
    for (int t = 0; t < 20; ++t) {
        auto r = F.E.sample(rng);
        auto w = integrality_witness(F.eps, 2, 2, r);
        if (w.degree != 4 || !w.verified())
            return fail("fixed-ring witness failed at trial " + std::to_string(t) + " for r = " +
                        F.E.to_string(r) + "; residual = " + F.E.to_string(w.residual));
        for (const auto& c : w.coefficients)
            if (!fix_membership(F.eps, c))
                return fail("witness coefficient is odd at trial " + std::to_string(t));
        auto g = graded_integrality_witness(view2, 2, r);
        if (g.degree != 4 || !g.verified())
            return fail("graded witness failed at trial " + std::to_string(t));
        for (const auto& c : g.coefficients)
            if (!view2.in_component(c, 0))
                return fail("graded witness coefficient left R_0 at trial " + std::to_string(t));
    }
    // Block-parity corollary: a random member of the n=2, d=1 family is
    // integral over the even part with a monic degree-4 relation.
    auto a = supermatrix_member(F.E, 2, 1, rng);
    auto cp = char_poly(F.E, a, 2, Side::right);
    auto qinv = F.E.from_rational(Rational(BigInt(1), BigInt(2)));
    std::vector<GrRing::Element> monic;
    for (unsigned t = 0; t < 4; ++t) {
        auto c = F.E.mul(cp.coefficients[t], qinv);
        if (!fix_membership(F.eps, c)) return fail("corollary coefficient is odd");
        monic.push_back(c);
    }
    monic.push_back(F.E.one());
    if (!mat_is_zero(F.E, right_substitute(F.E, monic, a)))
        return fail("monic degree-4 matrix relation failed");
    return true;
}

// 7. Skew integrality for f = v1 w and f = w over E[w; parity], n = k = 2;
//    the witness computation itself enforces the z-power support assertion.
bool skew_integrality(const Families& F) {
    SkewPolynomialRing<GrRing> sk(F.E, F.eps);
    auto check = [&](const SkewPolynomial<GrRing::Element>& f, const char* label) {
        auto w = skew_integrality_witness(sk, 2, 2, f);
        if (w.degree != 4 || !w.verified())
            return fail(std::string(label) + ": relation failed; residual = " +
                        sk.to_string(w.residual));
        return true;
    };
    if (!check(sk.monomial(F.E.generator(1), 1), "f = v1 w")) return false;
    if (!check(sk.variable(), "f = w")) return false;
    // Frozen shape for f = w: c_0 = w^4, c_2 = -2 w^2, the rest zero.
    auto w = skew_integrality_witness(sk, 2, 2, sk.variable());
    auto w4 = sk.monomial(F.E.one(), 4);
    auto m2w2 = sk.monomial(F.E.from_rational(Rational(-2)), 2);
    if (!sk.eq(w.coefficients[0], w4) || !sk.is_zero(w.coefficients[1]) ||
        !sk.eq(w.coefficients[2], m2w2) || !sk.is_zero(w.coefficients[3]))
        return fail("f = w witness coefficients do not match the closed form");
    return true;
}

// 8. The four embeddings are ring maps on 100 pairs each, V U = I for the
//    cyclotomic families n in {2,3,4}, and images land in their algebras.
bool embeddings(const Families& F) {
    SplitMix64 rng(0xACC008);
    const auto& E = F.E;
    PolynomialRing<GrRing> pz(E, "z");
    SkewPolynomialRing<GrRing> sk(E, F.eps);
    auto diag_alg = cyclic_twist_algebra(F.eps, 2);
    auto poly_alg = cyclic_twist_algebra(coefficientwise_endo(pz, F.eps), 2);
    auto vp = vandermonde_pair(E, {E.one(), E.neg(E.one())});
    auto vshape = transitive_from_units(E, {E.one(), E.neg(E.one())});
    auto view2 = grassmann_degree_grading(E, 2);
    for (int t = 0; t < 100; ++t) {
        auto r = E.sample(rng);
        auto s = E.sample(rng);
        auto dr = diagonal_embedding(F.eps, 2, r);
        if (!mat_eq(E, diagonal_embedding(F.eps, 2, E.mul(r, s)),
                    mat_mul(E, dr, diagonal_embedding(F.eps, 2, s))) ||
            !mat_eq(E, diagonal_embedding(F.eps, 2, E.add(r, s)),
                    mat_add(E, dr, diagonal_embedding(F.eps, 2, s))))
            return fail("diagonal embedding is not a ring map at trial " + std::to_string(t));
        if (!diag_alg.contains(dr))
            return fail("diagonal image left its algebra at trial " + std::to_string(t));

        auto f = sk.add(sk.lift(E.sample(rng)), sk.monomial(E.sample(rng), 1));
        auto g = sk.add(sk.lift(E.sample(rng)), sk.monomial(E.sample(rng), 1));
        auto pf = skew_matrix_embedding(F.eps, 2, pz, f);
        if (!mat_eq(pz, skew_matrix_embedding(F.eps, 2, pz, sk.mul(f, g)),
                    mat_mul(pz, pf, skew_matrix_embedding(F.eps, 2, pz, g))) ||
            !mat_eq(pz, skew_matrix_embedding(F.eps, 2, pz, sk.add(f, g)),
                    mat_add(pz, pf, skew_matrix_embedding(F.eps, 2, pz, g))))
            return fail("skew embedding is not a ring map at trial " + std::to_string(t));
        if (!poly_alg.contains(pf))
            return fail("skew image left its algebra at trial " + std::to_string(t));

        auto vr = vandermonde_embedding(F.eps, vp, r);
        if (!mat_eq(E, vandermonde_embedding(F.eps, vp, E.mul(r, s)),
                    mat_mul(E, vr, vandermonde_embedding(F.eps, vp, s))) ||
            !mat_eq(E, vandermonde_embedding(F.eps, vp, E.add(r, s)),
                    mat_add(E, vr, vandermonde_embedding(F.eps, vp, s))))
            return fail("conjugated embedding is not a ring map at trial " + std::to_string(t));
        if (!membership_entrywise(F.eps, vshape, vr))
            return fail("conjugated image left its shape at trial " + std::to_string(t));

        auto gr = graded_embedding(view2, r);
        if (!mat_eq(E, graded_embedding(view2, E.mul(r, s)),
                    mat_mul(E, gr, graded_embedding(view2, s))) ||
            !mat_eq(E, graded_embedding(view2, E.add(r, s)),
                    mat_add(E, gr, graded_embedding(view2, s))))
            return fail("circulant embedding is not a ring map at trial " + std::to_string(t));
        if (!graded_matrix_membership(view2, gr))
            return fail("circulant image is not graded at trial " + std::to_string(t));
    }
    for (unsigned n = 2; n <= 4; ++n) {
        GrCyclo Ec(CyclotomicRing(n), 4);
        std::vector<GrCyclo::Element> units;
        for (unsigned i = 0; i < n; ++i)
            units.push_back(Ec.from_scalar(Ec.scalar_ring().root_pow(i)));
        auto pair = vandermonde_pair(Ec, units);  // throws if V U != I
        if (!mat_eq(Ec, mat_mul(Ec, pair.v, pair.u), mat_identity(Ec, static_cast<int>(n))))
            return fail("V U != I for the cyclotomic family n = " + std::to_string(n));
    }
    return true;
}

// 9. The standard polynomial S_4 vanishes on the sign-twisted skew ring over
//    q[y] and on 2x2 rational matrices.
bool standard_identity() {
    PolynomialRing<RationalRing> py(RationalRing{}, "y");
    auto neg = polynomial_endo(py, identity_endo(RationalRing{}), py.neg(py.variable()), "neg",
                               2);
    SkewPolynomialRing<PolynomialRing<RationalRing>> sk(py, neg);
    SplitMix64 rng(0xACC009);
    for (int t = 0; t < 50; ++t) {
        std::vector<SkewPolynomial<Polynomial<Rational>>> xs;
        for (int i = 0; i < 4; ++i) xs.push_back(sk.sample(rng));
        if (!sk.is_zero(standard_poly(sk, xs)))
            return fail("S_4 did not vanish on the skew ring at trial " + std::to_string(t));
    }
    MatrixRing<RationalRing> m2(RationalRing{}, 2);
    for (int t = 0; t < 50; ++t) {
        std::vector<Matrix<Rational>> xs;
        for (int i = 0; i < 4; ++i) xs.push_back(m2.sample(rng));
        if (!m2.is_zero(standard_poly(m2, xs)))
            return fail("S_4 did not vanish on 2x2 matrices at trial " + std::to_string(t));
    }
    return true;
}

// 10. The transitive-matrix suite: unit round trips, blow-up transitivity,
//     and the Hadamard action (with its internal conjugation cross-check).
bool transitive_suite() {
    verify::Options o;
    o.theorem = "prop2_1";
    o.trials = 100;
    o.seed = 10;
    if (!verify::run(o).passed()) return fail("prop2_1 campaign failed");
    o.theorem = "prop2_4";
    if (!verify::run(o).passed()) return fail("prop2_4 campaign failed");
    return true;
}

// 11. Negative controls through the installed binary: every suite must exit 1
//     under sabotage, and a clean suite must exit 0.
bool negative_controls() {
    auto run_cli = [](const std::string& args) {
        std::string cmd = std::string(NCDET_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    if (run_cli("verify thm4_1 --trials 2") != 0)
        return fail("clean thm4_1 run did not exit 0");
    for (const auto& name : verify::suite_names()) {
        int code = run_cli("verify " + name + " --sabotage --trials 2");
        if (code != 1)
            return fail(name + " exited " + std::to_string(code) + " under sabotage, not 1");
    }
    return true;
}

} // namespace

int main() {
    Families F;
    struct Criterion {
        const char* label;
        std::function<bool()> body;
    };
    const std::vector<Criterion> criteria = {
        {"commutative collapse vs cofactor oracle (n=2..4, 300 trials)",
         [] { return commutative_collapse(); }},
        {"preadjoint equals the minor route over E (n=2..3, 200 trials)",
         [] { return preadjoint_cross_check(); }},
        {"preadjoint closure on supermatrix / rho_e / graded families (50 each)",
         [&] { return preadjoint_closure(F); }},
        {"rdet, ldet, char coefficients stay in Fix resp. R_0 (50 each)",
         [&] { return determinant_membership(F); }},
        {"level-2 Cayley-Hamilton, degree 4, leading 2 (20 trials + 3x3 spot)",
         [&] { return cayley_hamilton(F); }},
        {"integrality witnesses over the even part + block corollary (20 trials)",
         [&] { return integrality(F); }},
        {"skew integrality for f = v1 w and f = w (n = k = 2)",
         [&] { return skew_integrality(F); }},
        {"embedding ring maps, V U = I (n=2..4), image memberships (100 pairs)",
         [&] { return embeddings(F); }},
        {"S_4 vanishes on the sign-twisted skew ring and on 2x2 matrices (50 each)",
         [] { return standard_identity(); }},
        {"transitive-matrix round trips, blow-ups, Hadamard action (100 trials)",
         [] { return transitive_suite(); }},
        {"every verify suite exits 1 under sabotage, clean run exits 0",
         [] { return negative_controls(); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        g_detail.clear();
        auto start = Clock::now();
        bool ok = false;
        try {
            ok = criteria[i].body();
        } catch (const std::exception& ex) {
            g_detail = std::string("unexpected exception: ") + ex.what();
        }
        double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        std::printf("criterion %2zu: %s  %8.1f ms  %s\n", i + 1, ok ? "PASS" : "FAIL", ms,
                    criteria[i].label);
        if (!ok) {
            ++failed;
            std::fprintf(stderr, "  detail: %s\n", g_detail.c_str());
        }
    }
    if (failed > 0) std::fprintf(stderr, "%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
