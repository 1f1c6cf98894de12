// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "ncdet/determinant.hpp"
#include "ncdet/grassmann.hpp"
#include "oracles.hpp"

using namespace ncdet;

namespace {

Matrix<Rational> random_qmat(int n, SplitMix64& rng) {
    RationalRing q;
    auto m = mat_zero(q, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = q.sample(rng);
    return m;
}

using GrRing = GrassmannRing<RationalRing>;
using GrElem = GrassmannElement<Rational>;

Matrix<GrElem> random_emat(const GrRing& E, int n, SplitMix64& rng) {
    auto m = mat_zero(E, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = E.sample(rng);
    return m;
}

} // namespace

TEST_CASE("classical oracles behave classically") {
    RationalRing q;
    auto a = mat_from_rows(q, {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
    CHECK(testing::det_cofactor(q, a) == Rational(-2));
    auto adj = testing::adjugate_classical(q, a);
    CHECK(mat_eq(q, adj, mat_from_rows(q, {{Rational(4), Rational(-2)},
                                           {Rational(-3), Rational(1)}})));
    // A adj(A) = det(A) I.
    SplitMix64 rng(3);
    for (int n = 2; n <= 4; ++n) {
        auto m = random_qmat(n, rng);
        auto d = testing::det_cofactor(q, m);
        CHECK(mat_eq(q, mat_mul(q, m, testing::adjugate_classical(q, m)),
                     left_scale(q, d, mat_identity(q, n))));
    }
}

TEST_CASE("symmetrized determinant collapses to n! times the determinant") {
    RationalRing q;
    SplitMix64 rng(101);
    for (int n = 2; n <= 4; ++n) {
        for (int t = 0; t < 12; ++t) {
            auto a = random_qmat(n, rng);
            auto expected = Rational(BigInt(factorial(static_cast<unsigned>(n)))) *
                            testing::det_cofactor(q, a);
            CHECK(sdet(q, a) == expected);
        }
    }
}

TEST_CASE("preadjoint collapses to (n-1)! times the adjugate") {
    RationalRing q;
    SplitMix64 rng(103);
    for (int n = 2; n <= 4; ++n) {
        for (int t = 0; t < 8; ++t) {
            auto a = random_qmat(n, rng);
            auto expected = left_scale(q, Rational(BigInt(factorial(static_cast<unsigned>(n - 1)))),
                                       testing::adjugate_classical(q, a));
            CHECK(mat_eq(q, preadjoint(q, a), expected));
        }
    }
}

TEST_CASE("symmetrized determinant of an all-generator matrix") {
    GrRing E(RationalRing{}, 4);
    auto v = [&](unsigned i) { return E.generator(i); };
    auto a = mat_from_rows(E, {{v(1), v(2)}, {v(3), v(4)}});
    // Oracle: the four products written out one by one.  Row order 1,2 and
    // row order 2,1 both appear, each with its column permutation sign.
    auto direct = E.add(
        E.add(E.mul(v(1), v(4)), E.neg(E.mul(v(2), v(3)))),
        E.add(E.mul(v(4), v(1)), E.neg(E.mul(v(3), v(2)))));
    CHECK(E.eq(sdet(E, a), direct));
    CHECK(E.is_zero(direct)); // the two row orders cancel pairwise here
}

TEST_CASE("preadjoint agrees with the signed-minor route") {
    GrRing E(RationalRing{}, 4);
    SplitMix64 rng(107);
    for (int n = 2; n <= 3; ++n) {
        for (int t = 0; t < 10; ++t) {
            auto a = random_emat(E, n, rng);
            CHECK(mat_eq(E, preadjoint(E, a), preadjoint_via_minors(E, a)));
        }
    }
    CHECK_THROWS_AS(preadjoint_via_minors(E, mat_identity(E, 1)), DomainError);
}

TEST_CASE("identity matrices have factorial determinants") {
    RationalRing q;
    for (int n = 1; n <= 5; ++n)
        CHECK(sdet(q, mat_identity(q, n)) == Rational(BigInt(factorial(static_cast<unsigned>(n)))));
    // (I_3)* = 2 I_3.
    CHECK(mat_eq(q, preadjoint(q, mat_identity(q, 3)),
                 left_scale(q, Rational(2), mat_identity(q, 3))));
    CHECK(rdet(q, mat_identity(q, 2), 1) == Rational(2));
}

TEST_CASE("two by two preadjoint swaps the diagonal and negates the rest") {
    GrRing E(RationalRing{}, 4);
    auto a = E.parse("1 + v1"), b = E.parse("v2"), c = E.parse("v1*v3"), d = E.parse("2");
    auto m = mat_from_rows(E, {{a, b}, {c, d}});
    auto star = preadjoint(E, m);
    CHECK(E.eq(star.at(0, 0), d));
    CHECK(E.eq(star.at(0, 1), E.neg(b)));
    CHECK(E.eq(star.at(1, 0), E.neg(c)));
    CHECK(E.eq(star.at(1, 1), a));
}

TEST_CASE("one by one matrices") {
    GrRing E(RationalRing{}, 2);
    auto a = mat_from_rows(E, {{E.parse("1 + v1*v2")}});
    CHECK(E.eq(sdet(E, a), E.parse("1 + v1*v2")));
    // 0! = 1 and the empty product is 1, whatever the entry.
    CHECK(E.eq(preadjoint(E, a).at(0, 0), E.one()));
    CHECK(E.eq(rdet(E, a, 3), E.parse("1 + v1*v2")));
}

TEST_CASE("trace identities tie the preadjoint to the determinant") {
    GrRing E(RationalRing{}, 4);
    SplitMix64 rng(109);
    for (int n = 2; n <= 3; ++n) {
        for (int t = 0; t < 8; ++t) {
            auto a = random_emat(E, n, rng);
            auto star = preadjoint(E, a);
            auto d = sdet(E, a);
            CHECK(E.eq(trace(E, mat_mul(E, a, star)), d));
            CHECK(E.eq(trace(E, mat_mul(E, star, a)), d));
        }
    }
}

TEST_CASE("higher level determinants reduce through A A*") {
    GrRing E(RationalRing{}, 4);
    SplitMix64 rng(113);
    for (int t = 0; t < 6; ++t) {
        auto a = random_emat(E, 2, rng);
        auto astar = preadjoint(E, a);
        CHECK(E.eq(rdet(E, a, 2), rdet(E, mat_mul(E, a, astar), 1)));
        CHECK(E.eq(rdet(E, a, 3), rdet(E, mat_mul(E, a, astar), 2)));
        CHECK(E.eq(ldet(E, a, 2), ldet(E, mat_mul(E, astar, a), 1)));
    }
    // Level 1 of either side is the symmetrized determinant itself.
    for (int t = 0; t < 6; ++t) {
        auto a = random_emat(E, 3, rng);
        CHECK(E.eq(rdet(E, a, 1), sdet(E, a)));
        CHECK(E.eq(ldet(E, a, 1), sdet(E, a)));
    }
}

TEST_CASE("diagonal grassmann matrix has an explicit level one determinant") {
    GrRing E(RationalRing{}, 2);
    auto a = mat_from_rows(E, {{E.parse("1 + v1"), E.zero()}, {E.zero(), E.parse("1 + v2")}});
    // A* swaps the diagonal; tr(A A*) = (1+v1)(1+v2) + (1+v2)(1+v1).
    CHECK(E.eq(sdet(E, a), E.parse("2 + 2*v1 + 2*v2")));
    auto star = preadjoint(E, a);
    CHECK(E.eq(star.at(0, 0), E.parse("1 + v2")));
    CHECK(E.eq(star.at(1, 1), E.parse("1 + v1")));
    CHECK(E.is_zero(star.at(0, 1)));
}

TEST_CASE("preadjoint commutes with entrywise ring endomorphisms") {
    GrRing E(RationalRing{}, 3);
    auto eps = parity_endo(E);
    auto sigma = v1_conjugation_endo(E);
    SplitMix64 rng(127);
    for (int t = 0; t < 8; ++t) {
        auto a = random_emat(E, 2, rng);
        CHECK(mat_eq(E, preadjoint(E, delta_entrywise(eps, a)),
                     delta_entrywise(eps, preadjoint(E, a))));
        CHECK(mat_eq(E, preadjoint(E, delta_entrywise(sigma, a)),
                     delta_entrywise(sigma, preadjoint(E, a))));
    }
    GrassmannRing<CyclotomicRing> EC(CyclotomicRing(3), 3);
    auto rho = root_scaling_endo(EC);
    for (int t = 0; t < 6; ++t) {
        auto a = mat_zero(EC, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a.at(i, j) = EC.sample(rng);
        CHECK(mat_eq(EC, preadjoint(EC, delta_entrywise(rho, a)),
                     delta_entrywise(rho, preadjoint(EC, a))));
        CHECK(EC.eq(sdet(EC, delta_entrywise(rho, a)), rho(sdet(EC, a))));
    }
}

TEST_CASE("preadjoint transforms covariantly under central diagonal conjugation") {
    CyclotomicRing k(3);
    auto w = mat_zero(k, 3);
    auto winv = mat_zero(k, 3);
    for (int i = 0; i < 3; ++i) {
        w.at(i, i) = k.root_pow(i);
        winv.at(i, i) = k.root_pow(-i);
    }
    SplitMix64 rng(131);
    for (int t = 0; t < 8; ++t) {
        auto a = mat_zero(k, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a.at(i, j) = k.sample(rng);
        auto conj = mat_mul(k, w, mat_mul(k, a, winv));
        CHECK(mat_eq(k, preadjoint(k, conj), mat_mul(k, w, mat_mul(k, preadjoint(k, a), winv))));
        CHECK(k.eq(sdet(k, conj), sdet(k, a)));
    }
}

TEST_CASE("characteristic polynomial of a frozen integer matrix") {
    RationalRing q;
    auto a = mat_from_rows(q, {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
    auto cp = char_poly(q, a, 1);
    REQUIRE(cp.coefficients.size() == 3);
    CHECK(cp.coefficients[0] == Rational(-4));
    CHECK(cp.coefficients[1] == Rational(-10));
    CHECK(cp.coefficients[2] == Rational(2));
    CHECK(cp.degree() == 2);
}

TEST_CASE("level two characteristic polynomial of the identity") {
    RationalRing q;
    auto cp = char_poly(q, mat_identity(q, 2), 2);
    REQUIRE(cp.coefficients.size() == 5);
    // 2 (x-1)^4, lowest degree first.
    CHECK(cp.coefficients[0] == Rational(2));
    CHECK(cp.coefficients[1] == Rational(-8));
    CHECK(cp.coefficients[2] == Rational(12));
    CHECK(cp.coefficients[3] == Rational(-8));
    CHECK(cp.coefficients[4] == Rational(2));
}

TEST_CASE("leading coefficient table") {
    CHECK(char_poly_leading(2, 1) == 2);
    CHECK(char_poly_leading(2, 2) == 2);
    CHECK(char_poly_leading(3, 1) == 6);
    CHECK(char_poly_leading(3, 2) == 48);
    CHECK(char_poly_leading(4, 1) == 24);
    CHECK(char_poly_degree(2, 2) == 4);
    CHECK(char_poly_degree(3, 2) == 9);
    CHECK_THROWS_AS(char_poly_degree(4, 9), DomainError);
}

TEST_CASE("cayley-hamilton over a commutative base") {
    RationalRing q;
    SplitMix64 rng(137);
    for (int n = 2; n <= 3; ++n) {
        for (int t = 0; t < 6; ++t) {
            auto a = random_qmat(n, rng);
            auto cp = char_poly(q, a, 1);
            CHECK(mat_is_zero(q, right_substitute(q, cp.coefficients, a)));
            CHECK(mat_is_zero(q, left_substitute(q, cp.coefficients, a)));
        }
    }
}

TEST_CASE("right cayley-hamilton at level two over a lie nilpotent base") {
    GrRing E(RationalRing{}, 2);
    SplitMix64 rng(139);
    for (int t = 0; t < 4; ++t) {
        auto a = random_emat(E, 2, rng);
        auto right = char_poly(E, a, 2, Side::right);
        CHECK(mat_is_zero(E, right_substitute(E, right.coefficients, a)));
        auto left = char_poly(E, a, 2, Side::left);
        CHECK(mat_is_zero(E, left_substitute(E, left.coefficients, a)));
    }
}

TEST_CASE("determinant levels must be positive") {
    RationalRing q;
    CHECK_THROWS_AS(rdet(q, mat_identity(q, 2), 0), DomainError);
    CHECK_THROWS_AS(ldet(q, mat_identity(q, 2), 0), DomainError);
}
