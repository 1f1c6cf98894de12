// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "ncdet/cyclotomic.hpp"
#include "ncdet/grassmann.hpp"
#include "ncdet/matrix.hpp"

using namespace ncdet;

namespace {
Matrix<Rational> qmat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return mat_from_rows(RationalRing{}, out);
}
} // namespace

TEST_CASE("matrix arithmetic basics") {
    RationalRing q;
    auto a = qmat({{1, 2}, {3, 4}});
    auto b = qmat({{0, 1}, {1, 0}});
    CHECK(mat_eq(q, mat_mul(q, a, b), qmat({{2, 1}, {4, 3}})));
    CHECK(mat_eq(q, mat_add(q, a, mat_neg(q, a)), mat_zero(q, 2)));
    CHECK(mat_eq(q, mat_mul(q, a, mat_identity(q, 2)), a));
    CHECK(mat_eq(q, mat_pow(q, b, 2), mat_identity(q, 2)));
    CHECK(mat_eq(q, mat_pow(q, a, 0), mat_identity(q, 2)));
    CHECK(trace(q, a) == Rational(5));
    CHECK(mat_eq(q, mat_transpose(a), qmat({{1, 3}, {2, 4}})));
    // E_{1,2} E_{2,1} = E_{1,1}.
    auto e12 = unit_matrix(q, 2, 1, 2), e21 = unit_matrix(q, 2, 2, 1);
    CHECK(mat_eq(q, mat_mul(q, e12, e21), unit_matrix(q, 2, 1, 1)));
    CHECK_THROWS_AS(mat_mul(q, a, mat_identity(q, 3)), DomainError);
    CHECK_THROWS_AS(unit_matrix(q, 2, 0, 1), DomainError);
    CHECK_THROWS_AS(unit_matrix(q, 2, 1, 3), DomainError);
    CHECK_THROWS_AS(mat_from_rows(q, std::vector<std::vector<Rational>>{{Rational(1)}, {}}),
                    DomainError);
}

TEST_CASE("left and right scaling differ over a noncommutative base") {
    GrassmannRing<RationalRing> E(RationalRing{}, 2);
    auto v1 = E.generator(1), v2 = E.generator(2);
    Matrix<GrassmannElement<Rational>> m(1, E.zero());
    m.at(0, 0) = v2;
    auto lhs = left_scale(E, v1, m);
    auto rhs = right_scale(E, m, v1);
    CHECK(E.eq(lhs.at(0, 0), E.parse("v1*v2")));
    CHECK(E.eq(rhs.at(0, 0), E.parse("-v1*v2")));
    CHECK_FALSE(mat_eq(E, lhs, rhs));
}

TEST_CASE("hadamard product is entrywise") {
    RationalRing q;
    auto p = qmat({{1, -1}, {-1, 1}});
    CHECK(mat_eq(q, hadamard(q, p, mat_identity(q, 2)), mat_identity(q, 2)));
    auto ones = qmat({{1, 1}, {1, 1}});
    CHECK(mat_eq(q, hadamard(q, p, ones), p));
    CHECK(mat_eq(q, hadamard(q, p, p), ones));
}

TEST_CASE("cyclic shift conjugation rotates a diagonal") {
    RationalRing q;
    auto h = cyclic_shift(q, 3);
    auto hd = mat_mul(q, h, mat_mul(q, qmat({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}), mat_transpose(h)));
    CHECK(mat_eq(q, hd, qmat({{3, 0, 0}, {0, 5, 0}, {0, 0, 2}})));
    // H H^T = I: the shift is a permutation matrix.
    CHECK(mat_eq(q, mat_mul(q, h, mat_transpose(h)), mat_identity(q, 3)));
    CHECK(mat_eq(q, mat_pow(q, h, 3), mat_identity(q, 3)));
}

TEST_CASE("transitivity predicate and certification") {
    RationalRing q;
    auto ones = qmat({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK(is_transitive(q, ones));
    CHECK_NOTHROW(certify_transitive(q, ones));
    auto upper = qmat({{1, 1}, {0, 1}});
    CHECK_FALSE(is_transitive(q, upper));
    CHECK_THROWS_AS(certify_transitive(q, upper), StructureError);
    CHECK_FALSE(is_transitive(q, qmat({{2, 1}, {1, 1}})));
}

TEST_CASE("transitive matrix from a unit sequence") {
    CyclotomicRing k(3);
    std::vector<CyclotomicNumber> units = {k.root_pow(0), k.root_pow(1), k.root_pow(2)};
    auto t = transitive_from_units(k, units);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k.eq(t.at(i, j), k.root_pow(i - j)));
    CHECK(is_transitive(k, t.mat()));

    // The first column regenerates the matrix: g_i = t_{i,0}.
    std::vector<CyclotomicNumber> column;
    for (int i = 0; i < 3; ++i) column.push_back(t.at(i, 0));
    auto t2 = transitive_from_units(k, column);
    CHECK(mat_eq(k, t.mat(), t2.mat()));

    // Scaling every unit on the right by a fixed unit changes nothing.
    std::vector<CyclotomicNumber> scaled;
    for (const auto& g : units) scaled.push_back(k.mul(g, k.root_pow(2)));
    CHECK(mat_eq(k, transitive_from_units(k, scaled).mat(), t.mat()));

    GrassmannRing<RationalRing> E(RationalRing{}, 2);
    CHECK_THROWS_AS(transitive_from_units(E, {E.generator(1)}), DomainError);
    CHECK_THROWS_AS(transitive_from_units(k, std::vector<CyclotomicNumber>{}), DomainError);
}

TEST_CASE("blow up repeats blocks and stays transitive") {
    RationalRing q;
    auto base = transitive_from_units(q, {Rational(1), Rational(-1)});
    CHECK(mat_eq(q, base.mat(), qmat({{1, -1}, {-1, 1}})));

    auto big = blow_up(q, base, {1, 4});
    CHECK(big.size() == 4);
    CHECK(mat_eq(q, big.mat(),
                 qmat({{1, -1, -1, -1}, {-1, 1, 1, 1}, {-1, 1, 1, 1}, {-1, 1, 1, 1}})));

    // Trivial cuts reproduce the base matrix.
    CHECK(mat_eq(q, blow_up(q, base, {1, 2}).mat(), base.mat()));

    CHECK_THROWS_AS(blow_up(q, base, {2, 1}), DomainError);
    CHECK_THROWS_AS(blow_up(q, base, {0, 2}), DomainError);
    CHECK_THROWS_AS(blow_up(q, base, {3}), DomainError);
}

TEST_CASE("theta is a ring automorphism for central transitive entries") {
    CyclotomicRing k(3);
    auto t = transitive_from_units(k, {k.root_pow(0), k.root_pow(1), k.root_pow(2)});
    auto tinv = certify_transitive(k, mat_transpose(t.mat()));
    SplitMix64 rng(67);
    auto sample_mat = [&] {
        auto m = mat_zero(k, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = k.sample(rng);
        return m;
    };
    for (int trial = 0; trial < 15; ++trial) {
        auto a = sample_mat(), b = sample_mat();
        CHECK(mat_eq(k, theta(k, t, mat_mul(k, a, b)),
                     mat_mul(k, theta(k, t, a), theta(k, t, b))));
        CHECK(mat_eq(k, theta(k, t, mat_add(k, a, b)),
                     mat_add(k, theta(k, t, a), theta(k, t, b))));
        CHECK(mat_eq(k, theta(k, tinv, theta(k, t, a)), a));
    }
    CHECK(mat_eq(k, theta(k, t, mat_identity(k, 3)), mat_identity(k, 3)));
}

TEST_CASE("theta rejects non-central transitive entries") {
    GrassmannRing<RationalRing> E(RationalRing{}, 2);
    auto u = E.add(E.one(), E.generator(1));
    auto t = transitive_from_units(E, {E.one(), u});
    auto a = mat_identity(E, 2);
    CHECK_THROWS_AS(theta(E, t, a), DomainError);
}

TEST_CASE("matrix printing is row major") {
    RationalRing q;
    CHECK(mat_to_string(q, qmat({{1, -2}, {0, 3}})) == "[[1, -2], [0, 3]]");
}

TEST_CASE("matrix rings over noncommutative bases pass the axiom harness") {
    GrassmannRing<RationalRing> E(RationalRing{}, 2);
    CHECK_FALSE(check_ring_axioms(MatrixRing<GrassmannRing<RationalRing>>(E, 2), 12, 40)
                    .has_value());
}
