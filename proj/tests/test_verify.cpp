// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "ncdet/verify.hpp"

using namespace ncdet;
using verify::Options;

namespace {

Options base(const std::string& theorem, std::uint64_t trials = 3) {
    Options o;
    o.theorem = theorem;
    o.trials = trials;
    o.threads = 2;
    o.seed = 42;
    return o;
}

} // namespace

TEST_CASE("every suite passes and its sabotage control fails") {
    for (const auto& name : verify::suite_names()) {
        INFO(name);
        auto o = base(name);
        auto rep = verify::run(o);
        CHECK(rep.passed());
        CHECK(rep.trials_attempted == 3);
        CHECK(rep.trials_passed == 3);
        CHECK(rep.failures.empty());
        CHECK(rep.theorem == name);

        o.sabotage = true;
        auto sab = verify::run(o);
        CHECK_FALSE(sab.passed());
        REQUIRE_FALSE(sab.failures.empty());
        CHECK(sab.failures.front().trial == 0);
        CHECK_FALSE(sab.failures.front().detail.empty());
    }
}

TEST_CASE("suite registry lists all eighteen statements") {
    auto names = verify::suite_names();
    REQUIRE(names.size() == 18);
    CHECK(names.front() == "prop2_1");
    CHECK(names.back() == "ex6_3");
    CHECK(std::find(names.begin(), names.end(), "thm4_4") != names.end());
}

TEST_CASE("reports are identical across thread counts and repeat runs") {
    auto o = base("cor4_3", 6);
    o.threads = 1;
    auto a = verify::run(o).to_json();
    o.threads = 4;
    auto b = verify::run(o).to_json();
    auto c = verify::run(o).to_json();
    a.erase("duration_ms");
    b.erase("duration_ms");
    c.erase("duration_ms");
    CHECK(a.dump() == b.dump());
    CHECK(b.dump() == c.dump());
}

TEST_CASE("sabotaged reports are also deterministic") {
    auto o = base("thm4_2", 5);
    o.sabotage = true;
    o.threads = 3;
    auto a = verify::run(o).to_json();
    o.threads = 1;
    auto b = verify::run(o).to_json();
    a.erase("duration_ms");
    b.erase("duration_ms");
    CHECK(a.dump() == b.dump());
    CHECK(a["trials"]["passed"].get<std::uint64_t>() < 5);
}

TEST_CASE("report serialization carries the schema and failure structure") {
    auto o = base("thm4_1", 2);
    o.sabotage = true;
    o.command = "verify thm4_1 --sabotage";
    auto rep = verify::run(o);
    auto j = rep.to_json();
    CHECK(j["schema"].get<int>() == 1);
    CHECK(j["theorem"].get<std::string>() == "thm4_1");
    CHECK(j["command"].get<std::string>() == "verify thm4_1 --sabotage");
    CHECK(j["seed"].get<std::uint64_t>() == 42);
    REQUIRE(j["failures"].is_array());
    REQUIRE_FALSE(j["failures"].empty());
    CHECK(j["failures"][0].contains("trial"));
    CHECK(j["failures"][0].contains("detail"));

    auto colored = rep.to_text(true);
    auto plain = rep.to_text(false);
    CHECK(colored.find("\x1b[") != std::string::npos);
    CHECK(plain.find("\x1b[") == std::string::npos);
    CHECK(plain.find("thm4_1") != std::string::npos);
    CHECK(plain.find("[FAIL]") != std::string::npos);
}

TEST_CASE("documented invocations pass") {
    SECTION("cayley-hamilton on supermatrices") {
        Options o;
        o.theorem = "thm4_4";
        o.ring = "grassmann:4";
        o.n = 2;
        o.structure = "supermatrix:d=1";
        o.k = 2;
        o.trials = 20;
        o.seed = 7;
        o.provided = {"ring", "n", "structure", "k", "trials", "seed"};
        auto rep = verify::run(o);
        CHECK(rep.passed());
        CHECK(rep.trials_attempted == 20);
    }
    SECTION("hadamard action on a blown-up shape") {
        Options o;
        o.theorem = "prop2_4";
        o.ring = "grassmann:3";
        o.transitive = "P(1,2)";
        o.trials = 50;
        o.seed = 1;
        o.provided = {"ring", "transitive", "trials", "seed"};
        CHECK(verify::run(o).passed());
    }
}

TEST_CASE("suites accept their full ring and structure matrix") {
    SECTION("twisted algebras over q[y] with the sign twist") {
        for (const char* name : {"prop3_1", "thm4_1", "thm4_2", "cor4_3", "thm4_4"}) {
            auto o = base(name, 2);
            o.ring = "q[y]:delta=neg";
            o.structure = "hmatrix";
            o.n = 2;
            INFO(name);
            CHECK(verify::run(o).passed());
        }
    }
    SECTION("cyclotomic root scaling structures") {
        auto o = base("thm4_1", 2);
        o.ring = "grassmann:3:scalars=cyclo:3";
        o.structure = "rho_e:n=3";
        o.n = 3;
        CHECK(verify::run(o).passed());

        auto o2 = base("thm3_3", 2);
        o2.ring = "grassmann:3:scalars=cyclo:3";
        CHECK(verify::run(o2).passed());
    }
    SECTION("conjugation structure feeds the chapter-4 suites") {
        auto o = base("thm4_2", 2);
        o.structure = "sigma:d=1";
        o.k = 2;
        CHECK(verify::run(o).passed());
    }
    SECTION("graded suites at modulus 3") {
        for (const char* name : {"thm5_2", "thm5_3", "thm5_4"}) {
            auto o = base(name, 2);
            o.structure = "graded:n=3";
            if (std::string(name) != "thm5_2") o.k = 1;
            INFO(name);
            CHECK(verify::run(o).passed());
        }
    }
    SECTION("wider supermatrix blocks") {
        auto o = base("ex6_1", 2);
        o.n = 3;
        o.d = 2;
        CHECK(verify::run(o).passed());
    }
    SECTION("bigger skew standard identity") {
        auto o = base("thm3_5", 2);
        o.n = 2;
        CHECK(verify::run(o).passed());
    }
}

TEST_CASE("flags outside a suite's set are rejected with the valid list") {
    auto o = base("thm4_5");
    o.structure = "supermatrix:d=1";
    o.provided = {"structure"};
    CHECK_THROWS_MATCHES(verify::run(o), UsageError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("does not apply to thm4_5") &&
                             Catch::Matchers::ContainsSubstring("--ring") &&
                             Catch::Matchers::ContainsSubstring("--k")));

    auto o2 = base("thm4_4");
    o2.transitive = "P(1,2)";
    o2.provided = {"transitive"};
    CHECK_THROWS_AS(verify::run(o2), UsageError);

    auto o3 = base("prop2_1");
    o3.d = 1;
    o3.provided = {"d"};
    CHECK_THROWS_AS(verify::run(o3), UsageError);
}

TEST_CASE("unknown theorems and malformed specs raise usage errors") {
    auto o = base("thm9_9");
    CHECK_THROWS_MATCHES(verify::run(o), UsageError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("unknown theorem") &&
                             Catch::Matchers::ContainsSubstring("thm4_4")));

    for (const char* bad : {"z", "grassmann", "grassmann:", "grassmann:0", "grassmann:13",
                            "grassmann:4:scalars=fancy:3", "grassmann:4:scalars=cyclo:",
                            "q[y]", "q[y]:delta=identity"}) {
        INFO(bad);
        CHECK_THROWS_AS(verify::parse_ring_spec(bad), UsageError);
    }
    CHECK(verify::parse_ring_spec("q").kind == verify::RingSpec::Kind::rational);
    CHECK(verify::parse_ring_spec("q[y]:delta=neg").kind == verify::RingSpec::Kind::poly_neg);
    CHECK(verify::parse_ring_spec("grassmann:4").m == 4);
    auto cyc = verify::parse_ring_spec("grassmann:3:scalars=cyclo:5");
    CHECK(cyc.kind == verify::RingSpec::Kind::grassmann_cyclo);
    CHECK(cyc.m == 3);
    CHECK(cyc.order == 5);

    for (const char* bad :
         {"supermatrix", "supermatrix:d=", "supermatrix:n=1", "rho_e:d=2", "graded", "wild"}) {
        INFO(bad);
        CHECK_THROWS_AS(verify::parse_structure_spec(bad), UsageError);
    }
    auto st = verify::parse_structure_spec("supermatrix:d=2");
    CHECK(st.kind == verify::StructureSpec::Kind::supermatrix);
    CHECK(st.d == 2);
    CHECK(verify::parse_structure_spec("hmatrix").kind == verify::StructureSpec::Kind::hmatrix);
    CHECK(verify::parse_structure_spec("graded:n=4").n == 4);

    CHECK(verify::parse_transitive_spec("P(1,3)") == std::pair<int, int>(1, 3));
    for (const char* bad : {"P(3,1)", "P(0,2)", "P(1)", "Q(1,2)", "P(1,2"}) {
        INFO(bad);
        CHECK_THROWS_AS(verify::parse_transitive_spec(bad), UsageError);
    }
}

TEST_CASE("structural mismatches are explained before any trial runs") {
    SECTION("cost envelope") {
        auto o = base("thm4_4");
        o.n = 6;
        o.k = 6;
        CHECK_THROWS_MATCHES(verify::run(o), UsageError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("exceeds 256")));
        auto o2 = base("thm4_2");
        o2.n = 9;
        CHECK_THROWS_AS(verify::run(o2), UsageError);
    }
    SECTION("rho_e requires the matching cyclotomic order") {
        auto o = base("thm4_1");
        o.ring = "grassmann:3:scalars=cyclo:3";
        o.structure = "rho_e:n=2";
        o.n = 2;
        CHECK_THROWS_AS(verify::run(o), UsageError);
        auto o2 = base("thm4_1");
        o2.structure = "rho_e:n=2";  // rational scalars have no root scaling
        o2.n = 2;
        CHECK_THROWS_AS(verify::run(o2), UsageError);
    }
    SECTION("hmatrix needs the twist order to divide n") {
        auto o = base("thm4_1");
        o.ring = "grassmann:4";
        o.structure = "hmatrix";
        o.n = 3;
        CHECK_THROWS_MATCHES(verify::run(o), UsageError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("delta^n = id")));
    }
    SECTION("suites tied to one carrier reject the others") {
        auto o = base("thm3_5");
        o.ring = "q";
        CHECK_THROWS_AS(verify::run(o), UsageError);
        auto o2 = base("ex6_2");
        o2.ring = "grassmann:4";
        CHECK_THROWS_AS(verify::run(o2), UsageError);
        auto o3 = base("thm4_5");
        o3.ring = "q";
        CHECK_THROWS_AS(verify::run(o3), UsageError);
        auto o4 = base("thm5_2");
        o4.structure = "supermatrix:d=1";
        CHECK_THROWS_AS(verify::run(o4), UsageError);
        auto o5 = base("thm4_2");
        o5.ring = "q[y]:delta=neg";
        o5.structure = "supermatrix:d=1";
        CHECK_THROWS_AS(verify::run(o5), UsageError);
    }
}

TEST_CASE("different seeds explore different inputs but still pass") {
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        auto o = base("thm4_4", 2);
        o.seed = seed;
        auto rep = verify::run(o);
        CHECK(rep.passed());
        CHECK(rep.seed == seed);
    }
}
