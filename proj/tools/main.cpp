// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: `ncdet compute` evaluates determinant-theory
// operations on one matrix, `ncdet verify` runs a seeded verification
// campaign for one statement.  Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncdet/determinant.hpp"
#include "ncdet/verify.hpp"

namespace {

using namespace ncdet;

bool color_enabled() {
    if (std::getenv("NOCOLOR") != nullptr) return false;
    return isatty(fileno(stdout)) != 0;
}

std::string command_echo(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) s += ' ';
        s += argv[i];
    }
    return s;
}

// JSON array of rows, each a same-length array of strings in the ring's
// element grammar.  All failures carry byte positions where one exists.
template <Ring R>
Matrix<typename R::Element> parse_matrix(const R& ring, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix is not valid JSON: ") + e.what(),
                         e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a non-empty JSON array of rows", 0);
    const std::size_t n = j.size();
    std::vector<std::vector<typename R::Element>> rows;
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n)
            throw ParseError("row " + std::to_string(r) + " must be an array of " +
                                 std::to_string(n) + " entries (square matrix)",
                             0);
        std::vector<typename R::Element> row;
        for (std::size_t c = 0; c < n; ++c) {
            if (!j[r][c].is_string())
                throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") must be a string in the " + ring.name() + " grammar",
                                 0);
            const auto entry = j[r][c].get<std::string>();
            try {
                row.push_back(ring.parse(entry));
            } catch (const ParseError& e) {
                std::string inner = e.what();  // drop the suffix the ctor re-appends
                if (auto cut = inner.rfind(" (at position "); cut != std::string::npos)
                    inner.erase(cut);
                throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") '" + entry + "': " + inner,
                                 e.position());
            }
        }
        rows.push_back(std::move(row));
    }
    return mat_from_rows(ring, rows);
}

struct ComputeArgs {
    std::string kind;
    std::string ring = "q";
    std::string matrix_text;
    std::string matrix_file;
    int k = 1;
    std::string side = "right";
    bool json = false;
    bool k_given = false;
    bool side_given = false;
    std::string command;
};

int run_compute(const ComputeArgs& ca) {
    const bool wants_k = ca.kind == "rdet" || ca.kind == "ldet" || ca.kind == "charpoly";
    if (ca.k_given && !wants_k)
        throw UsageError("--k does not apply to " + ca.kind + "; valid for rdet, ldet, charpoly");
    if (ca.side_given && ca.kind != "charpoly")
        throw UsageError("--side only applies to charpoly");
    if (ca.side != "right" && ca.side != "left")
        throw UsageError("--side must be 'right' or 'left'");
    if (ca.k < 1) throw UsageError("--k must be at least 1");

    std::string text = ca.matrix_text;
    if (!ca.matrix_file.empty()) {
        std::ifstream in(ca.matrix_file);
        if (!in) throw UsageError("cannot open matrix file '" + ca.matrix_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (text.empty())
        throw UsageError("provide the matrix with --matrix '<json>' or --matrix-file <path>");

    auto rs = verify::parse_ring_spec(ca.ring);
    return verify::detail::with_ring(rs, [&](const auto& ring) -> int {
        auto a = parse_matrix(ring, text);
        verify::detail::check_envelope(a.size(), ca.k);

        nlohmann::ordered_json out;
        out["schema"] = 1;
        out["command"] = ca.command;
        out["ring"] = ring.name();
        out["kind"] = ca.kind;
        std::string plain;

        if (ca.kind == "sdet") {
            plain = ring.to_string(sdet(ring, a));
            out["result"] = plain;
        } else if (ca.kind == "preadjoint") {
            auto p = preadjoint(ring, a);
            plain = mat_to_string(ring, p);
            auto arr = nlohmann::ordered_json::array();
            for (int i = 0; i < p.size(); ++i) {
                auto row = nlohmann::ordered_json::array();
                for (int j2 = 0; j2 < p.size(); ++j2) row.push_back(ring.to_string(p.at(i, j2)));
                arr.push_back(row);
            }
            out["result"] = arr;
        } else if (ca.kind == "rdet" || ca.kind == "ldet") {
            auto k = static_cast<unsigned>(ca.k);
            auto v = ca.kind == "rdet" ? rdet(ring, a, k) : ldet(ring, a, k);
            plain = ring.to_string(v);
            out["k"] = ca.k;
            out["result"] = plain;
        } else if (ca.kind == "charpoly") {
            auto cp = char_poly(ring, a, static_cast<unsigned>(ca.k),
                                ca.side == "left" ? Side::left : Side::right);
            auto coeffs = nlohmann::ordered_json::array();
            for (const auto& c : cp.coefficients) {
                auto s = ring.to_string(c);
                if (!plain.empty()) plain += ' ';
                plain += s;
                coeffs.push_back(s);
            }
            out["k"] = ca.k;
            out["side"] = ca.side;
            out["degree"] = cp.degree();
            out["result"] = coeffs;
        } else {
            throw UsageError("unknown compute kind '" + ca.kind + "'");
        }

        if (ca.json) std::cout << out.dump(2) << "\n";
        else std::cout << plain << "\n";
        return 0;
    });
}

int run_verify(const verify::Options& opt, bool json) {
    auto rep = verify::run(opt);
    if (json) std::cout << rep.to_json().dump(2) << "\n";
    else std::cout << rep.to_text(color_enabled()) << "\n";
    return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinant theory for matrices over noncommutative rings"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "evaluate one operation on one matrix");
    compute->add_option("kind", ca.kind, "sdet | preadjoint | rdet | ldet | charpoly")
        ->required()
        ->check(CLI::IsMember({"sdet", "preadjoint", "rdet", "ldet", "charpoly"}));
    compute->add_option("--ring", ca.ring,
                        "q | q[y]:delta=neg | grassmann:<m> | grassmann:<m>:scalars=cyclo:<N>");
    auto* mtext = compute->add_option("--matrix", ca.matrix_text,
                                      "matrix as a JSON array of rows of entry strings");
    auto* mfile =
        compute->add_option("--matrix-file", ca.matrix_file, "file containing the matrix JSON");
    mtext->excludes(mfile);
    mfile->excludes(mtext);
    auto* kopt = compute->add_option("--k", ca.k, "determinant level (rdet, ldet, charpoly)");
    auto* sopt = compute->add_option("--side", ca.side, "charpoly side: right | left");
    compute->add_flag("--json", ca.json, "machine-readable output");

    verify::Options vo;
    bool vjson = false;
    auto* verifycmd = app.add_subcommand("verify", "run a seeded verification campaign");
    std::string names;
    for (const auto& s : verify::suite_names()) names += (names.empty() ? "" : " ") + s;
    verifycmd->add_option("theorem", vo.theorem, names)->required();
    verifycmd->add_option("--ring", vo.ring, "ring spec (see compute --ring)");
    verifycmd->add_option("--n", vo.n, "matrix size");
    verifycmd->add_option("--k", vo.k, "determinant level");
    verifycmd->add_option("--d", vo.d, "block cut");
    verifycmd->add_option("--structure", vo.structure,
                          "supermatrix:d=<d> | rho_e:n=<n> | sigma:d=<d> | graded:n=<n> | "
                          "hmatrix");
    verifycmd->add_option("--transitive", vo.transitive, "transitive shape P(<d>,<n>)");
    verifycmd->add_option("--trials", vo.trials, "trial count (default: per-suite)");
    verifycmd->add_option("--seed", vo.seed, "master seed (default 1)");
    verifycmd->add_option("--threads", vo.threads, "worker threads (default: logical cores)");
    verifycmd->add_flag("--json", vjson, "machine-readable report");
    verifycmd->add_flag("--sabotage", vo.sabotage)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(compute)) {
            ca.k_given = kopt->count() > 0;
            ca.side_given = sopt->count() > 0;
            ca.command = command_echo(argc, argv);
            return run_compute(ca);
        }
        for (const char* flag : {"ring", "n", "k", "d", "structure", "transitive", "trials",
                                 "seed", "threads", "json", "sabotage"})
            if (verifycmd->count(std::string("--") + flag) > 0) vo.provided.push_back(flag);
        vo.command = command_echo(argc, argv);
        return run_verify(vo, vjson);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
