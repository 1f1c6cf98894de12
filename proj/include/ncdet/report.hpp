// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ncdet/common.hpp"

namespace ncdet {

struct TrialFailure {
    std::uint64_t trial = 0;
    std::string detail;
};

// Outcome of a seeded verification campaign.  Two runs with the same seed and
// flags produce identical reports except for duration_ms, regardless of the
// worker-pool size: trial i always draws from trial_seed(seed, i).
struct VerificationReport {
    std::string command;
    std::string theorem;
    std::uint64_t seed = 0;
    std::uint64_t trials_attempted = 0;
    std::uint64_t trials_passed = 0;
    std::vector<TrialFailure> failures;
    double duration_ms = 0.0;

    bool passed() const { return trials_passed == trials_attempted; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["command"] = command;
        j["theorem"] = theorem;
        j["seed"] = seed;
        j["trials"] = {{"attempted", trials_attempted}, {"passed", trials_passed}};
        auto arr = nlohmann::ordered_json::array();
        for (const auto& f : failures) {
            arr.push_back(nlohmann::ordered_json{{"trial", f.trial}, {"detail", f.detail}});
        }
        j["failures"] = arr;
        j["duration_ms"] = duration_ms;
        return j;
    }

    std::string to_text(bool color) const {
        auto paint = [color](const char* code, const std::string& s) {
            return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
        };
        std::string out = theorem + ": " + std::to_string(trials_passed) + "/" +
                          std::to_string(trials_attempted) + " trials passed";
        out += passed() ? " " + paint("32", "[ok]") : " " + paint("31", "[FAIL]");
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.1f ms)", duration_ms);
        out += buf;
        for (const auto& f : failures)
            out += "\n  trial " + std::to_string(f.trial) + ": " + f.detail;
        return out;
    }
};

// A trial returns nullopt on success or a human-readable failure detail.
// Thrown Error subclasses are recorded as failures too, so a theorem
// violation raised deep inside the library fails the trial instead of
// aborting the campaign.
using TrialFn =
    std::function<std::optional<std::string>(std::uint64_t trial, SplitMix64& rng)>;

inline VerificationReport run_trials(std::string theorem, std::string command,
                                     std::uint64_t seed, std::uint64_t trials,
                                     unsigned threads, const TrialFn& trial) {
    VerificationReport rep;
    rep.theorem = std::move(theorem);
    rep.command = std::move(command);
    rep.seed = seed;
    rep.trials_attempted = trials;
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::optional<std::string>> results(trials);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= trials) return;
            SplitMix64 rng(trial_seed(seed, i));
            try {
                results[i] = trial(i, rng);
            } catch (const std::exception& ex) {
                results[i] = std::string(ex.what());
            }
        }
    };

    unsigned pool = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (pool == 0) pool = 1;
    if (trials < pool) pool = trials != 0 ? static_cast<unsigned>(trials) : 1;
    std::vector<std::thread> extra;
    for (unsigned t = 1; t < pool; ++t) extra.emplace_back(worker);
    worker();
    for (auto& th : extra) th.join();

    for (std::uint64_t i = 0; i < trials; ++i)
        if (results[i]) rep.failures.push_back({i, *results[i]});
    rep.trials_passed = trials - rep.failures.size();
    rep.duration_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return rep;
}

} // namespace ncdet
