// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncdet {

// Error taxonomy shared by the whole library.  Everything user-facing is a
// subclass of Error so callers can catch one base type; the CLI maps
// UsageError/ParseError to exit code 2 and verification failures to 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed element/matrix text.  `position` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Elements from different ring instances mixed in one operation.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

// Bad dimensions, out-of-range indices, non-unit where a unit is required.
class DomainError : public Error {
public:
    using Error::Error;
};

// Rejected command-line flag combination; the message lists what is valid.
class UsageError : public Error {
public:
    using Error::Error;
};

// A checked structural precondition failed (non-transitive matrix handed to
// a certifying constructor, W*Winv != I, endomorphism order mismatch, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

// An identity the library asserts as a theorem failed on concrete data.
// Raised instead of silently repairing the output.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

// Deterministic 64-bit generator (splitmix64).  Chosen over std::mt19937
// because sub-seeds for parallel trials must be derivable in O(1): trial i
// uses the i-th output of the stream started at the master seed, so results
// are independent of thread count and scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0.  Modulo bias is irrelevant at the
    // bounds used here (single digits to a few hundred).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Sub-seed for trial `index` of a campaign: the index-th stream output.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master + index * 0x9e3779b97f4a7c15ULL);
    return g.next();
}

} // namespace ncdet
