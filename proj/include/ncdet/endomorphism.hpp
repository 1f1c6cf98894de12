// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/ring.hpp"

namespace ncdet {

// A ring endomorphism packaged with its ring and, when known, its order.
// declared_order == 0 means "no finite order claimed".  The action is stored
// as a callable, but shipped instances are all built from generator images
// extended homomorphically (or conjugation by an explicit unit), never from
// opaque user state, so their laws are checkable by sampling.
template <Ring R>
struct Endomorphism {
    R ring;
    std::string label;
    unsigned declared_order = 0;
    std::function<typename R::Element(const typename R::Element&)> map;

    typename R::Element operator()(const typename R::Element& a) const { return map(a); }

    typename R::Element iterate(const typename R::Element& a, unsigned times) const {
        auto out = a;
        for (unsigned i = 0; i < times; ++i) out = map(out);
        return out;
    }
};

template <Ring R>
Endomorphism<R> identity_endo(const R& ring) {
    return {ring, "id", 1, [](const typename R::Element& a) { return a; }};
}

// delta(a) == a, i.e. membership in the fixed subring Fix(delta).
template <Ring R>
bool fix_membership(const Endomorphism<R>& delta, const typename R::Element& a) {
    return delta.ring.eq(delta.map(a), a);
}

// Sampling verification that `delta` is a unital ring homomorphism and that
// iterating declared_order times is the identity (checked on generators and
// random elements).  Returns the first violation found.
template <Ring R>
std::optional<std::string> check_endomorphism(const Endomorphism<R>& delta, std::uint64_t seed,
                                              int trials) {
    const R& ring = delta.ring;
    if (!ring.eq(delta.map(ring.one()), ring.one()))
        return delta.label + " does not fix 1";
    SplitMix64 rng(seed);
    std::vector<typename R::Element> probes;
    if constexpr (requires { ring.generators(); }) {
        for (const auto& g : ring.generators()) probes.push_back(g);
    }
    for (int t = 0; t < trials; ++t) {
        auto a = ring.sample(rng);
        auto b = ring.sample(rng);
        if (!ring.eq(delta.map(ring.add(a, b)), ring.add(delta.map(a), delta.map(b))))
            return delta.label + " not additive at trial " + std::to_string(t);
        if (!ring.eq(delta.map(ring.mul(a, b)), ring.mul(delta.map(a), delta.map(b))))
            return delta.label + " not multiplicative at trial " + std::to_string(t);
        probes.push_back(std::move(a));
    }
    if (delta.declared_order > 0) {
        for (const auto& p : probes)
            if (!ring.eq(delta.iterate(p, delta.declared_order), p))
                return delta.label + "^" + std::to_string(delta.declared_order) +
                       " is not the identity";
    }
    return std::nullopt;
}

} // namespace ncdet
