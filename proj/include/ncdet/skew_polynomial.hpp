// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/endomorphism.hpp"
#include "ncdet/ring.hpp"

namespace ncdet {

// Element of a skew polynomial ring R[w; delta]: coefficients are written on
// the left (sum r_i w^i) and the commutation rule is w r = delta(r) w.
// A distinct type from Polynomial so twisted and untwisted coefficients can
// not be mixed by accident.
template <typename BaseElem>
struct SkewPolynomial {
    std::vector<BaseElem> coeffs;
};

template <Ring Base>
class SkewPolynomialRing {
public:
    using BaseElem = typename Base::Element;
    using Element = SkewPolynomial<BaseElem>;

    SkewPolynomialRing(Base base, Endomorphism<Base> twist, std::string var = "w")
        : base_(std::move(base)), twist_(std::move(twist)), var_(std::move(var)) {}

    const Base& base() const { return base_; }
    const Endomorphism<Base>& twist() const { return twist_; }
    const std::string& variable_name() const { return var_; }

    Element zero() const { return {}; }
    Element one() const { return {{base_.one()}}; }
    Element lift(const BaseElem& c) const {
        Element p{{c}};
        trim(p);
        return p;
    }
    Element variable() const { return {{base_.zero(), base_.one()}}; }

    Element monomial(const BaseElem& c, unsigned k) const {
        if (base_.is_zero(c)) return {};
        Element p;
        p.coeffs.assign(k + 1, base_.zero());
        p.coeffs[k] = c;
        return p;
    }

    int degree(const Element& p) const { return static_cast<int>(p.coeffs.size()) - 1; }

    BaseElem coefficient(const Element& p, unsigned k) const {
        return k < p.coeffs.size() ? p.coeffs[k] : base_.zero();
    }

    Element add(const Element& a, const Element& b) const {
        Element out = a;
        if (out.coeffs.size() < b.coeffs.size()) out.coeffs.resize(b.coeffs.size(), base_.zero());
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            out.coeffs[i] = base_.add(out.coeffs[i], b.coeffs[i]);
        trim(out);
        return out;
    }

    Element neg(const Element& a) const {
        Element out = a;
        for (auto& c : out.coeffs) c = base_.neg(c);
        return out;
    }

    // (sum r_i w^i)(sum s_j w^j) = sum_m (sum_{i+j=m} r_i delta^i(s_j)) w^m.
    // The twisted images delta^i(s_j) are built incrementally, one extra
    // application of delta per row, so delta runs O(deg_a * deg_b) times.
    Element mul(const Element& a, const Element& b) const {
        if (a.coeffs.empty() || b.coeffs.empty()) return {};
        Element out;
        out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, base_.zero());
        std::vector<BaseElem> twisted = b.coeffs;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (i > 0)
                for (auto& s : twisted) s = twist_.map(s);
            if (base_.is_zero(a.coeffs[i])) continue;
            for (std::size_t j = 0; j < twisted.size(); ++j) {
                if (base_.is_zero(twisted[j])) continue;
                out.coeffs[i + j] = base_.add(out.coeffs[i + j], base_.mul(a.coeffs[i], twisted[j]));
            }
        }
        trim(out);
        return out;
    }

    bool eq(const Element& a, const Element& b) const {
        if (a.coeffs.size() != b.coeffs.size()) return false;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            if (!base_.eq(a.coeffs[i], b.coeffs[i])) return false;
        return true;
    }

    bool is_zero(const Element& a) const { return a.coeffs.empty(); }

    Element from_rational(const Rational& q) const { return lift(base_.from_rational(q)); }

    std::vector<Element> generators() const {
        std::vector<Element> gs;
        if constexpr (requires { base_.generators(); }) {
            for (const auto& g : base_.generators()) gs.push_back(lift(g));
        }
        gs.push_back(variable());
        return gs;
    }

    Element sample(SplitMix64& rng) const {
        Element out;
        auto deg = static_cast<std::size_t>(rng.below(3)); // degree <= 2
        out.coeffs.reserve(deg + 1);
        for (std::size_t i = 0; i <= deg; ++i) out.coeffs.push_back(base_.sample(rng));
        trim(out);
        return out;
    }

    std::string to_string(const Element& a) const {
        std::vector<detail::PrintTerm> terms;
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
            if (base_.is_zero(a.coeffs[k])) continue;
            std::string c = base_.to_string(a.coeffs[k]);
            bool negative = false;
            if (!c.empty() && c[0] == '-' && c.find(' ') == std::string::npos) {
                negative = true;
                c.erase(0, 1);
            }
            std::string body;
            if (k == 0) {
                body = c;
            } else {
                std::string power = var_ + (k == 1 ? "" : "^" + std::to_string(k));
                if (c == "1") body = power;
                else if (c.find(' ') != std::string::npos || (!c.empty() && c[0] == '-'))
                    body = "(" + c + ")*" + power;
                else body = c + "*" + power;
            }
            terms.push_back({negative, body});
        }
        return detail::join_terms(terms);
    }

    std::string name() const { return base_.name() + "[" + var_ + "; " + twist_.label + "]"; }

private:
    void trim(Element& p) const {
        while (!p.coeffs.empty() && base_.is_zero(p.coeffs.back())) p.coeffs.pop_back();
    }

    Base base_;
    Endomorphism<Base> twist_;
    std::string var_;
};

// Checks that w^n is central: w^n f = f w^n for sampled f plus the ring's
// generators.  True whenever delta^n = id; used as the executable face of
// that claim.
template <Ring Base>
bool central_power_check(const SkewPolynomialRing<Base>& ring, unsigned n, std::uint64_t seed,
                         int trials) {
    auto wn = ring.monomial(ring.base().one(), n);
    auto probes = ring.generators();
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) probes.push_back(ring.sample(rng));
    for (const auto& f : probes)
        if (!ring.eq(ring.mul(wn, f), ring.mul(f, wn))) return false;
    return true;
}

} // namespace ncdet
