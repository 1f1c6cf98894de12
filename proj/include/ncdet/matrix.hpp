// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncdet/common.hpp"
#include "ncdet/endomorphism.hpp"
#include "ncdet/ring.hpp"

namespace ncdet {

// Dense square matrix over a ring; the desk scale here is n <= 6.
// Indices are 0-based throughout.
template <typename Elem>
class Matrix {
public:
    Matrix() = default;
    Matrix(int n, const Elem& fill) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 1) throw DomainError("matrix size must be positive");
    }

    int size() const { return n_; }
    Elem& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const Elem& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<Elem> data_;
};

namespace detail {
inline void require_same_size(int a, int b, const char* op) {
    if (a != b) throw DomainError(std::string(op) + ": size mismatch");
}
} // namespace detail

template <Ring R>
Matrix<typename R::Element> mat_zero(const R& ring, int n) {
    return Matrix<typename R::Element>(n, ring.zero());
}

template <Ring R>
Matrix<typename R::Element> mat_identity(const R& ring, int n) {
    auto m = mat_zero(ring, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

// E_{ij} (1-based positions to match the usual notation in call sites).
template <Ring R>
Matrix<typename R::Element> unit_matrix(const R& ring, int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw DomainError("unit matrix index out of range");
    auto m = mat_zero(ring, n);
    m.at(i - 1, j - 1) = ring.one();
    return m;
}

template <Ring R>
Matrix<typename R::Element> mat_from_rows(const R& ring,
                                          const std::vector<std::vector<typename R::Element>>& rows) {
    int n = static_cast<int>(rows.size());
    auto m = mat_zero(ring, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw DomainError("matrix literal is not square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

template <Ring R>
Matrix<typename R::Element> mat_add(const R& ring, const Matrix<typename R::Element>& a,
                                    const Matrix<typename R::Element>& b) {
    detail::require_same_size(a.size(), b.size(), "mat_add");
    auto out = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
    return out;
}

template <Ring R>
Matrix<typename R::Element> mat_neg(const R& ring, const Matrix<typename R::Element>& a) {
    auto out = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = ring.neg(a.at(i, j));
    return out;
}

template <Ring R>
Matrix<typename R::Element> mat_sub(const R& ring, const Matrix<typename R::Element>& a,
                                    const Matrix<typename R::Element>& b) {
    return mat_add(ring, a, mat_neg(ring, b));
}

template <Ring R>
Matrix<typename R::Element> mat_mul(const R& ring, const Matrix<typename R::Element>& a,
                                    const Matrix<typename R::Element>& b) {
    detail::require_same_size(a.size(), b.size(), "mat_mul");
    int n = a.size();
    auto out = mat_zero(ring, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (ring.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < n; ++j) {
                if (ring.is_zero(b.at(k, j))) continue;
                out.at(i, j) = ring.add(out.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
            }
        }
    return out;
}

template <Ring R>
Matrix<typename R::Element> mat_pow(const R& ring, const Matrix<typename R::Element>& a, unsigned e) {
    auto out = mat_identity(ring, a.size());
    for (unsigned i = 0; i < e; ++i) out = mat_mul(ring, out, a);
    return out;
}

// c * A (c multiplied from the left of every entry).
template <Ring R>
Matrix<typename R::Element> left_scale(const R& ring, const typename R::Element& c,
                                       const Matrix<typename R::Element>& a) {
    auto out = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = ring.mul(c, a.at(i, j));
    return out;
}

// A * c (c multiplied from the right of every entry).
template <Ring R>
Matrix<typename R::Element> right_scale(const R& ring, const Matrix<typename R::Element>& a,
                                        const typename R::Element& c) {
    auto out = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = ring.mul(a.at(i, j), c);
    return out;
}

template <Ring R>
typename R::Element trace(const R& ring, const Matrix<typename R::Element>& a) {
    auto t = ring.zero();
    for (int i = 0; i < a.size(); ++i) t = ring.add(t, a.at(i, i));
    return t;
}

template <typename Elem>
Matrix<Elem> mat_transpose(const Matrix<Elem>& a) {
    auto out = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = a.at(j, i);
    return out;
}

// Entrywise (Hadamard) product.
template <Ring R>
Matrix<typename R::Element> hadamard(const R& ring, const Matrix<typename R::Element>& a,
                                     const Matrix<typename R::Element>& b) {
    detail::require_same_size(a.size(), b.size(), "hadamard");
    auto out = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = ring.mul(a.at(i, j), b.at(i, j));
    return out;
}

template <Ring R>
bool mat_eq(const R& ring, const Matrix<typename R::Element>& a,
            const Matrix<typename R::Element>& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!ring.eq(a.at(i, j), b.at(i, j))) return false;
    return true;
}

template <Ring R>
bool mat_is_zero(const R& ring, const Matrix<typename R::Element>& a) {
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (!ring.is_zero(a.at(i, j))) return false;
    return true;
}

// Apply an endomorphism of the entry ring entrywise.
template <Ring R>
Matrix<typename R::Element> delta_entrywise(const Endomorphism<R>& delta,
                                            const Matrix<typename R::Element>& a) {
    auto out = a;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out.at(i, j) = delta.map(a.at(i, j));
    return out;
}

template <Ring R>
std::string mat_to_string(const R& ring, const Matrix<typename R::Element>& a) {
    std::string s = "[";
    for (int i = 0; i < a.size(); ++i) {
        s += i == 0 ? "[" : ", [";
        for (int j = 0; j < a.size(); ++j) {
            if (j > 0) s += ", ";
            s += ring.to_string(a.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

// The cyclic shift H = sum E_{i,i+1} (indices mod n): H e_i-basis-conjugation
// rotates diagonals.  Its inverse is its transpose.
template <Ring R>
Matrix<typename R::Element> cyclic_shift(const R& ring, int n) {
    auto h = mat_zero(ring, n);
    for (int i = 0; i < n; ++i) h.at(i, (i + 1) % n) = ring.one();
    return h;
}

// t_{ii} = 1 and t_{ij} t_{jk} = t_{ik} for all index triples.
template <Ring R>
bool is_transitive(const R& ring, const Matrix<typename R::Element>& t) {
    int n = t.size();
    for (int i = 0; i < n; ++i)
        if (!ring.eq(t.at(i, i), ring.one())) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!ring.eq(ring.mul(t.at(i, j), t.at(j, k)), t.at(i, k))) return false;
    return true;
}

// A matrix whose transitivity has been checked at construction; the only way
// to build one is through certify_transitive / transitive_from_units /
// blow_up, so holders can rely on t_{ij} t_{jk} = t_{ik} unconditionally.
// Note t_{ij}^{-1} = t_{ji} follows, so no inversion is ever needed.
template <typename Elem>
class TransitiveMatrix {
public:
    const Matrix<Elem>& mat() const { return mat_; }
    int size() const { return mat_.size(); }
    const Elem& at(int i, int j) const { return mat_.at(i, j); }

    template <Ring R>
    friend TransitiveMatrix<typename R::Element> certify_transitive(
        const R& ring, const Matrix<typename R::Element>& t);

private:
    explicit TransitiveMatrix(Matrix<Elem> m) : mat_(std::move(m)) {}
    Matrix<Elem> mat_;
};

template <Ring R>
TransitiveMatrix<typename R::Element> certify_transitive(const R& ring,
                                                         const Matrix<typename R::Element>& t) {
    if (!is_transitive(ring, t))
        throw StructureError("matrix is not transitive");
    return TransitiveMatrix<typename R::Element>(t);
}

// t_{ij} = g_i g_j^{-1} for a sequence of units; always transitive.
template <Ring R>
TransitiveMatrix<typename R::Element> transitive_from_units(
    const R& ring, const std::vector<typename R::Element>& units) {
    int n = static_cast<int>(units.size());
    if (n < 1) throw DomainError("need at least one unit");
    std::vector<typename R::Element> inverses;
    inverses.reserve(units.size());
    for (const auto& g : units) {
        auto inv = ring.try_inverse(g);
        if (!inv) throw DomainError("transitive_from_units: element is not a unit");
        inverses.push_back(*inv);
    }
    auto t = mat_zero(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t.at(i, j) = ring.mul(units[static_cast<std::size_t>(i)],
                                  inverses[static_cast<std::size_t>(j)]);
    return certify_transitive(ring, t);
}

// Blow-up along cuts 0 = d_0 < d_1 < .. < d_n = m: the (r,c) entry of the
// m x m result is t_{ij} where r lies in the i-th block [d_{i-1}, d_i).
// Transitivity is preserved (and re-certified).
template <Ring R>
TransitiveMatrix<typename R::Element> blow_up(const R& ring,
                                              const TransitiveMatrix<typename R::Element>& t,
                                              const std::vector<int>& cuts) {
    int n = t.size();
    if (static_cast<int>(cuts.size()) != n)
        throw DomainError("blow_up: need exactly one cut per row of the base matrix");
    int prev = 0;
    for (int d : cuts) {
        if (d <= prev) throw DomainError("blow_up: cuts must be strictly increasing and positive");
        prev = d;
    }
    int m = cuts.back();
    auto block_of = [&](int r) {
        for (std::size_t i = 0; i < cuts.size(); ++i)
            if (r < cuts[i]) return static_cast<int>(i);
        throw DomainError("blow_up: index out of range");
    };
    auto big = mat_zero(ring, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) big.at(r, c) = t.at(block_of(r), block_of(c));
    return certify_transitive(ring, big);
}

// T * A for transitive T with central entries.  Computed entrywise and
// cross-checked against the diagonal conjugation D A D^{-1} with
// D = diag(t_{i,1}); the two must agree, and centrality of the entries is
// probed against the ring's generators.
template <Ring R>
Matrix<typename R::Element> theta(const R& ring, const TransitiveMatrix<typename R::Element>& t,
                                  const Matrix<typename R::Element>& a) {
    detail::require_same_size(t.size(), a.size(), "theta");
    int n = t.size();
    if constexpr (requires { ring.generators(); }) {
        for (const auto& g : ring.generators())
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!ring.is_zero(commutator(ring, t.at(i, j), g)))
                        throw DomainError("theta: transitive matrix entries are not central");
    }
    auto result = hadamard(ring, t.mat(), a);
    auto conj = mat_zero(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            conj.at(i, j) = ring.mul(ring.mul(t.at(i, 0), a.at(i, j)), t.at(0, j));
    if (!mat_eq(ring, result, conj))
        throw TheoremViolationError("theta: Hadamard route and conjugation route disagree");
    return result;
}

// Square matrices over a base ring, packaged as a ring themselves (used by
// the nilpotency probes and the axiom harness).
template <Ring Base>
class MatrixRing {
public:
    using BaseElem = typename Base::Element;
    using Element = Matrix<BaseElem>;

    MatrixRing(Base base, int n) : base_(std::move(base)), n_(n) {
        if (n < 1 || n > 8) throw DomainError("matrix ring size out of range");
    }

    const Base& base() const { return base_; }
    int size() const { return n_; }

    Element zero() const { return mat_zero(base_, n_); }
    Element one() const { return mat_identity(base_, n_); }
    Element add(const Element& a, const Element& b) const { check(a); check(b); return mat_add(base_, a, b); }
    Element neg(const Element& a) const { check(a); return mat_neg(base_, a); }
    Element mul(const Element& a, const Element& b) const { check(a); check(b); return mat_mul(base_, a, b); }
    bool eq(const Element& a, const Element& b) const { check(a); check(b); return mat_eq(base_, a, b); }
    bool is_zero(const Element& a) const { check(a); return mat_is_zero(base_, a); }
    Element from_rational(const Rational& q) const {
        return left_scale(base_, base_.from_rational(q), one());
    }
    std::string to_string(const Element& a) const { return mat_to_string(base_, a); }
    std::string name() const { return "M_" + std::to_string(n_) + "(" + base_.name() + ")"; }

    std::vector<Element> generators() const {
        std::vector<Element> gs;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) gs.push_back(unit_matrix(base_, n_, i, j));
        return gs;
    }

    Element sample(SplitMix64& rng) const {
        auto m = zero();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.at(i, j) = base_.sample(rng);
        return m;
    }

private:
    void check(const Element& a) const {
        if (a.size() != n_) throw RingMismatchError("matrix does not belong to " + name());
    }

    Base base_;
    int n_;
};

} // namespace ncdet
