// Copyright 2026 The ncdet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, deliberately independent of the library's permutation
// machinery: classical cofactor determinant and adjugate for commutative
// entries, used to pin down the commutative collapse values.
#pragma once

#include "ncdet/matrix.hpp"
#include "ncdet/ring.hpp"

namespace ncdet::testing {

template <Ring R>
Matrix<typename R::Element> drop_row_col(const R& ring, const Matrix<typename R::Element>& a,
                                         int row, int col) {
    Matrix<typename R::Element> m(a.size() - 1, ring.zero());
    int mi = 0;
    for (int i = 0; i < a.size(); ++i) {
        if (i == row) continue;
        int mj = 0;
        for (int j = 0; j < a.size(); ++j) {
            if (j == col) continue;
            m.at(mi, mj) = a.at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

// Laplace expansion along the first row; valid over commutative rings.
template <Ring R>
typename R::Element det_cofactor(const R& ring, const Matrix<typename R::Element>& a) {
    if (a.size() == 1) return a.at(0, 0);
    auto total = ring.zero();
    for (int j = 0; j < a.size(); ++j) {
        if (ring.is_zero(a.at(0, j))) continue;
        auto term = ring.mul(a.at(0, j), det_cofactor(ring, drop_row_col(ring, a, 0, j)));
        total = (j % 2 == 0) ? ring.add(total, term) : ring_sub(ring, total, term);
    }
    return total;
}

// Classical adjugate: (i,j) entry is the (j,i) cofactor.
template <Ring R>
Matrix<typename R::Element> adjugate_classical(const R& ring,
                                               const Matrix<typename R::Element>& a) {
    Matrix<typename R::Element> out(a.size(), ring.zero());
    if (a.size() == 1) {
        out.at(0, 0) = ring.one();
        return out;
    }
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            auto d = det_cofactor(ring, drop_row_col(ring, a, j, i));
            out.at(i, j) = ((i + j) % 2 == 0) ? d : ring.neg(d);
        }
    return out;
}

} // namespace ncdet::testing
