#pragma once

#include <utility>
#include <vector>

#include "mirabolic/dense.hpp"
#include "mirabolic/poly.hpp"

namespace mirabolic {

/// Division-free characteristic polynomial (Berkowitz). Works over any
/// commutative ring, in particular in small characteristic where clearing
/// denominators is not an option.
template <class S>
Poly<S> char_poly_berkowitz(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const Index n = m.rows();
    // Coefficients kept leading-first; C is the charpoly of the leading
    // principal t-by-t block after step t.
    std::vector<S> C{S(1)};
    for (Index t = 1; t <= n; ++t) {
        // Toeplitz column q for the Samuelson identity at size t.
        std::vector<S> q(static_cast<std::size_t>(t) + 1, S(0));
        q[0] = S(1);
        q[1] = -m(t - 1, t - 1);
        if (t >= 2) {
            Vec<S> v = m.col(t - 1).head(t - 1);
            for (Index k = 2; k <= t; ++k) {
                S dot(0);
                for (Index i = 0; i < t - 1; ++i) dot += m(t - 1, i) * v(i);
                q[static_cast<std::size_t>(k)] = -dot;
                if (k < t) v = (m.topLeftCorner(t - 1, t - 1) * v).eval();
            }
        }
        std::vector<S> next(C.size() + q.size() - 1, S(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < C.size(); ++j) next[i + j] += q[i] * C[j];
        C = std::move(next);
    }
    std::vector<S> ascending(C.rbegin(), C.rend());
    return Poly<S>(std::move(ascending));
}

/// Characteristic polynomial via similarity reduction to Hessenberg form
/// followed by the standard last-column expansion. Uses exact field
/// division; intended for characteristic zero.
template <class S>
Poly<S> char_poly_hessenberg(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const Index n = m.rows();
    if (n == 0) return Poly<S>::constant(S(1));
    Mat<S> h = m;
    for (Index j = 0; j + 2 < n; ++j) {
        Index piv = -1;
        for (Index i = j + 1; i < n; ++i) {
            if (!h(i, j).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != j + 1) {
            h.row(piv).swap(h.row(j + 1));
            h.col(piv).swap(h.col(j + 1));
        }
        for (Index i = j + 2; i < n; ++i) {
            if (h(i, j).is_zero()) continue;
            const S f = h(i, j) / h(j + 1, j);
            for (Index c = 0; c < n; ++c) h(i, c) -= f * h(j + 1, c);
            for (Index r = 0; r < n; ++r) h(r, j + 1) += f * h(r, i);
        }
    }
    // p_k = (x - h_{kk}) p_{k-1} - sum_i h_{i,k} (prod subdiagonals) p_{i-1}
    std::vector<Poly<S>> p(static_cast<std::size_t>(n) + 1);
    p[0] = Poly<S>::constant(S(1));
    for (Index k = 1; k <= n; ++k) {
        Poly<S> acc = Poly<S>({-h(k - 1, k - 1), S(1)}) * p[k - 1];
        S sub(1);
        for (Index i = k - 1; i >= 1; --i) {
            sub *= h(i, i - 1);
            if (sub.is_zero()) break;
            acc = acc - (h(i - 1, k - 1) * sub) * p[i - 1];
        }
        p[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return p[static_cast<std::size_t>(n)];
}

/// Monic degree-n characteristic polynomial det(xI - m); the empty matrix
/// yields the constant 1.
template <class S>
Poly<S> char_poly(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    if (m.rows() == 0) return Poly<S>::constant(S(1));
    if (characteristic(m(0, 0)) != 0) return char_poly_berkowitz(m);
    return char_poly_hessenberg(m);
}

}  // namespace mirabolic
