#pragma once

#include <Eigen/Core>

#include <vector>

#include "mirabolic/errors.hpp"
#include "mirabolic/gauss.hpp"
#include "mirabolic/gfp.hpp"
#include "mirabolic/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mirabolic::Rational> : GenericNumTraits<mirabolic::Rational> {
    typedef mirabolic::Rational Real;
    typedef mirabolic::Rational NonInteger;
    typedef mirabolic::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

template <>
struct NumTraits<mirabolic::GaussRational> : GenericNumTraits<mirabolic::GaussRational> {
    typedef mirabolic::GaussRational Real;
    typedef mirabolic::GaussRational NonInteger;
    typedef mirabolic::GaussRational Nested;
    enum {
        IsComplex = 0,  // opaque field scalar; transpose, never adjoint
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 120,
        MulCost = 240,
    };
};

template <>
struct NumTraits<mirabolic::GFp> : GenericNumTraits<mirabolic::GFp> {
    typedef mirabolic::GFp Real;
    typedef mirabolic::GFp NonInteger;
    typedef mirabolic::GFp Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4,
    };
};

}  // namespace Eigen

namespace mirabolic {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <class S>
Mat<S> mat_from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    Index r = static_cast<Index>(rows.size());
    Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    Mat<S> m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c) throw SizeMismatch("ragged row list");
        Index j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

template <class S>
bool is_zero_mat(const Mat<S>& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <class S>
bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

/// In-place reduced row echelon form. Pivots are the first nonzero entry in
/// each column scanned top-down; exact division keeps everything in the
/// field. Returns pivot columns in order.
template <class S>
std::vector<Index> rref_inplace(Mat<S>& m) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index piv = -1;
        for (Index i = row; i < m.rows(); ++i) {
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        const S inv = S(1) / m(row, col);
        for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const S f = m(i, col);
            for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
Index rank(const Mat<S>& m) {
    Mat<S> work = m;
    return static_cast<Index>(rref_inplace(work).size());
}

/// Exact basis of the right null space; size is cols - rank. Free
/// coordinates are set to one in ascending column order.
template <class S>
std::vector<Vec<S>> kernel_basis(const Mat<S>& m) {
    Mat<S> work = m;
    std::vector<Index> pivots = rref_inplace(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (Index c : pivots) is_pivot[c] = true;

    std::vector<Vec<S>> basis;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<S> v = Vec<S>::Constant(m.cols(), S(0));
        v(free) = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -work(static_cast<Index>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
Mat<S> inverse(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const Index n = m.rows();
    Mat<S> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n).setZero();
    for (Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
    std::vector<Index> pivots = rref_inplace(aug);
    if (static_cast<Index>(pivots.size()) != n) throw Singular();
    return aug.rightCols(n);
}

template <class S>
S trace_of(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    S t(0);
    for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

template <class S>
Mat<S> zero_mat(Index r, Index c) {
    return Mat<S>::Constant(r, c, S(0));
}

template <class S>
Mat<S> identity_mat(Index n) {
    Mat<S> m = zero_mat<S>(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

}  // namespace mirabolic
