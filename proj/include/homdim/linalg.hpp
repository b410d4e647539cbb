#pragma once

/* Exact dense linear algebra over a field scalar K (Rat or Fp): reduced row
 * echelon form, rank, null space, linear solve, column-space and quotient
 * bases.  Pivoting is first-nonzero so every result is deterministic. */

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <vector>

#include "homdim/fields.hpp"

namespace homdim {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class K>
bool isZeroMat(const Mat<K>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != K(0))
                return false;
    return true;
}

template <class K>
bool matEq(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

template <class K>
struct Echelon {
    Mat<K> rref;
    std::vector<Index> pivots;  // pivot column of each nonzero row, increasing
};

template <class K>
Echelon<K> echelonize(Mat<K> m) {
    Echelon<K> e;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index piv = -1;
        for (Index i = row; i < m.rows(); ++i)
            if (m(i, col) != K(0)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            m.row(piv).swap(m.row(row));
        K inv = K(1) / m(row, col);
        for (Index j = col; j < m.cols(); ++j)
            m(row, j) = m(row, j) * inv;
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == K(0))
                continue;
            K f = m(i, col);
            for (Index j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rref = std::move(m);
    return e;
}

template <class K>
Index rankOf(const Mat<K>& m) {
    return static_cast<Index>(echelonize(m).pivots.size());
}

/* Basis of the null space, one basis vector per column.  Count is always
 * cols - rank. */
template <class K>
Mat<K> kernelBasis(const Mat<K>& m) {
    Echelon<K> e = echelonize(m);
    std::vector<Index> free;
    {
        size_t k = 0;
        for (Index j = 0; j < m.cols(); ++j) {
            if (k < e.pivots.size() && e.pivots[k] == j)
                ++k;
            else
                free.push_back(j);
        }
    }
    Mat<K> basis = Mat<K>::Zero(m.cols(), static_cast<Index>(free.size()));
    for (size_t fj = 0; fj < free.size(); ++fj) {
        basis(free[fj], static_cast<Index>(fj)) = K(1);
        for (size_t i = 0; i < e.pivots.size(); ++i)
            basis(e.pivots[i], static_cast<Index>(fj)) = -e.rref(static_cast<Index>(i), free[fj]);
    }
    return basis;
}

/* One solution of m x = b, free variables set to zero; nullopt when the
 * system is inconsistent. */
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& m, const Vec<K>& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    Mat<K> aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    Echelon<K> e = echelonize(std::move(aug));
    Vec<K> x = Vec<K>::Zero(m.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols())
            return std::nullopt;
        x(e.pivots[i]) = e.rref(static_cast<Index>(i), m.cols());
    }
    return x;
}

/* Solve A X = B for all columns at once; nullopt when any column is
 * inconsistent. */
template <class K>
std::optional<Mat<K>> solveMany(const Mat<K>& a, const Mat<K>& b) {
    if (b.rows() != a.rows())
        throw std::invalid_argument("solveMany: dimension mismatch");
    Mat<K> aug(a.rows(), a.cols() + b.cols());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(b.cols()) = b;
    Echelon<K> e = echelonize(std::move(aug));
    Mat<K> x = Mat<K>::Zero(a.cols(), b.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= a.cols())
            return std::nullopt;
        x.row(e.pivots[i]) = e.rref.row(static_cast<Index>(i)).rightCols(b.cols());
    }
    return x;
}

/* Columns of m at the pivot positions; spans the column space. */
template <class K>
Mat<K> imageBasis(const Mat<K>& m) {
    Echelon<K> e = echelonize(m);
    Mat<K> basis(m.rows(), static_cast<Index>(e.pivots.size()));
    for (size_t i = 0; i < e.pivots.size(); ++i)
        basis.col(static_cast<Index>(i)) = m.col(e.pivots[i]);
    return basis;
}

template <class K>
bool inSpan(const Mat<K>& basisCols, const Vec<K>& v) {
    return solve(basisCols, v).has_value();
}

/* Standard basis vectors completing the given subspace to the ambient space;
 * size is always ambientDim - dim(subspace). */
template <class K>
Mat<K> quotientBasis(Index ambientDim, const Mat<K>& subspace) {
    if (subspace.cols() > 0 && subspace.rows() != ambientDim)
        throw std::invalid_argument("quotientBasis: subspace vectors not in ambient space");
    Mat<K> work(ambientDim, subspace.cols() + ambientDim);
    Index used = subspace.cols();
    if (used > 0)
        work.leftCols(used) = subspace;
    Index rank = used > 0 ? rankOf(Mat<K>(work.leftCols(used))) : 0;
    std::vector<Index> chosen;
    for (Index i = 0; i < ambientDim && rank + static_cast<Index>(chosen.size()) < ambientDim; ++i) {
        Vec<K> ei = Vec<K>::Zero(ambientDim);
        ei(i) = K(1);
        work.col(used) = ei;
        Index newRank = rankOf(Mat<K>(work.leftCols(used + 1)));
        if (newRank > rank + static_cast<Index>(chosen.size())) {
            chosen.push_back(i);
            ++used;
        }
    }
    Mat<K> out = Mat<K>::Zero(ambientDim, static_cast<Index>(chosen.size()));
    for (size_t j = 0; j < chosen.size(); ++j)
        out(chosen[j], static_cast<Index>(j)) = K(1);
    return out;
}

/* Column-major flattening, the vectorization used to put linear maps into
 * ordinary linear systems. */
template <class K>
Vec<K> vectorize(const Mat<K>& m) {
    Vec<K> v(m.rows() * m.cols());
    Index k = 0;
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            v(k++) = m(i, j);
    return v;
}

template <class K>
Mat<K> unvectorize(const Vec<K>& v, Index rows, Index cols) {
    if (v.size() != rows * cols)
        throw std::invalid_argument("unvectorize: size mismatch");
    Mat<K> m(rows, cols);
    Index k = 0;
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            m(i, j) = v(k++);
    return m;
}

template <class K>
Mat<K> hstack(const std::vector<Mat<K>>& blocks, Index rows) {
    Index cols = 0;
    for (const auto& b : blocks)
        cols += b.cols();
    Mat<K> out(rows, cols);
    Index at = 0;
    for (const auto& b : blocks) {
        if (b.cols() == 0)
            continue;
        if (b.rows() != rows)
            throw std::invalid_argument("hstack: row mismatch");
        out.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return out;
}

}  // namespace homdim
