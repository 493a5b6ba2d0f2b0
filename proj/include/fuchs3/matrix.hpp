#pragma once

#include <Eigen/Core>
#include <type_traits>
#include <vector>

#include "fuchs3/errors.hpp"
#include "fuchs3/rational.hpp"

namespace fuchs3 {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

// Fraction-free (Bareiss) determinant over Q. Each row is first scaled to
// integers by the lcm of its denominators. Pivot: first nonzero entry of the
// column, rows scanned top-down.
Rational det_bareiss(const Matrix<Rational>& M);

// Gaussian elimination determinant over any field; same pivot rule.
template <class S>
S det_gauss(Matrix<S> M)
{
    if (M.rows() != M.cols())
        throw NotSquare("det of " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
    const Index n = M.rows();
    S d(1);
    for (Index k = 0; k < n; ++k) {
        Index p = k;
        while (p < n && is_zero(M(p, k)))
            ++p;
        if (p == n)
            return S(0);
        if (p != k) {
            M.row(p).swap(M.row(k));
            d = -d;
        }
        d = d * M(k, k);
        S inv = S(1) / M(k, k);
        for (Index i = k + 1; i < n; ++i) {
            if (is_zero(M(i, k)))
                continue;
            S f = M(i, k) * inv;
            for (Index j = k + 1; j < n; ++j)
                if (!is_zero(M(k, j)))
                    M(i, j) = M(i, j) - f * M(k, j);
        }
    }
    return d;
}

template <class S>
S det(const Matrix<S>& M)
{
    if constexpr (std::is_same_v<S, Rational>) {
        if (M.rows() != M.cols())
            throw NotSquare("det of " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
        return det_bareiss(M);
    }
    else {
        return det_gauss(M);
    }
}

// Reduced row echelon form with the deterministic pivot rule.
template <class S>
struct Echelon {
    Matrix<S> R;
    std::vector<Index> pivots;  // pivot column of each nonzero row
    Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
Echelon<S> rref(Matrix<S> M)
{
    const Index rows = M.rows(), cols = M.cols();
    Echelon<S> e;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && is_zero(M(p, c)))
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            M.row(p).swap(M.row(r));
        S inv = S(1) / M(r, c);
        for (Index j = c; j < cols; ++j)
            if (!is_zero(M(r, j)))
                M(r, j) = M(r, j) * inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(M(i, c)))
                continue;
            S f = M(i, c);
            for (Index j = c; j < cols; ++j)
                if (!is_zero(M(r, j)))
                    M(i, j) = M(i, j) - f * M(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.R = std::move(M);
    return e;
}

template <class S>
Index rank(const Matrix<S>& M)
{
    return rref(M).rank();
}

template <class S>
std::vector<Vector<S>> nullspace_from(const Echelon<S>& e, Index cols)
{
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Index c : e.pivots)
        is_pivot[c] = true;
    std::vector<Vector<S>> basis;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector<S> v = Vector<S>::Constant(cols, S(0));
        v(f) = S(1);
        for (size_t r = 0; r < e.pivots.size(); ++r)
            v(e.pivots[r]) = -e.R(static_cast<Index>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One basis vector per free column, with 1 in that column.
template <class S>
std::vector<Vector<S>> nullspace(const Matrix<S>& M)
{
    return nullspace_from(rref(M), M.cols());
}

template <class S>
struct Solution {
    Vector<S> particular;             // free variables set to zero
    std::vector<Vector<S>> basis;     // nullspace of M
    std::vector<Index> free_columns;  // column carrying the 1 in each basis vector
    Index rank = 0;
};

template <class S>
Solution<S> solve(const Matrix<S>& M, const Vector<S>& b)
{
    if (M.rows() != b.size())
        throw DimensionMismatch("solve: rhs length");
    const Index cols = M.cols();
    Matrix<S> A(M.rows(), cols + 1);
    A.leftCols(cols) = M;
    A.col(cols) = b;
    Echelon<S> e = rref(A);
    if (!e.pivots.empty() && e.pivots.back() == cols)
        throw Inconsistent("rank(M) = " + std::to_string(e.rank() - 1) + " < rank([M|b]) = " +
                           std::to_string(e.rank()));
    Solution<S> s;
    s.rank = e.rank();
    s.particular = Vector<S>::Constant(cols, S(0));
    for (size_t r = 0; r < e.pivots.size(); ++r)
        s.particular(e.pivots[r]) = e.R(static_cast<Index>(r), cols);
    Echelon<S> left{e.R.leftCols(cols), e.pivots};
    s.basis = nullspace_from(left, cols);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Index c : e.pivots)
        is_pivot[c] = true;
    for (Index f = 0; f < cols; ++f)
        if (!is_pivot[f])
            s.free_columns.push_back(f);
    return s;
}

template <class S>
Vector<S> mat_vec(const Matrix<S>& M, const Vector<S>& x)
{
    Vector<S> y = Vector<S>::Constant(M.rows(), S(0));
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j)
            if (!is_zero(M(i, j)) && !is_zero(x(j)))
                y(i) = y(i) + M(i, j) * x(j);
    return y;
}

} // namespace fuchs3
