#pragma once

#include "tqft/cyclotomic.hpp"
#include "tqft/rational.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace tqft {

template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct Rref {
    MatX<S> mat;                  // reduced row echelon form
    std::vector<int> pivot_cols;  // one per nonzero row, increasing
    int rank = 0;
};

/// Reduced row echelon form with first-nonzero (lexicographic) pivoting.
/// Deterministic, so every basis derived from it is canonical.
template <class S>
Rref<S> rref(MatX<S> a) {
    Rref<S> out;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (!scalar_is_zero(a(i, col))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) a.row(piv).swap(a.row(row));
        const S inv = scalar_inv(a(row, col));
        for (Eigen::Index j = col; j < cols; ++j) a(row, j) = a(row, j) * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || scalar_is_zero(a(i, col))) continue;
            const S f = a(i, col);
            for (Eigen::Index j = col; j < cols; ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    out.rank = static_cast<int>(row);
    out.mat = std::move(a);
    return out;
}

template <class S>
int rank(const MatX<S>& a) {
    return rref(a).rank;
}

/// Canonical kernel basis: one column per free coordinate of the RREF,
/// with a unit entry at that coordinate.
template <class S>
MatX<S> kernel_basis(const MatX<S>& a, const S& zero, const S& one) {
    Rref<S> r = rref(a);
    const Eigen::Index cols = a.cols();
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<int> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(static_cast<int>(c));
    MatX<S> k(cols, static_cast<Eigen::Index>(free_cols.size()));
    k.setConstant(zero);
    for (size_t j = 0; j < free_cols.size(); ++j) {
        k(free_cols[j], static_cast<Eigen::Index>(j)) = one;
        for (int i = 0; i < r.rank; ++i) {
            const S& v = r.mat(i, free_cols[j]);
            if (!scalar_is_zero(v)) k(r.pivot_cols[static_cast<size_t>(i)], static_cast<Eigen::Index>(j)) = zero - v;
        }
    }
    return k;
}

template <class S>
struct ColumnSpace {
    MatX<S> basis;                // reduced column echelon basis of the column space
    std::vector<int> pivot_rows;  // unit rows of `basis`, increasing
};

/// Canonical (reduced column echelon) basis of the column space, with
/// lexicographic pivot-row preference.
template <class S>
ColumnSpace<S> column_space(const MatX<S>& a) {
    Rref<S> r = rref(MatX<S>(a.transpose()));
    ColumnSpace<S> out;
    out.basis = r.mat.topRows(r.rank).transpose();
    out.pivot_rows = r.pivot_cols;
    return out;
}

/// Solve a * x = b for all columns of b. Throws if any system is inconsistent.
template <class S>
MatX<S> solve(const MatX<S>& a, const MatX<S>& b, const S& zero) {
    MatX<S> aug(a.rows(), a.cols() + b.cols());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(b.cols()) = b;
    Rref<S> r = rref(aug);
    MatX<S> x(a.cols(), b.cols());
    x.setConstant(zero);
    for (int i = 0; i < r.rank; ++i) {
        int pc = r.pivot_cols[static_cast<size_t>(i)];
        if (pc >= a.cols()) throw std::domain_error("solve: inconsistent linear system");
        for (Eigen::Index j = 0; j < b.cols(); ++j) x(pc, j) = r.mat(i, a.cols() + j);
    }
    // The solution is exact only if non-pivot columns of `a` never interact;
    // verify rather than assume.
    MatX<S> check = a * x;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (!scalar_is_zero(check(i, j) - b(i, j))) throw std::domain_error("solve: inconsistent linear system");
    return x;
}

/// Matrices of zeros/ones without requiring a default-constructed semantic zero.
template <class S>
MatX<S> constant_matrix(Eigen::Index rows, Eigen::Index cols, const S& value) {
    MatX<S> m(rows, cols);
    m.setConstant(value);
    return m;
}

template <class S>
MatX<S> identity_matrix(Eigen::Index n, const S& zero, const S& one) {
    MatX<S> m = constant_matrix(n, n, zero);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

}  // namespace tqft
