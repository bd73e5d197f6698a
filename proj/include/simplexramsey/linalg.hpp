#pragma once

#include <Eigen/Dense>

#include <stdexcept>

#include "simplexramsey/rational.hpp"

namespace sr {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = DenseMatrix<Rational>;
using RVector = DenseVector<Rational>;

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact Gaussian elimination; the pivot test is exact nonzero, not magnitude.
template <typename Scalar>
DenseVector<Scalar> solve_exact(DenseMatrix<Scalar> a, DenseVector<Scalar> b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_exact: dimension mismatch");
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index row = col; row < n; ++row) {
            if (a(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw SingularSystem("solve_exact: singular system");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            std::swap(b(pivot), b(col));
        }
        for (Eigen::Index row = col + 1; row < n; ++row) {
            if (a(row, col) == 0) continue;
            const Scalar factor = a(row, col) / a(col, col);
            a.row(row) -= factor * a.row(col);
            b(row) -= factor * b(col);
        }
    }
    DenseVector<Scalar> x(n);
    for (Eigen::Index row = n - 1; row >= 0; --row) {
        Scalar acc = b(row);
        for (Eigen::Index col = row + 1; col < n; ++col) acc -= a(row, col) * x(col);
        x(row) = acc / a(row, row);
    }
    return x;
}

// Exact determinant by elimination with the same nonzero pivot rule.
template <typename Scalar>
Scalar determinant_exact(DenseMatrix<Scalar> a) {
    const Eigen::Index n = a.rows();
    Scalar det{1};
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index row = col; row < n; ++row) {
            if (a(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return Scalar{0};
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index row = col + 1; row < n; ++row) {
            if (a(row, col) == 0) continue;
            const Scalar factor = a(row, col) / a(col, col);
            a.row(row) -= factor * a.row(col);
        }
    }
    return det;
}

}  // namespace sr
