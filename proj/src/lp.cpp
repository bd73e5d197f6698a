#include "simplexramsey/lp.hpp"

#include <vector>

namespace sr {

std::optional<RVector> solve_feasibility(RMatrix a, RVector b,
                                         std::vector<Eigen::Index> basis_hint) {
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();

    if (basis_hint.size() != static_cast<size_t>(rows)) basis_hint.assign(rows, -1);
    std::vector<bool> column_hinted(static_cast<size_t>(cols), false);
    for (Eigen::Index i = 0; i < rows; ++i) {
        Eigen::Index& h = basis_hint[static_cast<size_t>(i)];
        if (h < 0) continue;
        bool valid = h < cols && !column_hinted[static_cast<size_t>(h)] && b(i) >= 0 &&
                     a(i, h) == 1;
        for (Eigen::Index r = 0; valid && r < rows; ++r)
            if (r != i && a(r, h) != 0) valid = false;
        if (valid)
            column_hinted[static_cast<size_t>(h)] = true;
        else
            h = -1;
    }

    for (Eigen::Index i = 0; i < rows; ++i) {
        if (basis_hint[static_cast<size_t>(i)] < 0 && b(i) < 0) {
            a.row(i) = -a.row(i);
            b(i) = -b(i);
        }
    }

    // Full tableau with one artificial per unhinted row; minimize their sum.
    // Row-major so pivot row operations run over contiguous storage.
    using Tableau = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Index total = cols + rows;
    Tableau tab(rows, total);
    tab.leftCols(cols) = a;
    tab.rightCols(rows) = Tableau::Identity(rows, rows);
    std::vector<Eigen::Index> basis(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Eigen::Index h = basis_hint[static_cast<size_t>(i)];
        basis[i] = h >= 0 ? h : cols + i;
    }

    // Reduced costs for cost vector (0,...,0,1,...,1): hinted basics cost 0,
    // so obj[j] = c_j - sum over artificial-basic rows of tab(i,j).
    RVector obj = RVector::Zero(total);
    for (Eigen::Index j = 0; j < total; ++j) {
        Rational colsum{0};
        for (Eigen::Index i = 0; i < rows; ++i)
            if (basis[i] >= cols) colsum += tab(i, j);
        obj(j) = (j >= cols ? Rational{1} : Rational{0}) - colsum;
    }

    // Dantzig pricing for speed; fall back to Bland's rule (which cannot
    // cycle) if the iteration count ever becomes suspicious.
    const long bland_after = 20 * static_cast<long>(rows + total);
    long iterations = 0;
    while (true) {
        Eigen::Index enter = -1;
        if (iterations++ < bland_after) {
            for (Eigen::Index j = 0; j < total; ++j)
                if (obj(j) < 0 && (enter < 0 || obj(j) < obj(enter))) enter = j;
        } else {
            for (Eigen::Index j = 0; j < total; ++j) {
                if (obj(j) < 0) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter < 0) break;

        Eigen::Index leave = -1;
        Rational best_ratio{0};
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (tab(i, enter) <= 0) continue;
            const Rational ratio = b(i) / tab(i, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) break;  // unbounded cannot happen in phase I; bail out

        const Rational pivot = tab(leave, enter);
        tab.row(leave) /= pivot;
        b(leave) /= pivot;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == leave || tab(i, enter) == 0) continue;
            const Rational factor = tab(i, enter);
            tab.row(i) -= factor * tab.row(leave);
            b(i) -= factor * b(leave);
        }
        const Rational obj_factor = obj(enter);
        if (obj_factor != 0) obj -= obj_factor * tab.row(leave).transpose();
        basis[leave] = enter;
    }

    // Phase-I optimum: the residual mass on artificial basics.
    Rational value{0};
    for (Eigen::Index i = 0; i < rows; ++i)
        if (basis[i] >= cols) value += b(i);
    if (value != 0) return std::nullopt;

    RVector x = RVector::Zero(cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        if (basis[i] < cols) x(basis[i]) = b(i);
    return x;
}

}  // namespace sr
