#include "simplexramsey/exactgeom.hpp"

#include <cmath>

namespace sr {

SquaredDistanceMatrix::SquaredDistanceMatrix(RMatrix entries) : entries_(std::move(entries)) {
    const Eigen::Index n = entries_.rows();
    if (n < 2 || entries_.cols() != n)
        throw InvalidDistanceMatrix("squared distance matrix must be square with n >= 2");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (entries_(i, i) != 0)
            throw InvalidDistanceMatrix("nonzero diagonal entry");
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (entries_(i, j) != entries_(j, i))
                throw InvalidDistanceMatrix("matrix not symmetric");
            if (entries_(i, j) <= 0)
                throw InvalidDistanceMatrix("off-diagonal entries must be strictly positive");
        }
    }
}

GramMatrix gram_from_sqdist(const SquaredDistanceMatrix& m) {
    const Eigen::Index k = m.size() - 1;
    RMatrix g(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            g(i, j) = (m(0, i + 1) + m(0, j + 1) - m(i + 1, j + 1)) / 2;
    return GramMatrix{std::move(g)};
}

bool is_nondegenerate_simplex(const SquaredDistanceMatrix& m) {
    const GramMatrix g = gram_from_sqdist(m);
    const Eigen::Index k = g.entries.rows();
    for (Eigen::Index lead = 1; lead <= k; ++lead) {
        RMatrix minor = g.entries.topLeftCorner(lead, lead);
        if (determinant_exact<Rational>(std::move(minor)) <= 0) return false;
    }
    return true;
}

std::pair<Rational, std::vector<VertexPair>> diameter_sq(const SquaredDistanceMatrix& m) {
    const Eigen::Index n = m.size();
    Rational best = m(0, 1);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (m(i, j) > best) best = m(i, j);
    std::vector<VertexPair> pairs;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (m(i, j) == best) pairs.emplace_back(i, j);
    return {best, pairs};
}

CircumcenterResult circumcenter_barycentric(const SquaredDistanceMatrix& m) {
    const Eigen::Index n = m.size();
    // Unknowns: lambda_0..lambda_{n-1}, mu = 2 rho^2.
    RMatrix a = RMatrix::Zero(n + 1, n + 1);
    RVector b = RVector::Zero(n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n) = -1;
    }
    for (Eigen::Index j = 0; j < n; ++j) a(n, j) = 1;
    b(n) = 1;
    RVector x = solve_exact<Rational>(std::move(a), std::move(b));
    CircumcenterResult result;
    result.lambdas.reserve(n);
    for (Eigen::Index i = 0; i < n; ++i) result.lambdas.push_back(x(i));
    result.two_rho_sq = x(n);
    if (result.two_rho_sq <= 0)
        throw SingularSystem("circumcenter system produced nonpositive 2*rho^2");
    return result;
}

bool circumcenter_in_hull(const CircumcenterResult& c) {
    for (const Rational& l : c.lambdas)
        if (l < 0) return false;
    return true;
}

bool cf_obstruction(const Rational& rho_sq, const Rational& diam_sq) {
    return 2 * rho_sq > diam_sq;
}

PointCloud realize(const SquaredDistanceMatrix& m, double tol) {
    const Eigen::Index n = m.size();
    const GramMatrix g = gram_from_sqdist(m);
    Eigen::MatrixXd gd(n - 1, n - 1);
    for (Eigen::Index i = 0; i < n - 1; ++i)
        for (Eigen::Index j = 0; j < n - 1; ++j)
            gd(i, j) = static_cast<double>(g.entries(i, j));
    Eigen::LLT<Eigen::MatrixXd> llt(gd);
    if (llt.info() != Eigen::Success)
        throw ToleranceExceeded("Cholesky factorization failed; Gram not numerically PD");
    Eigen::MatrixXd l = llt.matrixL();

    PointCloud cloud;
    cloud.points = Eigen::MatrixXd::Zero(n, n - 1);
    cloud.points.bottomRows(n - 1) = l;

    // Check the round trip against the exact input.
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double got = (cloud.points.row(i) - cloud.points.row(j)).squaredNorm();
            const double want = static_cast<double>(m(i, j));
            if (std::abs(got - want) > tol * std::max(1.0, std::abs(want)))
                throw ToleranceExceeded("realized distances exceed requested tolerance");
        }
    }
    return cloud;
}

SquaredDistanceMatrix sqdist_from_points(const std::vector<std::vector<Rational>>& points) {
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    if (n < 2) throw InvalidDistanceMatrix("need at least two points");
    const size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim) throw InvalidDistanceMatrix("points have mixed dimensions");
    RMatrix m = RMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            Rational d{0};
            for (size_t k = 0; k < dim; ++k) {
                const Rational diff = points[i][k] - points[j][k];
                d += diff * diff;
            }
            if (d == 0) throw DuplicatePoints("duplicate points in input");
            m(i, j) = d;
            m(j, i) = d;
        }
    }
    return SquaredDistanceMatrix(std::move(m));
}

}  // namespace sr
