#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>
#include <vector>

#include "simplexramsey/linalg.hpp"
#include "simplexramsey/rational.hpp"

namespace sr {

struct InvalidDistanceMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicatePoints : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ToleranceExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact symmetric matrix of squared pairwise distances; the canonical
/// simplex representation. Indices are 0-based internally, 1-based in I/O.
class SquaredDistanceMatrix {
public:
    explicit SquaredDistanceMatrix(RMatrix entries);

    Eigen::Index size() const { return entries_.rows(); }
    const Rational& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
    const RMatrix& entries() const { return entries_; }

    bool operator==(const SquaredDistanceMatrix& other) const {
        return entries_ == other.entries_;
    }

private:
    RMatrix entries_;
};

/// Inner products of edge vectors relative to vertex 0; positive definite
/// exactly when the source matrix is a nondegenerate simplex.
struct GramMatrix {
    RMatrix entries;
};

struct CircumcenterResult {
    std::vector<Rational> lambdas;
    Rational two_rho_sq;  // equals 2*rho^2

    Rational rho_sq() const { return two_rho_sq / 2; }
};

struct PointCloud {
    // One row per point.
    Eigen::MatrixXd points;
};

using VertexPair = std::pair<Eigen::Index, Eigen::Index>;

GramMatrix gram_from_sqdist(const SquaredDistanceMatrix& m);

bool is_nondegenerate_simplex(const SquaredDistanceMatrix& m);

// Maximum off-diagonal entry and all pairs (i<j) attaining it.
std::pair<Rational, std::vector<VertexPair>> diameter_sq(const SquaredDistanceMatrix& m);

// Unique exact solution of the system sum_j lambda_j * M_ij = 2 rho^2,
// sum lambda = 1. Requires a nondegenerate simplex.
CircumcenterResult circumcenter_barycentric(const SquaredDistanceMatrix& m);

// Closed-hull membership: every barycentric coordinate >= 0.
bool circumcenter_in_hull(const CircumcenterResult& c);

// True certifies NOT diameter-Ramsey: circumradius strictly exceeds diam/sqrt(2).
bool cf_obstruction(const Rational& rho_sq, const Rational& diam_sq);

// Embeds the simplex in dimension n-1 via Cholesky of the Gram matrix,
// first point at the origin. Squared distances must reproduce the input
// within relative tolerance tol.
PointCloud realize(const SquaredDistanceMatrix& m, double tol);

SquaredDistanceMatrix sqdist_from_points(const std::vector<std::vector<Rational>>& points);

}  // namespace sr
