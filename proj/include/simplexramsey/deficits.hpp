#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simplexramsey/exactgeom.hpp"

namespace sr {

struct NotADiameterPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooManyVertices : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex subsets are sorted 0-based index lists.
using VertexSubset = std::vector<Eigen::Index>;

// Default cap on n for subset enumeration; SIMPLEX_RAMSEY_MAX_N overrides.
Eigen::Index vertex_cap();

/// Pairwise squared shortfalls from the diameter, relative to a chosen
/// diameter-attaining pair.
struct DeficitProfile {
    Eigen::Index n = 0;
    VertexPair diameter_pair;
    Rational diam_sq;
    RMatrix deficits;  // symmetric, zero diagonal; deficit at the diameter pair is 0

    const Rational& deficit(Eigen::Index i, Eigen::Index j) const { return deficits(i, j); }
};

struct SubsetFamily {
    std::vector<VertexSubset> subsets;
};

/// Nonnegative masses alpha_B over admissible subsets plus the reserve
/// alpha_0 = D^2 - sum alpha_B, certifying the deficit criterion.
struct DeficitDecomposition {
    Eigen::Index n = 0;
    std::map<VertexSubset, Rational> masses;  // every stored mass is > 0
    Rational reserve;                         // alpha_0 >= 0
    VertexPair diameter_pair;
    Rational diam_sq;
};

struct EmbeddingFactor {
    bool is_reserve = false;
    VertexSubset collapsed;  // empty for the reserve factor
    Rational side_sq;
    Eigen::Index vertex_count = 0;  // number of distinct vertices of the factor
};

/// The witness configuration q_1..q_n inside a product of regular
/// simplices, kept symbolic: factors, a per-vertex assignment, and the
/// exact derived squared-distance matrix.
struct ProductEmbedding {
    std::vector<EmbeddingFactor> factors;
    // assignment[i][k]: index of the factor-k vertex that q_i occupies.
    // In a collapse factor S_B the shared apex u_B has index 0 and the
    // free vertices v_i follow in increasing i; in the reserve factor the
    // vertices are v_1..v_n in order (all index 0 when it is a singleton).
    std::vector<std::vector<Eigen::Index>> assignment;
    RMatrix derived_sqdist;
};

DeficitProfile deficit_profile(const SquaredDistanceMatrix& m, VertexPair pair);

// (sum of all deficits <= D^2, the sum). True certifies diameter-Ramsey
// via the pairwise special case.
std::pair<bool, Rational> pairwise_criterion(const DeficitProfile& p);

// All B with |B| >= 2 not containing the diameter pair and containing no
// zero-deficit pair, ordered by size then lexicographically.
SubsetFamily admissible_subsets(const DeficitProfile& p);

// Exact-rational phase-I simplex over the admissible family. Returns a
// verifying certificate when the deficit system is feasible.
std::optional<DeficitDecomposition> find_decomposition(const DeficitProfile& p);

bool verify_decomposition(const DeficitProfile& p, const DeficitDecomposition& d);

ProductEmbedding build_embedding(const DeficitDecomposition& d);

// Floating coordinates for q_1..q_n: each nontrivial factor is realized
// as a regular simplex and the per-factor coordinates are concatenated.
// Pairwise squared distances match derived_sqdist within relative tol.
Eigen::MatrixXd realize_embedding(const ProductEmbedding& e, double tol);

// Euclidean product metric on the index pairs (i,j), ordered with the
// second factor varying fastest. An empty optional is the single-point
// factor, so product with a point acts as the identity.
SquaredDistanceMatrix product_sqdist(const std::optional<SquaredDistanceMatrix>& m1,
                                     const std::optional<SquaredDistanceMatrix>& m2);

}  // namespace sr
